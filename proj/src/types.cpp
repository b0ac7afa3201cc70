#include "dcsp/types.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dcsp {

void Relation::normalize() {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

bool Relation::contains(const Tuple& t) const {
    return std::binary_search(tuples.begin(), tuples.end(), t);
}

bool Relation::same_extension(const Relation& other) const {
    return arity == other.arity && tuples == other.tuples;
}

void Relation::validate(int domain_size) const {
    if (arity <= 0)
        throw ValidationError("relation " + id + ": arity must be positive");
    if (!std::is_sorted(tuples.begin(), tuples.end()))
        throw ValidationError("relation " + id + ": tuples not normalized");
    for (const Tuple& t : tuples) {
        if (static_cast<int>(t.size()) != arity)
            throw ValidationError("relation " + id + ": tuple length != arity");
        for (DomainValue d : t)
            if (d < 0 || d >= domain_size)
                throw ValidationError("relation " + id + ": value out of domain");
    }
    if (std::adjacent_find(tuples.begin(), tuples.end()) != tuples.end())
        throw ValidationError("relation " + id + ": duplicate tuple");
}

const Relation* ConstraintLanguage::find(const std::string& id) const {
    for (const Relation& r : relations)
        if (r.id == id) return &r;
    return nullptr;
}

void ConstraintLanguage::validate() const {
    if (domain_size < 1) throw ValidationError("domain size must be >= 1");
    for (size_t i = 0; i < relations.size(); ++i) {
        relations[i].validate(domain_size);
        for (size_t j = i + 1; j < relations.size(); ++j)
            if (relations[i].id == relations[j].id)
                throw ValidationError("duplicate relation id " + relations[i].id);
    }
}

void Instance::validate() const {
    language().validate();
    if (num_variables < 0) throw ValidationError("negative variable count");
    for (const Constraint& c : constraints) {
        if (c.relation < 0 || c.relation >= static_cast<int>(relations.size()))
            throw ValidationError("constraint references unknown relation");
        const Relation& r = relations[c.relation];
        if (static_cast<int>(c.scope.size()) != r.arity)
            throw ValidationError("constraint on " + r.id + ": scope length != arity");
        for (int v : c.scope)
            if (v < 0 || v >= num_variables)
                throw ValidationError("constraint on " + r.id + ": variable id out of range");
    }
}

FactorGraph build_factor_graph(const Instance& instance) {
    instance.validate();
    FactorGraph g;
    g.num_variables = instance.num_variables;
    g.num_constraints = static_cast<int>(instance.constraints.size());
    g.incident.resize(g.num_nodes());
    for (int ci = 0; ci < g.num_constraints; ++ci) {
        const Constraint& c = instance.constraints[ci];
        const Relation& r = instance.relation_of(c);
        // Repeated variables collapse to one channel with a multi-position label.
        std::map<int, std::vector<int>> positions;
        for (int i = 0; i < static_cast<int>(c.scope.size()); ++i)
            positions[c.scope[i]].push_back(i + 1);
        for (auto& [x, pos] : positions) {
            int e = static_cast<int>(g.edges.size());
            g.edges.push_back({x, g.num_variables + ci, EdgeLabel{pos, r.id}});
            g.incident[x].push_back(e);
            g.incident[g.num_variables + ci].push_back(e);
        }
    }
    return g;
}

bool evaluate(const Instance& instance, const Assignment& a) {
    if (static_cast<int>(a.size()) != instance.num_variables)
        throw ValidationError("assignment size != variable count");
    for (DomainValue d : a)
        if (d < 0 || d >= instance.domain_size)
            throw ValidationError("assignment is partial or out of domain");
    Tuple image;
    for (const Constraint& c : instance.constraints) {
        image.clear();
        for (int v : c.scope) image.push_back(a[v]);
        if (!instance.relation_of(c).contains(image)) return false;
    }
    return true;
}

bool is_connected(const FactorGraph& g) {
    int total = g.num_nodes();
    if (total <= 1) return true;
    std::vector<char> seen(total, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident[v]) {
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == total;
}

std::string label_to_string(const EdgeLabel& label) {
    std::ostringstream out;
    out << "({";
    for (size_t i = 0; i < label.positions.size(); ++i)
        out << (i ? "," : "") << label.positions[i];
    out << "}," << label.relation_id << ")";
    return out.str();
}

}  // namespace dcsp
