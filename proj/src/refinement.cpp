#include "dcsp/refinement.hpp"

#include <algorithm>
#include <map>

#include "dcsp/codec.hpp"

namespace dcsp {

std::vector<std::vector<int>> DegreePartition::classes() const {
    std::vector<std::vector<int>> out(num_classes);
    for (int v = 0; v < static_cast<int>(rank.size()); ++v) out[rank[v]].push_back(v);
    return out;
}

std::vector<int> DegreePartition::variable_class_ranks() const {
    std::vector<int> out;
    for (int v = 0; v < variable_count_hint; ++v) out.push_back(rank[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string encode_label(const EdgeLabel& label) {
    std::string out;
    codec::put_varint(out, label.positions.size());
    for (int p : label.positions) codec::put_varint(out, p);
    codec::put_bytes(out, label.relation_id);
    return out;
}

std::string encode_degree_value(bool is_variable,
                                std::vector<std::pair<std::string, int>> entries) {
    std::sort(entries.begin(), entries.end());
    std::string out;
    out.push_back(is_variable ? '\x00' : '\x01');
    codec::put_varint(out, entries.size());
    for (const auto& [label_bytes, rank] : entries) {
        codec::put_bytes(out, label_bytes);
        codec::put_varint(out, rank);
    }
    return out;
}

namespace {

// One refinement round: ranks by the lexicographic order of the round's
// serialized degree values.
std::vector<int> next_ranks(const FactorGraph& g, const std::vector<int>& prev,
                            const std::vector<std::string>& label_bytes, int& classes_out) {
    int total = g.num_nodes();
    std::vector<std::string> value(total);
    for (int v = 0; v < total; ++v) {
        std::vector<std::pair<std::string, int>> entries;
        entries.reserve(g.incident[v].size());
        for (int e : g.incident[v])
            entries.emplace_back(label_bytes[e], prev[g.other_end(e, v)]);
        value[v] = encode_degree_value(g.is_variable_node(v), std::move(entries));
    }
    std::vector<std::string> order = value;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    classes_out = static_cast<int>(order.size());
    std::vector<int> rank(total);
    for (int v = 0; v < total; ++v)
        rank[v] = static_cast<int>(std::lower_bound(order.begin(), order.end(), value[v]) -
                                   order.begin());
    return rank;
}

DegreePartition make_partition(const FactorGraph& g, std::vector<int> rank, int classes,
                               int round) {
    DegreePartition p;
    p.round = round;
    p.num_classes = classes;
    p.rank = std::move(rank);
    p.variable_count_hint = g.num_variables;
    return p;
}

}  // namespace

std::vector<DegreePartition> refine_history(const FactorGraph& g) {
    int total = g.num_nodes();
    std::vector<std::string> label_bytes(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) label_bytes[e] = encode_label(g.edges[e].label);

    std::vector<DegreePartition> history;
    std::vector<int> rank(total);
    for (int v = 0; v < total; ++v) rank[v] = g.is_variable_node(v) ? 0 : 1;
    int classes = 0;
    for (int v = 0; v < total; ++v) classes = std::max(classes, rank[v] + 1);
    if (total == 0) classes = 0;
    history.push_back(make_partition(g, rank, classes, 0));

    // Partitions only refine, so the class count is stationary exactly at the
    // fixpoint.
    for (int k = 1;; ++k) {
        int next_classes = 0;
        std::vector<int> next = next_ranks(g, history.back().rank, label_bytes, next_classes);
        history.push_back(make_partition(g, std::move(next), next_classes, k));
        if (next_classes == history[k - 1].num_classes) break;
    }
    int fix = static_cast<int>(history.size()) - 1;
    for (DegreePartition& p : history) p.rounds_to_fixpoint = fix;
    return history;
}

DegreePartition refine(const FactorGraph& g) {
    return refine_history(g).back();
}

bool partition_refines(const DegreePartition& p, const DegreePartition& q) {
    if (p.rank.size() != q.rank.size()) return false;
    std::map<int, int> image;
    for (size_t v = 0; v < p.rank.size(); ++v) {
        auto [it, fresh] = image.emplace(p.rank[v], q.rank[v]);
        if (!fresh && it->second != q.rank[v]) return false;
    }
    return true;
}

Instance disjoint_union(const Instance& i1, const Instance& i2) {
    if (i1.domain_size != i2.domain_size)
        throw ValidationError("disjoint union requires equal domains");
    Instance u;
    u.domain_size = i1.domain_size;
    u.num_variables = i1.num_variables + i2.num_variables;
    u.relations = i1.relations;
    u.constraints = i1.constraints;

    auto merged_index = [&u](const Relation& r) {
        for (size_t i = 0; i < u.relations.size(); ++i)
            if (u.relations[i].same_extension(r)) return static_cast<int>(i);
        Relation copy = r;
        // Avoid id clashes between distinct relations sharing a name.
        while (u.language().find(copy.id) != nullptr) copy.id += "'";
        u.relations.push_back(copy);
        return static_cast<int>(u.relations.size() - 1);
    };

    std::vector<int> relation_map(i2.relations.size());
    for (size_t i = 0; i < i2.relations.size(); ++i)
        relation_map[i] = merged_index(i2.relations[i]);
    for (const Constraint& c : i2.constraints) {
        Constraint shifted = c;
        shifted.relation = relation_map[c.relation];
        for (int& v : shifted.scope) v += i1.num_variables;
        u.constraints.push_back(shifted);
    }
    return u;
}

bool same_degree_sequence(const Instance& i1, const Instance& i2) {
    if (i1.domain_size != i2.domain_size) return false;
    if (i1.num_variables != i2.num_variables) return false;
    if (i1.constraints.size() != i2.constraints.size()) return false;
    Instance u = disjoint_union(i1, i2);
    FactorGraph g = build_factor_graph(u);
    DegreePartition p = refine(g);

    auto side = [&](int node) {
        if (node < i1.num_variables) return 0;
        if (node < u.num_variables) return 1;
        return node - u.num_variables < static_cast<int>(i1.constraints.size()) ? 0 : 1;
    };
    std::vector<int> balance(p.num_classes, 0);
    for (int v = 0; v < g.num_nodes(); ++v) balance[p.rank[v]] += side(v) == 0 ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

}  // namespace dcsp
