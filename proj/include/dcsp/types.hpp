#ifndef DCSP_TYPES_HPP
#define DCSP_TYPES_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcsp {

/// Domain values are the canonical integers 0..|D|-1.
using DomainValue = int;

using Tuple = std::vector<DomainValue>;

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// A named relation R ⊆ D^arity. Tuples are kept sorted and duplicate-free,
/// so relations with equal extension compare equal entry-wise.
struct Relation {
    std::string id;
    int arity = 0;
    std::vector<Tuple> tuples;

    void normalize();
    bool contains(const Tuple& t) const;
    bool same_extension(const Relation& other) const;
    void validate(int domain_size) const;

    bool operator==(const Relation&) const = default;
};

struct ConstraintLanguage {
    int domain_size = 0;
    std::vector<Relation> relations;

    const Relation* find(const std::string& id) const;
    void validate() const;
};

/// A constraint (s, R): scope is a tuple of variable ids, relation is an
/// index into the owning instance's relation table.
struct Constraint {
    std::vector<int> scope;
    int relation = -1;

    bool operator==(const Constraint&) const = default;
};

struct Instance {
    int num_variables = 0;
    int domain_size = 0;
    std::vector<Relation> relations;
    std::vector<Constraint> constraints;

    const Relation& relation_of(const Constraint& c) const { return relations[c.relation]; }
    void validate() const;

    ConstraintLanguage language() const { return ConstraintLanguage{domain_size, relations}; }

    bool operator==(const Instance&) const = default;
};

/// Channel label ℓ_{x,c} = (S, R): the 1-based scope positions occupied by x,
/// plus the relation symbol. Positions are kept sorted.
struct EdgeLabel {
    std::vector<int> positions;
    std::string relation_id;

    auto operator<=>(const EdgeLabel&) const = default;
};

/// Bipartite variable/constraint graph. Nodes are indexed 0..n+m-1 with
/// variables first; there is at most one edge between any two nodes.
struct FactorGraph {
    struct Edge {
        int variable = -1;
        int constraint = -1;  // node index, i.e. n + constraint position
        EdgeLabel label;
    };

    int num_variables = 0;
    int num_constraints = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident;  // node -> edge indices

    int num_nodes() const { return num_variables + num_constraints; }
    bool is_variable_node(int v) const { return v < num_variables; }
    int other_end(int edge, int node) const {
        const Edge& e = edges[edge];
        return e.variable == node ? e.constraint : e.variable;
    }
};

/// Total assignments use one value per variable; -1 marks unassigned slots
/// in partial assignments.
using Assignment = std::vector<DomainValue>;

FactorGraph build_factor_graph(const Instance& instance);

/// True iff every constraint's scope image lies in its relation.
/// Throws if the assignment is partial.
bool evaluate(const Instance& instance, const Assignment& a);

bool is_connected(const FactorGraph& g);

std::string label_to_string(const EdgeLabel& label);

}  // namespace dcsp

#endif
