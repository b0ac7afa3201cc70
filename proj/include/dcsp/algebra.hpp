#ifndef DCSP_ALGEBRA_HPP
#define DCSP_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "dcsp/solve.hpp"
#include "dcsp/types.hpp"

namespace dcsp {

/// An operation f: D^arity -> D. Small operations carry a dense value table
/// indexed by the lexicographic rank of the argument tuple; symmetric
/// operations of large arity carry one value per argument multiset instead
/// (indexed by multiset_rank), which keeps them representable when |D|^arity
/// does not fit in memory.
class Operation {
public:
    enum class Rep { dense, multiset };

    static Operation from_dense(int domain_size, int arity, std::vector<DomainValue> table);
    static Operation from_multiset(int domain_size, int arity, std::vector<DomainValue> table);
    static Operation projection(int domain_size, int arity, int coordinate);
    static Operation identity(int domain_size);

    DomainValue eval(const Tuple& args) const;
    DomainValue eval_histogram(const std::vector<int>& histogram) const;  // multiset rep only

    int domain_size() const { return domain_size_; }
    int arity() const { return arity_; }
    Rep rep() const { return rep_; }
    const std::vector<DomainValue>& table() const { return table_; }

    bool operator==(const Operation&) const = default;

private:
    int domain_size_ = 0;
    int arity_ = 0;
    Rep rep_ = Rep::dense;
    std::vector<DomainValue> table_;
};

/// Multisets of size r over D, enumerated in lexicographic order of their
/// sorted tuples. A multiset is handled as its histogram over D.
std::vector<std::vector<int>> enumerate_histograms(int domain_size, int r);
int multiset_rank(const std::vector<int>& histogram);

/// All tuples of D^r in lexicographic order (the pinned tuple order).
std::vector<Tuple> tuple_order(int domain_size, int r);
int tuple_rank(const Tuple& t, int domain_size);

struct URelation {
    Relation relation;               // arity |D|^r, one tuple per r-ary polymorphism
    std::vector<Tuple> order;        // the fixed order t_1, ..., t_{|D|^r} on D^r
    int r = 0;
};

struct MinimalImage {
    std::vector<DomainValue> image;  // J, sorted
    Operation witness;               // unary polymorphism with witness(D) = J
};

bool is_polymorphism(const Operation& f, const ConstraintLanguage& gamma,
                     SolveOptions opt = {});
bool is_symmetric(const Operation& f);

/// The instance over variables D^r whose solutions are exactly the r-ary
/// polymorphisms of gamma.
Instance indicator_problem(const ConstraintLanguage& gamma, int r, SolveOptions opt = {});

/// Searches assignments of the multiset quotient of the indicator problem,
/// so the result is symmetric by construction; deterministic lexicographic
/// order.
std::optional<Operation> find_symmetric_polymorphism(const ConstraintLanguage& gamma, int r,
                                                     SolveOptions opt = {});

/// Desk-scale surrogate for "symmetric polymorphisms of all arities": checks
/// every arity up to max_r only.
bool has_symmetric_all_arities(const ConstraintLanguage& gamma, int max_r,
                               SolveOptions opt = {});

URelation u_relation(const ConstraintLanguage& gamma, int r, SolveOptions opt = {});

MinimalImage minimal_unary_image(const ConstraintLanguage& gamma);

/// Gamma plus the singleton {d} for every d in the minimal unary image and
/// the full domain, deduplicated by extension.
ConstraintLanguage augmented_language(const ConstraintLanguage& gamma);

}  // namespace dcsp

#endif
