#ifndef DCSP_REFINEMENT_HPP
#define DCSP_REFINEMENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "dcsp/types.hpp"

namespace dcsp {

/// Partition of factor-graph nodes by iterated degree at some round.
/// Ranks are canonical: they index the lexicographic order of the serialized
/// degree values, so equal instances always produce equal ranks.
struct DegreePartition {
    int round = 0;
    int num_classes = 0;
    int rounds_to_fixpoint = 0;  // set by refine(); first k with |P_k| = |P_{k-1}|
    std::vector<int> rank;       // per node, variables first

    std::vector<std::vector<int>> classes() const;
    std::vector<int> variable_class_ranks() const;  // sorted distinct ranks among variables
    int variable_count_hint = 0;                    // number of variable nodes
};

/// Canonical byte encoding of one degree value: own kind tag plus the sorted
/// multiset of (channel label, previous rank of the neighbour) entries.
/// Both the centralized and the distributed refinement rank by the
/// lexicographic order of these strings.
std::string encode_degree_value(bool is_variable,
                                std::vector<std::pair<std::string, int>> entries);

std::string encode_label(const EdgeLabel& label);

/// Iterates the degree refinement until the induced partition repeats.
DegreePartition refine(const FactorGraph& g);

/// Partitions for rounds 0..rounds_to_fixpoint.
std::vector<DegreePartition> refine_history(const FactorGraph& g);

/// True iff every class of p (round k) is contained in a class of q (round k' <= k).
bool partition_refines(const DegreePartition& p, const DegreePartition& q);

/// Disjoint union of two instances over the same domain; relations with equal
/// extension are identified (a channel label stands for the relation itself).
Instance disjoint_union(const Instance& i1, const Instance& i2);

/// Checks for a class-size-preserving matching between the two sides of the
/// refined disjoint union.
bool same_degree_sequence(const Instance& i1, const Instance& i2);

}  // namespace dcsp

#endif
