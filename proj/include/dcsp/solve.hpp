#ifndef DCSP_SOLVE_HPP
#define DCSP_SOLVE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "dcsp/refinement.hpp"
#include "dcsp/types.hpp"

namespace dcsp {

struct SolveOptions {
    uint64_t budget = uint64_t{1} << 26;  // value-assignment attempts
};

/// Backtracking search, lexicographic variable and value order. Returns the
/// lexicographically least satisfying assignment or nothing. Throws
/// BudgetExceeded rather than ever answering wrongly.
std::optional<Assignment> brute_force_solve(const Instance& instance, SolveOptions opt = {});

/// Enumerates all solutions in lexicographic order; stops when the sink
/// returns false.
void for_each_solution(const Instance& instance,
                       const std::function<bool(const Assignment&)>& sink,
                       SolveOptions opt = {});

/// Least solution that is constant on each variable class of the partition,
/// or nothing. Classes are assigned in order of their smallest variable id,
/// so a partition with singleton classes reproduces brute_force_solve.
std::optional<Assignment> brute_force_symmetric_solution(const Instance& instance,
                                                         const DegreePartition& partition,
                                                         SolveOptions opt = {});

}  // namespace dcsp

#endif
