#include "dcsp/solve.hpp"

#include <algorithm>
#include <map>

namespace dcsp {

namespace {

struct Search {
    const Instance& instance;
    uint64_t budget;
    uint64_t spent = 0;
    Assignment partial;
    std::vector<std::vector<int>> constraints_by_var;

    Search(const Instance& inst, uint64_t budget_)
        : instance(inst), budget(budget_), partial(inst.num_variables, -1) {
        constraints_by_var.resize(inst.num_variables);
        for (size_t ci = 0; ci < inst.constraints.size(); ++ci)
            for (int v : inst.constraints[ci].scope)
                constraints_by_var[v].push_back(static_cast<int>(ci));
        for (auto& list : constraints_by_var) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    void charge() {
        if (++spent > budget) throw BudgetExceeded("solver budget exceeded");
    }

    // Some tuple of the relation must agree with every assigned scope slot.
    bool constraint_open(int ci) const {
        const Constraint& c = instance.constraints[ci];
        const Relation& r = instance.relations[c.relation];
        for (const Tuple& t : r.tuples) {
            bool ok = true;
            for (size_t i = 0; i < c.scope.size() && ok; ++i) {
                DomainValue assigned = partial[c.scope[i]];
                if (assigned >= 0 && assigned != t[i]) ok = false;
            }
            if (ok) return true;
        }
        return false;
    }

    bool consistent_after(const std::vector<int>& touched_vars) {
        for (int v : touched_vars)
            for (int ci : constraints_by_var[v])
                if (!constraint_open(ci)) return false;
        return true;
    }
};

}  // namespace

void for_each_solution(const Instance& instance,
                       const std::function<bool(const Assignment&)>& sink, SolveOptions opt) {
    instance.validate();
    Search s(instance, opt.budget);
    // Constraints over an empty scope set cannot exist (arity >= 1), but a
    // constraint may still be unsatisfiable outright.
    for (size_t ci = 0; ci < instance.constraints.size(); ++ci)
        if (instance.relations[instance.constraints[ci].relation].tuples.empty()) return;

    std::vector<int> touched(1);
    std::function<bool(int)> descend = [&](int var) -> bool {
        if (var == instance.num_variables) return sink(s.partial);
        for (DomainValue d = 0; d < instance.domain_size; ++d) {
            s.charge();
            s.partial[var] = d;
            touched[0] = var;
            if (s.consistent_after(touched))
                if (!descend(var + 1)) return false;
        }
        s.partial[var] = -1;
        return true;
    };
    descend(0);
}

std::optional<Assignment> brute_force_solve(const Instance& instance, SolveOptions opt) {
    std::optional<Assignment> found;
    for_each_solution(
        instance,
        [&found](const Assignment& a) {
            found = a;
            return false;
        },
        opt);
    return found;
}

std::optional<Assignment> brute_force_symmetric_solution(const Instance& instance,
                                                         const DegreePartition& partition,
                                                         SolveOptions opt) {
    instance.validate();
    // Group variables by class, classes ordered by smallest member id.
    std::vector<std::vector<int>> groups;
    {
        std::map<int, std::vector<int>> by_rank;
        for (int v = 0; v < instance.num_variables; ++v)
            by_rank[partition.rank[v]].push_back(v);
        groups.reserve(by_rank.size());
        for (auto& [rank, members] : by_rank) groups.push_back(std::move(members));
        std::sort(groups.begin(), groups.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }

    Search s(instance, opt.budget);
    std::optional<Assignment> found;
    std::function<bool(size_t)> descend = [&](size_t gi) -> bool {
        if (gi == groups.size()) {
            found = s.partial;
            return false;
        }
        for (DomainValue d = 0; d < instance.domain_size; ++d) {
            s.charge();
            for (int v : groups[gi]) s.partial[v] = d;
            if (s.consistent_after(groups[gi]))
                if (!descend(gi + 1)) return false;
        }
        for (int v : groups[gi]) s.partial[v] = -1;
        return true;
    };
    for (const Constraint& c : instance.constraints)
        if (instance.relations[c.relation].tuples.empty()) return std::nullopt;
    descend(0);
    return found;
}

}  // namespace dcsp
