#include "dcsp/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace dcsp {

namespace {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t out = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        // Desk-scale guard; callers treat the cap as "over budget".
        if (out > (uint64_t{1} << 62) / (n - k + i)) return uint64_t{1} << 62;
        out = out * (n - k + i) / i;
    }
    return out;
}

uint64_t pow_u64(uint64_t base, int exp) {
    uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > (uint64_t{1} << 62) / base) return uint64_t{1} << 62;
        out *= base;
    }
    return out;
}

}  // namespace

Operation Operation::from_dense(int domain_size, int arity, std::vector<DomainValue> table) {
    if (static_cast<uint64_t>(table.size()) != pow_u64(domain_size, arity))
        throw ValidationError("dense operation table has wrong size");
    for (DomainValue d : table)
        if (d < 0 || d >= domain_size) throw ValidationError("operation value out of domain");
    Operation f;
    f.domain_size_ = domain_size;
    f.arity_ = arity;
    f.rep_ = Rep::dense;
    f.table_ = std::move(table);
    return f;
}

Operation Operation::from_multiset(int domain_size, int arity, std::vector<DomainValue> table) {
    if (table.size() != enumerate_histograms(domain_size, arity).size())
        throw ValidationError("multiset operation table has wrong size");
    for (DomainValue d : table)
        if (d < 0 || d >= domain_size) throw ValidationError("operation value out of domain");
    Operation f;
    f.domain_size_ = domain_size;
    f.arity_ = arity;
    f.rep_ = Rep::multiset;
    f.table_ = std::move(table);
    return f;
}

Operation Operation::projection(int domain_size, int arity, int coordinate) {
    std::vector<DomainValue> table(pow_u64(domain_size, arity));
    std::vector<Tuple> order = tuple_order(domain_size, arity);
    for (size_t i = 0; i < order.size(); ++i) table[i] = order[i][coordinate];
    return from_dense(domain_size, arity, std::move(table));
}

Operation Operation::identity(int domain_size) { return projection(domain_size, 1, 0); }

DomainValue Operation::eval(const Tuple& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw ValidationError("operation applied with wrong arity");
    if (rep_ == Rep::dense) return table_[tuple_rank(args, domain_size_)];
    std::vector<int> histogram(domain_size_, 0);
    for (DomainValue d : args) ++histogram[d];
    return table_[multiset_rank(histogram)];
}

DomainValue Operation::eval_histogram(const std::vector<int>& histogram) const {
    if (rep_ != Rep::multiset)
        throw ValidationError("histogram evaluation requires multiset representation");
    return table_[multiset_rank(histogram)];
}

std::vector<std::vector<int>> enumerate_histograms(int domain_size, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> h(domain_size, 0);
    // Order: lexicographic over the sorted tuples, i.e. descending lex on
    // the histogram vector.
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == domain_size - 1) {
            h[i] = remaining;
            out.push_back(h);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            h[i] = v;
            rec(i + 1, remaining - v);
        }
    };
    rec(0, r);
    return out;
}

int multiset_rank(const std::vector<int>& histogram) {
    int d = static_cast<int>(histogram.size());
    int remaining = std::accumulate(histogram.begin(), histogram.end(), 0);
    uint64_t rank = 0;
    for (int i = 0; i + 1 < d; ++i) {
        for (int v = remaining; v > histogram[i]; --v)
            rank += binomial(remaining - v + d - i - 2, d - i - 2);
        remaining -= histogram[i];
    }
    return static_cast<int>(rank);
}

std::vector<Tuple> tuple_order(int domain_size, int r) {
    uint64_t total = pow_u64(domain_size, r);
    std::vector<Tuple> out;
    out.reserve(total);
    Tuple t(r, 0);
    for (uint64_t i = 0; i < total; ++i) {
        out.push_back(t);
        for (int pos = r - 1; pos >= 0; --pos) {
            if (++t[pos] < domain_size) break;
            t[pos] = 0;
        }
    }
    return out;
}

int tuple_rank(const Tuple& t, int domain_size) {
    uint64_t rank = 0;
    for (DomainValue d : t) rank = rank * domain_size + d;
    return static_cast<int>(rank);
}

bool is_polymorphism(const Operation& f, const ConstraintLanguage& gamma, SolveOptions opt) {
    if (f.domain_size() != gamma.domain_size)
        throw ValidationError("operation domain does not match the language");
    int ell = f.arity();
    for (const Relation& r : gamma.relations) {
        if (r.tuples.empty()) continue;
        size_t nt = r.tuples.size();
        if (f.rep() == Operation::Rep::dense) {
            if (pow_u64(nt, ell) > opt.budget)
                throw BudgetExceeded("too many tuple combinations for " + r.id);
            // All ell-tuples of relation rows, coordinate-wise image must stay in R.
            std::vector<size_t> pick(ell, 0);
            Tuple image(r.arity), args(ell);
            while (true) {
                for (int i = 0; i < r.arity; ++i) {
                    for (int j = 0; j < ell; ++j) args[j] = r.tuples[pick[j]][i];
                    image[i] = f.eval(args);
                }
                if (!r.contains(image)) return false;
                int pos = ell - 1;
                while (pos >= 0 && ++pick[pos] == nt) pick[pos--] = 0;
                if (pos < 0) break;
            }
        } else {
            // Symmetric: the image depends only on the multiset of rows, so
            // multisets of ell rows suffice.
            std::vector<std::vector<int>> row_multisets =
                enumerate_histograms(static_cast<int>(nt), ell);
            if (row_multisets.size() > opt.budget)
                throw BudgetExceeded("too many tuple multisets for " + r.id);
            Tuple image(r.arity);
            std::vector<int> histogram(gamma.domain_size);
            for (const std::vector<int>& counts : row_multisets) {
                for (int i = 0; i < r.arity; ++i) {
                    std::fill(histogram.begin(), histogram.end(), 0);
                    for (size_t j = 0; j < nt; ++j) histogram[r.tuples[j][i]] += counts[j];
                    image[i] = f.eval_histogram(histogram);
                }
                if (!r.contains(image)) return false;
            }
        }
    }
    return true;
}

bool is_symmetric(const Operation& f) {
    if (f.rep() == Operation::Rep::multiset) return true;
    // f is constant on permutation orbits iff it agrees with the sorted form.
    for (const Tuple& t : tuple_order(f.domain_size(), f.arity())) {
        Tuple sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (f.eval(t) != f.eval(sorted)) return false;
    }
    return true;
}

Instance indicator_problem(const ConstraintLanguage& gamma, int r, SolveOptions opt) {
    gamma.validate();
    if (r < 1) throw ParameterError("indicator order must be positive");
    uint64_t nvars = pow_u64(gamma.domain_size, r);
    if (nvars > opt.budget) throw BudgetExceeded("indicator problem too large");
    Instance inst;
    inst.domain_size = gamma.domain_size;
    inst.num_variables = static_cast<int>(nvars);
    inst.relations = gamma.relations;
    for (size_t ri = 0; ri < gamma.relations.size(); ++ri) {
        const Relation& rel = gamma.relations[ri];
        size_t nt = rel.tuples.size();
        if (nt == 0) continue;
        if (pow_u64(nt, r) > opt.budget)
            throw BudgetExceeded("too many constraints from relation " + rel.id);
        std::vector<size_t> pick(r, 0);
        while (true) {
            Constraint c;
            c.relation = static_cast<int>(ri);
            Tuple column(r);
            for (int i = 0; i < rel.arity; ++i) {
                for (int j = 0; j < r; ++j) column[j] = rel.tuples[pick[j]][i];
                c.scope.push_back(tuple_rank(column, gamma.domain_size));
            }
            inst.constraints.push_back(std::move(c));
            int pos = r - 1;
            while (pos >= 0 && ++pick[pos] == nt) pick[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return inst;
}

std::optional<Operation> find_symmetric_polymorphism(const ConstraintLanguage& gamma, int r,
                                                     SolveOptions opt) {
    gamma.validate();
    if (r < 1) throw ParameterError("arity must be positive");
    std::vector<std::vector<int>> histograms = enumerate_histograms(gamma.domain_size, r);
    if (histograms.size() > opt.budget)
        throw BudgetExceeded("multiset quotient too large");

    // Quotient of the indicator problem by argument permutation: one variable
    // per multiset, one constraint per multiset of rows of each relation.
    Instance quotient;
    quotient.domain_size = gamma.domain_size;
    quotient.num_variables = static_cast<int>(histograms.size());
    quotient.relations = gamma.relations;
    std::vector<Constraint> seen;
    for (size_t ri = 0; ri < gamma.relations.size(); ++ri) {
        const Relation& rel = gamma.relations[ri];
        size_t nt = rel.tuples.size();
        if (nt == 0) continue;
        std::vector<std::vector<int>> row_multisets =
            enumerate_histograms(static_cast<int>(nt), r);
        if (row_multisets.size() > opt.budget)
            throw BudgetExceeded("too many constraints from relation " + rel.id);
        std::vector<int> histogram(gamma.domain_size);
        for (const std::vector<int>& counts : row_multisets) {
            Constraint c;
            c.relation = static_cast<int>(ri);
            for (int i = 0; i < rel.arity; ++i) {
                std::fill(histogram.begin(), histogram.end(), 0);
                for (size_t j = 0; j < nt; ++j) histogram[rel.tuples[j][i]] += counts[j];
                c.scope.push_back(multiset_rank(histogram));
            }
            quotient.constraints.push_back(std::move(c));
        }
    }
    std::sort(quotient.constraints.begin(), quotient.constraints.end(),
              [](const Constraint& a, const Constraint& b) {
                  return std::tie(a.relation, a.scope) < std::tie(b.relation, b.scope);
              });
    quotient.constraints.erase(std::unique(quotient.constraints.begin(),
                                           quotient.constraints.end()),
                               quotient.constraints.end());

    std::optional<Assignment> solution = brute_force_solve(quotient, opt);
    if (!solution) return std::nullopt;
    return Operation::from_multiset(gamma.domain_size, r, *solution);
}

bool has_symmetric_all_arities(const ConstraintLanguage& gamma, int max_r, SolveOptions opt) {
    for (int r = 1; r <= max_r; ++r)
        if (!find_symmetric_polymorphism(gamma, r, opt)) return false;
    return true;
}

URelation u_relation(const ConstraintLanguage& gamma, int r, SolveOptions opt) {
    Instance indicator = indicator_problem(gamma, r, opt);
    URelation u;
    u.r = r;
    u.order = tuple_order(gamma.domain_size, r);
    u.relation.id = "U";
    u.relation.arity = indicator.num_variables;
    for_each_solution(
        indicator,
        [&u](const Assignment& a) {
            u.relation.tuples.push_back(a);
            return true;
        },
        opt);
    u.relation.normalize();
    return u;
}

MinimalImage minimal_unary_image(const ConstraintLanguage& gamma) {
    gamma.validate();
    int d = gamma.domain_size;
    std::optional<MinimalImage> best;
    for (const Tuple& table : tuple_order(d, d)) {
        Operation f = Operation::from_dense(d, 1, table);
        if (!is_polymorphism(f, gamma)) continue;
        std::vector<DomainValue> image = table;
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!best || image.size() < best->image.size() ||
            (image.size() == best->image.size() && image < best->image))
            best = MinimalImage{image, f};
    }
    // The identity is always a polymorphism, so best is set.
    return *best;
}

ConstraintLanguage augmented_language(const ConstraintLanguage& gamma) {
    MinimalImage minimal = minimal_unary_image(gamma);
    ConstraintLanguage out = gamma;
    auto add_unary = [&out](std::string id, const std::vector<DomainValue>& values) {
        Relation r;
        r.id = std::move(id);
        r.arity = 1;
        for (DomainValue v : values) r.tuples.push_back({v});
        r.normalize();
        for (const Relation& existing : out.relations)
            if (existing.same_extension(r)) return;
        while (out.find(r.id) != nullptr) r.id += "'";
        out.relations.push_back(std::move(r));
    };
    for (DomainValue d : minimal.image) add_unary("VAL" + std::to_string(d), {d});
    std::vector<DomainValue> full(gamma.domain_size);
    std::iota(full.begin(), full.end(), 0);
    add_unary("DOM", full);
    return out;
}

}  // namespace dcsp
