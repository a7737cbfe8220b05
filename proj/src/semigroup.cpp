#include <gerst/errors.hpp>
#include <gerst/semigroup.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

namespace gerst {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t dot(const std::vector<int>& w, const IntIndex& a) {
    std::int64_t s = 0;
    for (int i = 0; i < a.dim(); ++i) s += static_cast<std::int64_t>(w[i]) * a[i];
    return s;
}

// Candidate functionals: the generator sum, each generator, and a small box.
std::vector<std::vector<int>> candidate_functionals(const std::vector<IntIndex>& gens, int dim) {
    std::vector<std::vector<int>> out;
    IntIndex sum(dim);
    for (const auto& g : gens) {
        sum += g;
        out.push_back(g.to_vector());
    }
    out.push_back(sum.to_vector());
    int radius = 1;
    while (std::pow(2 * (radius + 1) + 1, dim) <= 20000.0) ++radius;
    std::vector<int> w(dim, -radius);
    while (true) {
        out.push_back(w);
        int i = dim - 1;
        while (i >= 0 && w[i] == radius) {
            w[i] = -radius;
            --i;
        }
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

struct Bound {
    bool outside_cone = false;
    std::optional<std::int64_t> max_summands;
};

Bound cone_bounds(const std::vector<IntIndex>& gens, const IntIndex& a) {
    Bound b;
    for (const auto& w : candidate_functionals(gens, a.dim())) {
        std::int64_t min_wg = std::numeric_limits<std::int64_t>::max();
        for (const auto& g : gens) min_wg = std::min(min_wg, dot(w, g));
        const std::int64_t wa = dot(w, a);
        if (min_wg >= 0 && wa < 0) {
            b.outside_cone = true;
            return b;
        }
        if (min_wg > 0) {
            const std::int64_t bound = wa / min_wg;  // wa >= 0 here
            if (!b.max_summands || bound < *b.max_summands) b.max_summands = bound;
        }
    }
    return b;
}

} // namespace

Semigroup::Semigroup(int dim, std::vector<IntIndex> generators, int search_cap)
    : dim_(IntIndex(dim).dim()), generators_(std::move(generators)), search_cap_(search_cap) {
    if (search_cap_ < 1) throw PreconditionError("semigroup search cap must be positive");
    for (const auto& g : generators_) {
        if (g.dim() != dim_) throw DimensionError("semigroup generator has wrong dimension");
    }
}

std::string to_string(Membership m) {
    switch (m) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    case Membership::inconclusive: return "inconclusive";
    }
    return "?";
}

bool in_lattice(const std::vector<IntIndex>& generators, const IntIndex& a) {
    const int n = a.dim();
    std::vector<Row> rows;
    for (const auto& g : generators) {
        g.require_same_dim(a);
        const auto entries = g.to_vector();
        rows.emplace_back(entries.begin(), entries.end());
    }
    // Integer row echelon form via repeated Euclidean reduction per column.
    std::vector<std::pair<int, Row>> pivots;
    std::size_t top = 0;
    for (int col = 0; col < n && top < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r) {
                if (rows[r][col] != 0 &&
                    (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col]))) {
                    best = r;
                }
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool reduced = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                const std::int64_t q = rows[r][col] / rows[top][col];
                for (int j = 0; j < n; ++j) rows[r][j] -= q * rows[top][j];
                if (rows[r][col] != 0) reduced = false;
            }
            if (reduced) {
                pivots.emplace_back(col, rows[top]);
                ++top;
                break;
            }
        }
    }
    Row rest(n);
    for (int j = 0; j < n; ++j) rest[j] = a[j];
    std::size_t next = 0;
    for (int col = 0; col < n; ++col) {
        if (next < pivots.size() && pivots[next].first == col) {
            const Row& p = pivots[next].second;
            if (rest[col] % p[col] != 0) return false;
            const std::int64_t q = rest[col] / p[col];
            for (int j = 0; j < n; ++j) rest[j] -= q * p[j];
            ++next;
        } else if (rest[col] != 0) {
            return false;
        }
    }
    return true;
}

IntIndex certificate_value(const Semigroup& delta, const std::vector<int>& certificate) {
    IntIndex sum(delta.dimension());
    for (std::size_t i = 0; i < certificate.size(); ++i) sum += scale(delta.generators()[i], certificate[i]);
    return sum;
}

MembershipResult semigroup_member(const Semigroup& delta, const IntIndex& a, int min_summands) {
    if (a.dim() != delta.dimension()) throw DimensionError("weight and semigroup dimensions differ");
    if (min_summands < 1) throw PreconditionError("summand count must be at least 1");
    const auto& gens = delta.generators();
    MembershipResult result;
    if (gens.empty()) {
        result.status = Membership::no;
        result.reason = "empty generating set";
        return result;
    }
    if (!in_lattice(gens, a)) {
        result.status = Membership::no;
        result.reason = "outside the generated lattice";
        return result;
    }
    const Bound bound = cone_bounds(gens, a);
    if (bound.outside_cone) {
        result.status = Membership::no;
        result.reason = "separated from the generator cone by a nonnegative functional";
        return result;
    }
    if (bound.max_summands && *bound.max_summands < min_summands) {
        result.status = Membership::no;
        result.reason = "positive functional bounds the summand count below " +
                        std::to_string(min_summands);
        return result;
    }

    // levels[s] maps every point reachable with exactly s + 1 summands to the
    // generator used last; parents are recovered by subtraction.
    const std::int64_t limit =
        bound.max_summands ? std::min<std::int64_t>(*bound.max_summands, delta.search_cap())
                           : delta.search_cap();
    std::vector<std::map<IntIndex, int>> levels;
    std::map<IntIndex, int> current;
    for (std::size_t i = 0; i < gens.size(); ++i) current.emplace(gens[i], static_cast<int>(i));
    for (std::int64_t s = 1; s <= limit; ++s) {
        if (s >= min_summands && current.count(a)) {
            levels.push_back(std::move(current));
            result.status = Membership::yes;
            result.certificate.assign(gens.size(), 0);
            IntIndex point = a;
            for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
                const int g = level->at(point);
                ++result.certificate[g];
                point = point - gens[g];
            }
            result.reason = "certificate with " + std::to_string(s) + " summands";
            return result;
        }
        if (s == limit) {
            levels.push_back(std::move(current));
            break;
        }
        std::map<IntIndex, int> next;
        for (const auto& [point, last] : current) {
            for (std::size_t i = 0; i < gens.size(); ++i) next.emplace(point + gens[i], static_cast<int>(i));
        }
        levels.push_back(std::move(current));
        current = std::move(next);
    }
    if (bound.max_summands && *bound.max_summands <= delta.search_cap()) {
        result.status = Membership::no;
        result.reason = "exhausted all " + std::to_string(*bound.max_summands) +
                        " summand levels allowed by a positive functional";
    } else {
        result.status = Membership::inconclusive;
        result.reason = "search cap " + std::to_string(delta.search_cap()) + " reached";
    }
    return result;
}

} // namespace gerst
