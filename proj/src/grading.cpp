#include <gerst/errors.hpp>
#include <gerst/gerstenhaber.hpp>
#include <gerst/grading.hpp>
#include <gerst/sampling.hpp>

#include <algorithm>
#include <set>

namespace gerst {

namespace {

IntIndex slot_sum(const BasisTerm& t) {
    IntIndex s(t.dimension());
    for (const auto& slot : t.slots) s += to_int(slot);
    return s;
}

SubspaceDecision decide_weights(const Cochain& c, const Semigroup& delta, int min_summands) {
    if (c.dimension() != delta.dimension()) throw DimensionError("cochain and semigroup dimensions differ");
    SubspaceDecision out;
    bool any_no = false;
    bool any_undecided = false;
    for (const auto& [w, part] : decompose_by_weight(c)) {
        auto r = semigroup_member(delta, w, min_summands);
        any_no = any_no || r.status == Membership::no;
        any_undecided = any_undecided || r.status == Membership::inconclusive;
        out.per_weight.emplace(w, std::move(r));
    }
    out.status = any_no ? Membership::no : any_undecided ? Membership::inconclusive : Membership::yes;
    return out;
}

bool lex_leq(const IntIndex& x, const IntIndex& y) { return x <= y; }

// Every weight in the box |a^i| <= radius, in lexicographic order.
std::vector<IntIndex> box(int dim, int radius) {
    std::vector<IntIndex> out;
    IntIndex a(dim);
    for (int i = 0; i < dim; ++i) a.set(i, -radius);
    while (true) {
        out.push_back(a);
        int i = dim - 1;
        while (i >= 0 && a[i] == radius) {
            a.set(i, -radius);
            --i;
        }
        if (i < 0) break;
        a.set(i, a[i] + 1);
    }
    return out;
}

int max_abs(const IntIndex& a) {
    int m = 0;
    for (int i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

} // namespace

IntIndex weight_of(const BasisTerm& t) { return to_int(t.x) - slot_sum(t); }

std::map<IntIndex, Cochain> decompose_by_weight(const Cochain& c) {
    std::map<IntIndex, Cochain> out;
    for (const auto& [t, coeff] : c.terms()) {
        out.try_emplace(weight_of(t), c.dimension()).first->second.add_term(t, coeff);
    }
    return out;
}

std::optional<IntIndex> homogeneous_weight(const Cochain& c) {
    std::optional<IntIndex> w;
    for (const auto& [t, coeff] : c.terms()) {
        const IntIndex tw = weight_of(t);
        if (w && *w != tw) return std::nullopt;
        w = tw;
    }
    return w;
}

Bigrade bigrade_of(const BasisTerm& t) {
    const IntIndex x = to_int(t.x);
    const IntIndex s = slot_sum(t);
    return {x - s, x + s};
}

std::map<Bigrade, Cochain> decompose_by_bigrade(const Cochain& c) {
    std::map<Bigrade, Cochain> out;
    for (const auto& [t, coeff] : c.terms()) {
        out.try_emplace(bigrade_of(t), c.dimension()).first->second.add_term(t, coeff);
    }
    return out;
}

SubspaceDecision in_c_delta(const Cochain& c, const Semigroup& delta) { return decide_weights(c, delta, 1); }

SubspaceDecision in_ideal(const Cochain& c, const Semigroup& delta, int r) {
    if (r < 1) throw PreconditionError("ideal order r must be at least 1");
    return decide_weights(c, delta, r);
}

Cochain project_c_delta(const Cochain& c, const Semigroup& delta) {
    if (c.dimension() != delta.dimension()) throw DimensionError("cochain and semigroup dimensions differ");
    Cochain out(c.dimension());
    for (const auto& [w, part] : decompose_by_weight(c)) {
        const auto r = semigroup_member(delta, w);
        if (r.status == Membership::inconclusive) {
            throw InconclusiveError("membership of weight " + to_string(w) + " is undecided: " + r.reason, w);
        }
        if (r.status == Membership::yes) out += part;
    }
    return out;
}

IdealComparison compare_ideal_with_subalgebra(const Semigroup& delta, int r, int radius) {
    IdealComparison out;
    for (const auto& a : box(delta.dimension(), radius)) {
        const auto once = semigroup_member(delta, a, 1).status;
        const auto r_fold = semigroup_member(delta, a, r).status;
        ++out.checked;
        if (once == Membership::inconclusive || r_fold == Membership::inconclusive) {
            ++out.inconclusive;
            continue;
        }
        if (once == Membership::yes && r_fold == Membership::no) out.in_delta_only.push_back(a);
        if (once == Membership::no && r_fold == Membership::yes) out.in_ideal_only.push_back(a);
    }
    return out;
}

IndexSet::IndexSet(int dim, std::vector<int> indices) : dim_(dim), indices_(std::move(indices)) {
    if (indices_.empty()) throw PreconditionError("index set I must be nonempty");
    std::set<int> seen;
    for (int i : indices_) {
        if (i < 1 || i > dim_) {
            throw PreconditionError("index " + std::to_string(i) + " outside 1.." + std::to_string(dim_));
        }
        if (!seen.insert(i).second) throw PreconditionError("index set I has a repeated entry");
    }
}

int IndexSet::sign(const IntIndex& weight) const {
    long s = 0;
    for (int i : indices_) s += weight[i - 1];
    return parity_sign(s);
}

bool in_theta_group(const IntIndex& a, const IndexSet& I) { return I.sign(a) == 1; }

Cochain theta_apply(const Cochain& c, const IndexSet& I) {
    if (c.dimension() != I.dimension()) throw DimensionError("index set and cochain dimensions differ");
    Cochain out(c.dimension());
    for (const auto& [t, coeff] : c.terms()) out.add_term(t, coeff * I.sign(weight_of(t)));
    return out;
}

ThetaSplit theta_split(const Cochain& c, const IndexSet& I) {
    if (c.dimension() != I.dimension()) throw DimensionError("index set and cochain dimensions differ");
    ThetaSplit out{Cochain(c.dimension()), Cochain(c.dimension())};
    for (const auto& [t, coeff] : c.terms()) {
        (I.sign(weight_of(t)) == 1 ? out.plus : out.minus).add_term(t, coeff);
    }
    return out;
}

ComplementReport subgroup_complement_check(const Semigroup& h, int samples, std::uint64_t seed) {
    constexpr int kRadius = 3;
    const int n = h.dimension();
    ComplementReport report;
    report.is_subgroup = std::all_of(h.generators().begin(), h.generators().end(), [&](const IntIndex& g) {
        return semigroup_member(h, -g).status == Membership::yes;
    });

    std::map<IntIndex, Membership> status;
    auto member = [&](const IntIndex& a) {
        auto it = status.find(a);
        if (it == status.end()) it = status.emplace(a, semigroup_member(h, a).status).first;
        return it->second;
    };

    std::vector<IntIndex> in_h;
    std::vector<IntIndex> in_l;
    for (const auto& a : box(n, kRadius)) {
        switch (member(a)) {
        case Membership::yes: in_h.push_back(a); break;
        case Membership::no: in_l.push_back(a); break;
        case Membership::inconclusive: ++report.undecided; break;
        }
    }

    auto violates = [&](const Cochain& result) {
        for (const auto& [w, part] : decompose_by_weight(result)) {
            if (member(w) != Membership::no) return true;
        }
        return false;
    };

    // Forward direction on sampled cochains.
    Sampler sampler(seed, SampleBounds{.dim = n, .max_arity = 2, .max_terms = 3});
    if (!in_h.empty() && !in_l.empty()) {
        for (int s = 0; s < samples && !report.counterexample; ++s) {
            const IntIndex& hw = in_h[sampler.uniform(0, static_cast<int>(in_h.size()) - 1)];
            const IntIndex& kw = in_l[sampler.uniform(0, static_cast<int>(in_l.size()) - 1)];
            const Cochain f = sampler.cochain_of_weight(hw, sampler.uniform(0, 2));
            const Cochain g = sampler.cochain_of_weight(kw, sampler.uniform(0, 2));
            ++report.samples_checked;
            const std::pair<const char*, Cochain> products[] = {
                {"cup(C_H, L)", cup(f, g)}, {"cup(L, C_H)", cup(g, f)}, {"bracket(C_H, L)", bracket(f, g)}};
            for (const auto& [name, result] : products) {
                if (violates(result)) {
                    report.counterexample = ComplementReport::Counterexample{name, hw, kw, f, g, result};
                    break;
                }
            }
        }
    }

    // Targeted search: h + k in H with k outside H, smallest weights first.
    if (!report.counterexample) {
        std::vector<std::pair<IntIndex, IntIndex>> pairs;
        for (const auto& hw : in_h) {
            for (const auto& kw : in_l) pairs.emplace_back(hw, kw);
        }
        std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
            return max_abs(x.first) + max_abs(x.second) < max_abs(y.first) + max_abs(y.second);
        });
        for (const auto& [hw, kw] : pairs) {
            if (member(hw + kw) != Membership::yes) continue;
            // x-parts alone realise any weight with nonnegative entries; otherwise
            // compensate with one d-slot.
            Sampler exact(seed, SampleBounds{.dim = n, .max_slot_order = 0, .max_terms = 1, .coeff_range = 1});
            const Cochain f = exact.cochain_of_weight(hw, 0);
            const Cochain g = exact.cochain_of_weight(kw, 0);
            report.counterexample = ComplementReport::Counterexample{"cup(C_H, L)", hw, kw, f, g, cup(f, g)};
            break;
        }
    }
    return report;
}

FiltrationIndex operator+(const FiltrationIndex& x, const FiltrationIndex& y) { return {x.a + y.a, x.b + y.b}; }

bool filtration_contains(const Cochain& c, const FiltrationIndex& alpha, FiltrationMode mode) {
    if (alpha.a.dim() != c.dimension() || alpha.b.dim() != c.dimension()) {
        throw DimensionError("filtration index dimension differs from cochain");
    }
    if (!lex_leq(alpha.a, alpha.b)) throw PreconditionError("filtration index requires a <= b");
    for (const auto& [t, coeff] : c.terms()) {
        const Bigrade g = bigrade_of(t);
        if (mode == FiltrationMode::literal) {
            if (g.a != alpha.a || !lex_leq(alpha.a, g.b) || !lex_leq(g.b, alpha.b)) return false;
        } else if (FiltrationIndex{g.a, g.b} > alpha) {
            return false;
        }
    }
    return true;
}

std::optional<FiltrationIndex> filtration_index(const Cochain& c, FiltrationMode mode) {
    if (c.is_zero()) throw PreconditionError("the zero cochain has no filtration index");
    const auto grades = decompose_by_bigrade(c);
    if (mode == FiltrationMode::cumulative) {
        const Bigrade& top = grades.rbegin()->first;
        return FiltrationIndex{top.a, top.b};
    }
    const IntIndex& a = grades.begin()->first.a;
    IntIndex b = grades.begin()->first.b;
    for (const auto& [g, part] : grades) {
        if (g.a != a) return std::nullopt;
        b = std::max(b, g.b);
    }
    return FiltrationIndex{a, b};
}

} // namespace gerst
