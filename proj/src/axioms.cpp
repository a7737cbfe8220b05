#include <gerst/axioms.hpp>
#include <gerst/gerstenhaber.hpp>

#include <gerst/maurer_cartan.hpp>

#include <algorithm>
#include <functional>
#include <string>

namespace gerst {

namespace {

// Records the first failure only.
void fail(LawResult& r, std::string detail, std::vector<std::pair<std::string, Cochain>> witnesses) {
    if (!r.passed) return;
    r.passed = false;
    r.detail = std::move(detail);
    r.witnesses = std::move(witnesses);
}

int arity_or_zero(const Cochain& c) { return c.arity().value_or(0); }

std::vector<Polynomial> random_args(Sampler& s, int count) {
    std::vector<Polynomial> out;
    for (int i = 0; i < count; ++i) out.push_back(s.polynomial(3, 3));
    return out;
}

// f(u_1, .., u_{k-1}, g(u_k, .., u_{k+q-1}), ..) evaluated on polynomials.
Polynomial nested_apply(const Cochain& f, int k, const Cochain& g, int q, const std::vector<Polynomial>& u) {
    std::vector<Polynomial> inner(u.begin() + (k - 1), u.begin() + (k - 1 + q));
    std::vector<Polynomial> outer(u.begin(), u.begin() + (k - 1));
    outer.push_back(gerst::apply(g, inner));
    outer.insert(outer.end(), u.begin() + (k - 1 + q), u.end());
    return gerst::apply(f, outer);
}

bool membership_yes(const SubspaceDecision& d) { return d.status == Membership::yes; }

LawResult law(const char* name, const LawConfig& cfg) {
    LawResult r;
    r.name = name;
    r.trials = cfg.trials;
    return r;
}

} // namespace

LawResult check_cup_associativity(const LawConfig& cfg) {
    LawResult r = law("cup associativity", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain(), g = s.cochain(), h = s.cochain();
        if (cup(cup(f, g), h) != cup(f, cup(g, h))) fail(r, "(f g) h != f (g h)", {{"f", f}, {"g", g}, {"h", h}});
    }
    return r;
}

LawResult check_graded_antisymmetry(const LawConfig& cfg) {
    LawResult r = law("graded antisymmetry", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain(), g = s.cochain();
        const int p = arity_or_zero(f), q = arity_or_zero(g);
        const Cochain rhs = bracket(g, f) * (-parity_sign(static_cast<long>(p + 1) * (q + 1)));
        if (bracket(f, g) != rhs) fail(r, "[f,g] != -(-1)^{(p+1)(q+1)} [g,f]", {{"f", f}, {"g", g}});
    }
    return r;
}

LawResult check_jacobi(const LawConfig& cfg) {
    LawResult r = law("Jacobi identity", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain(), g = s.cochain(), h = s.cochain();
        const long p = arity_or_zero(f), q = arity_or_zero(g), w = arity_or_zero(h);
        Cochain sum = bracket(f, bracket(g, h)) * parity_sign((p + 1) * (w + 1));
        sum += bracket(g, bracket(h, f)) * parity_sign((q + 1) * (p + 1));
        sum += bracket(h, bracket(f, g)) * parity_sign((w + 1) * (q + 1));
        if (!sum.is_zero()) fail(r, "signed cyclic sum is nonzero", {{"f", f}, {"g", g}, {"h", h}, {"sum", sum}});
    }
    return r;
}

LawResult check_delta_squared(const LawConfig& cfg) {
    LawResult r = law("delta^2 = 0", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain_of_arity(s.uniform(0, 2));
        const Cochain dd = hochschild_delta(hochschild_delta(f));
        if (!dd.is_zero()) fail(r, "delta(delta f) != 0", {{"f", f}, {"delta^2 f", dd}});
    }
    return r;
}

LawResult check_delta_bracket_agreement(const LawConfig& cfg) {
    LawResult r = law("delta = -[., m]", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    const Cochain m = multiplication_cochain(cfg.bounds.dim);
    if (!hochschild_delta(m).is_zero()) fail(r, "delta(m) != 0", {{"m", m}});
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain();
        if (hochschild_delta(f) != delta_via_bracket(f)) {
            fail(r, "Hochschild formula and -[f, m] disagree", {{"f", f}});
        }
    }
    return r;
}

LawResult check_vector_field_leibniz(const LawConfig& cfg) {
    LawResult r = law("vector-field Leibniz rule", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain chi = s.vector_field();
        const Cochain f = s.cochain(), g = s.cochain();
        const Cochain lhs = bracket(chi, cup(f, g));
        const Cochain rhs = cup(bracket(chi, f), g) + cup(f, bracket(chi, g));
        if (lhs != rhs) fail(r, "[chi, f g] != [chi, f] g + f [chi, g]", {{"chi", chi}, {"f", f}, {"g", g}});
    }
    return r;
}

LawResult check_bracket_evaluation(const LawConfig& cfg) {
    LawResult r = law("bracket evaluation coherence", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain(), g = s.cochain();
        const int p = arity_or_zero(f), q = arity_or_zero(g);
        if (p + q == 0) continue;
        const auto u = random_args(s, p + q - 1);
        Polynomial direct(cfg.bounds.dim);
        for (int k = 1; k <= p; ++k) direct += nested_apply(f, k, g, q, u) * parity_sign(static_cast<long>(k - 1) * (q - 1));
        Polynomial second(cfg.bounds.dim);
        for (int k = 1; k <= q; ++k) second += nested_apply(g, k, f, p, u) * parity_sign(static_cast<long>(k - 1) * (p - 1));
        direct -= second * parity_sign(static_cast<long>(p - 1) * (q - 1));
        if (gerst::apply(bracket(f, g), u) != direct) fail(r, "evaluated bracket differs from nested evaluation", {{"f", f}, {"g", g}});
    }
    return r;
}

LawResult check_cup_evaluation(const LawConfig& cfg) {
    LawResult r = law("cup evaluation", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain(), g = s.cochain();
        const int p = arity_or_zero(f), q = arity_or_zero(g);
        const auto u = random_args(s, p + q);
        const std::vector<Polynomial> left(u.begin(), u.begin() + p), right(u.begin() + p, u.end());
        if (gerst::apply(cup(f, g), u) != gerst::apply(f, left) * gerst::apply(g, right)) {
            fail(r, "cup does not evaluate to the product of values", {{"f", f}, {"g", g}});
        }
    }
    return r;
}

LawResult check_apply_multilinear(const LawConfig& cfg) {
    LawResult r = law("apply multilinearity", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain(1);
        const int p = arity_or_zero(f);
        auto u = random_args(s, p);
        const int slot = s.uniform(0, p - 1);
        const Polynomial v = s.polynomial(3, 3);
        const Rational lambda = s.coefficient();
        auto mixed = u;
        mixed[slot] = u[slot] * lambda + v;
        auto only_v = u;
        only_v[slot] = v;
        if (gerst::apply(f, mixed) != gerst::apply(f, u) * lambda + gerst::apply(f, only_v)) {
            fail(r, "apply is not linear in slot " + std::to_string(slot + 1), {{"f", f}});
        }
    }
    return r;
}

LawResult check_euler_eigenvalues(const LawConfig& cfg) {
    LawResult r = law("Euler fields commute and act by weight", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    const int n = cfg.bounds.dim;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (!bracket(euler_field(n, i), euler_field(n, j)).is_zero()) {
                fail(r, "[h^i, h^j] != 0", {{"h^i", euler_field(n, i)}, {"h^j", euler_field(n, j)}});
            }
        }
    }
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const BasisTerm term = s.basis_term(s.uniform(0, cfg.bounds.max_arity));
        const IntIndex w = weight_of(term);
        for (int i = 1; i <= n; ++i) {
            const Cochain tc = Cochain::term(term);
            if (bracket(euler_field(n, i), tc) != tc * w[i - 1]) {
                fail(r, "[h^" + std::to_string(i) + ", t] is not weight_i * t", {{"t", tc}});
            }
        }
    }
    return r;
}

LawResult check_weight_additivity(const LawConfig& cfg) {
    LawResult r = law("weight additivity and delta bigrade preservation", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    auto weight_is = [](const Cochain& c, const IntIndex& w) {
        const auto hw = homogeneous_weight(c);
        return c.is_zero() || (hw && *hw == w);
    };
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const IntIndex a = s.weight_in_box(3), b = s.weight_in_box(3);
        const Cochain f = s.cochain_of_weight(a, s.uniform(0, cfg.bounds.max_arity));
        const Cochain g = s.cochain_of_weight(b, s.uniform(0, cfg.bounds.max_arity));
        if (!weight_is(cup(f, g), a + b)) fail(r, "cup weight is not a + b", {{"f", f}, {"g", g}});
        if (!weight_is(bracket(f, g), a + b)) fail(r, "bracket weight is not a + b", {{"f", f}, {"g", g}});
        if (!weight_is(hochschild_delta(f), a)) fail(r, "delta changed the weight", {{"f", f}});
        for (const auto& [term, c] : f.terms()) {
            const Bigrade source = bigrade_of(term);
            const Cochain image_of_term = hochschild_delta(Cochain::term(term));
            for (const auto& [image, ic] : image_of_term.terms()) {
                if (bigrade_of(image) != source) fail(r, "delta changed the bigrade", {{"t", Cochain::term(term)}});
            }
        }
    }
    return r;
}

LawResult check_semigroup_closure(const LawConfig& cfg, const Semigroup& delta) {
    std::string name = "C_Delta closure for Delta = <";
    for (std::size_t i = 0; i < delta.generators().size(); ++i) name += (i ? " " : "") + to_string(delta.generators()[i]);
    LawResult r = law((name + ">").c_str(), cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const IntIndex a = s.semigroup_element(delta, 1, 3), b = s.semigroup_element(delta, 1, 3);
        const Cochain f = s.cochain_of_weight(a, s.uniform(0, cfg.bounds.max_arity));
        const Cochain g = s.cochain_of_weight(b, s.uniform(0, cfg.bounds.max_arity));
        if (!membership_yes(in_c_delta(f, delta)) || !membership_yes(in_c_delta(g, delta))) {
            fail(r, "sampled element not recognised as a member", {{"f", f}, {"g", g}});
        }
        if (!membership_yes(in_c_delta(cup(f, g), delta))) fail(r, "cup leaves C_Delta", {{"f", f}, {"g", g}});
        if (!membership_yes(in_c_delta(bracket(f, g), delta))) fail(r, "bracket leaves C_Delta", {{"f", f}, {"g", g}});
        if (!membership_yes(in_c_delta(hochschild_delta(f), delta))) fail(r, "delta leaves C_Delta", {{"f", f}});
    }
    return r;
}

LawResult check_ideal_absorption(const LawConfig& cfg, const Semigroup& delta, int r_order) {
    LawResult r = law(("I^(" + std::to_string(r_order) + ")_Delta absorbs C_Delta").c_str(), cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const IntIndex a = s.semigroup_element(delta, r_order, r_order + 2), b = s.semigroup_element(delta, 1, 3);
        const Cochain f = s.cochain_of_weight(a, s.uniform(0, cfg.bounds.max_arity));
        const Cochain g = s.cochain_of_weight(b, s.uniform(0, cfg.bounds.max_arity));
        if (!membership_yes(in_ideal(f, delta, r_order))) fail(r, "sampled ideal element not recognised", {{"f", f}});
        for (const auto& [what, c] : {std::pair{"cup(I, C)", cup(f, g)}, std::pair{"cup(C, I)", cup(g, f)},
                                      std::pair{"bracket(I, C)", bracket(f, g)}}) {
            if (!membership_yes(in_ideal(c, delta, r_order))) fail(r, std::string(what) + " leaves the ideal", {{"f", f}, {"g", g}});
        }
    }
    return r;
}

LawResult check_involution(const LawConfig& cfg, const IndexSet& I) {
    std::string name = "theta_I automorphism for I = (";
    for (std::size_t i = 0; i < I.indices().size(); ++i) name += (i ? " " : "") + std::to_string(I.indices()[i]);
    LawResult r = law((name + ")").c_str(), cfg);
    Sampler s(cfg.seed, cfg.bounds);
    auto parity_of = [&](const Cochain& c, int expected) {
        const auto split = theta_split(c, I);
        return expected == 1 ? split.minus.is_zero() : split.plus.is_zero();
    };
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain(), g = s.cochain();
        const Cochain tf = theta_apply(f, I), tg = theta_apply(g, I);
        if (theta_apply(tf, I) != f) fail(r, "theta_I is not involutive", {{"f", f}});
        if (theta_apply(cup(f, g), I) != cup(tf, tg)) fail(r, "theta_I does not preserve cup", {{"f", f}, {"g", g}});
        if (theta_apply(bracket(f, g), I) != bracket(tf, tg)) fail(r, "theta_I does not preserve bracket", {{"f", f}, {"g", g}});
        const auto sf = theta_split(f, I), sg = theta_split(g, I);
        if (sf.plus + sf.minus != f) fail(r, "split does not sum to f", {{"f", f}});
        if (!parity_of(hochschild_delta(sf.plus), 1)) fail(r, "delta leaves C_I^+", {{"f+", sf.plus}});
        const std::pair<const Cochain*, int> parts_f[] = {{&sf.plus, 1}, {&sf.minus, -1}};
        const std::pair<const Cochain*, int> parts_g[] = {{&sg.plus, 1}, {&sg.minus, -1}};
        for (const auto& [x, px] : parts_f) {
            for (const auto& [y, py] : parts_g) {
                if (!parity_of(cup(*x, *y), px * py) || !parity_of(bracket(*x, *y), px * py)) {
                    fail(r, "product of split parts violates the parity table", {{"x", *x}, {"y", *y}});
                }
            }
        }
    }
    return r;
}

LawResult check_filtration(const LawConfig& cfg) {
    LawResult r = law("cumulative filtration", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    constexpr auto mode = FiltrationMode::cumulative;
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain(), g = s.cochain();
        const FiltrationIndex alpha = *filtration_index(f, mode), beta = *filtration_index(g, mode);
        if (!filtration_contains(cup(f, g), alpha + beta, mode)) fail(r, "cup(S_a, S_b) not in S_{a+b}", {{"f", f}, {"g", g}});
        if (!filtration_contains(bracket(f, g), alpha + beta, mode)) {
            fail(r, "bracket(S_a, S_b) not in S_{a+b}", {{"f", f}, {"g", g}});
        }
        if (!filtration_contains(hochschild_delta(f), alpha, mode)) fail(r, "delta(S_a) not in S_a", {{"f", f}});
        // A larger index, drawn until it is a valid label above alpha.
        FiltrationIndex bigger = alpha;
        while (!(bigger > alpha) || bigger.a > bigger.b) {
            bigger = {alpha.a + s.weight_in_box(1), alpha.b + s.weight_in_box(2)};
        }
        if (!filtration_contains(f, bigger, mode)) fail(r, "S_a not contained in a larger S_b", {{"f", f}});
    }
    return r;
}

LawResult check_decomposition_partition(const LawConfig& cfg) {
    LawResult r = law("weight/bigrade partition", cfg);
    Sampler s(cfg.seed, cfg.bounds);
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Cochain f = s.cochain() + s.cochain();
        Cochain by_weight(f.dimension()), by_bigrade(f.dimension());
        std::size_t weight_terms = 0, bigrade_terms = 0;
        for (const auto& [w, part] : decompose_by_weight(f)) {
            by_weight += part;
            weight_terms += part.size();
        }
        for (const auto& [g, part] : decompose_by_bigrade(f)) {
            by_bigrade += part;
            bigrade_terms += part.size();
            if (!decompose_by_weight(part).count(g.a)) fail(r, "bigrade a-component is not the weight", {{"part", part}});
        }
        if (by_weight != f || by_bigrade != f || weight_terms != f.size() || bigrade_terms != f.size()) {
            fail(r, "decomposition does not partition the cochain", {{"f", f}});
        }
    }
    return r;
}

LawResult check_subgroup_criterion(const LawConfig& cfg) {
    LawResult r = law("subgroup complement criterion", cfg);
    const int n = cfg.bounds.dim;
    if (n != 2) {
        fail(r, "only implemented for dimension 2", {});
        return r;
    }
    const Semigroup lattice(2, {{2, 0}, {-2, 0}, {0, 1}, {0, -1}});
    const auto sub = subgroup_complement_check(lattice, cfg.trials, cfg.seed);
    if (!sub.is_subgroup || !sub.passed()) {
        std::vector<std::pair<std::string, Cochain>> w;
        if (sub.counterexample) w = {{"f", sub.counterexample->f}, {"g", sub.counterexample->g}};
        fail(r, "2Z x Z failed the complement check", std::move(w));
    }
    const Semigroup ray(2, {{1, 0}});
    const auto semi = subgroup_complement_check(ray, cfg.trials, cfg.seed);
    if (semi.is_subgroup || semi.passed()) fail(r, "no counterexample found for <(1,0)>", {});
    return r;
}

LawResult check_star_associativity(const LawConfig& cfg) {
    LawResult r = law("star product associativity", cfg);
    constexpr int kOrder = 3;
    Cochain pi1(2);
    pi1.add_term(BasisTerm{{0, 0}, {{1, 0}, {0, 1}}}, 1);
    pi1.add_term(BasisTerm{{0, 0}, {{0, 1}, {1, 0}}}, -1);
    const Deformation def = solve_maurer_cartan(pi1, kOrder);
    Sampler s(cfg.seed, SampleBounds{.dim = 2});
    for (int t = 0; t < cfg.trials && r.passed; ++t) {
        const Polynomial f = s.polynomial(3, 3), g = s.polynomial(3, 3), h = s.polynomial(3, 3);
        for (const auto& coeff : associativity_defect(def, f, g, h)) {
            if (!coeff.is_zero()) {
                fail(r, "nonzero associativity defect", {{"f", Cochain::function(f)}, {"g", Cochain::function(g)},
                                                         {"h", Cochain::function(h)}});
                break;
            }
        }
    }
    return r;
}

std::vector<LawResult> run_all_laws(std::uint64_t seed, int trials) {
    const LawConfig cfg{seed, trials, {}};
    std::vector<LawResult> out;
    for (auto check : {check_cup_associativity, check_graded_antisymmetry, check_jacobi, check_delta_squared,
                       check_delta_bracket_agreement, check_vector_field_leibniz, check_bracket_evaluation,
                       check_cup_evaluation, check_apply_multilinear, check_euler_eigenvalues, check_weight_additivity,
                       check_filtration, check_decomposition_partition}) {
        out.push_back(check(cfg));
    }
    const int n = cfg.bounds.dim;
    for (const auto& gens : std::vector<std::vector<IntIndex>>{{{-1, -1}}, {{0, -1}}, {{1, 0}, {-1, 0}}}) {
        const Semigroup delta(n, gens);
        out.push_back(check_semigroup_closure(cfg, delta));
        out.push_back(check_ideal_absorption(cfg, delta, 2));
    }
    for (const auto& indices : std::vector<std::vector<int>>{{1}, {2}, {1, 2}}) {
        out.push_back(check_involution(cfg, IndexSet(n, indices)));
    }
    out.push_back(check_subgroup_criterion(cfg));
    out.push_back(check_star_associativity(LawConfig{seed, std::max(1, trials / 5), {}}));
    return out;
}

} // namespace gerst
