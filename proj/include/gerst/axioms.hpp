#pragma once

#include <gerst/cochain.hpp>
#include <gerst/grading.hpp>
#include <gerst/sampling.hpp>
#include <gerst/semigroup.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gerst {

/// Outcome of checking one algebraic law on random samples. On failure the
/// offending inputs are kept as named witnesses.
struct LawResult {
    std::string name;
    int trials = 0;
    bool passed = true;
    std::string detail;
    std::vector<std::pair<std::string, Cochain>> witnesses;
};

struct LawConfig {
    std::uint64_t seed = 0;
    int trials = 100;
    SampleBounds bounds = {};
};

// Gerstenhaber structure.
LawResult check_cup_associativity(const LawConfig& cfg);
LawResult check_graded_antisymmetry(const LawConfig& cfg);
LawResult check_jacobi(const LawConfig& cfg);
LawResult check_delta_squared(const LawConfig& cfg);
/// hochschild_delta(f) == -[f, m], plus delta(m) == 0.
LawResult check_delta_bracket_agreement(const LawConfig& cfg);
/// [chi, f cup g] = [chi, f] cup g + f cup [chi, g] for vector fields chi.
LawResult check_vector_field_leibniz(const LawConfig& cfg);
/// apply(bracket(f, g), u) against nested evaluation of the signed insertions.
LawResult check_bracket_evaluation(const LawConfig& cfg);
/// apply(cup(f, g), u) = apply(f, u') apply(g, u'').
LawResult check_cup_evaluation(const LawConfig& cfg);
/// apply is multilinear in each argument.
LawResult check_apply_multilinear(const LawConfig& cfg);

// Gradings.
/// [h^i, h^j] = 0 and [h^i, t] = (a0^i - sum a_s^i) t.
LawResult check_euler_eigenvalues(const LawConfig& cfg);
/// cup and bracket add weights; delta preserves weight and bigrade.
LawResult check_weight_additivity(const LawConfig& cfg);
/// C_Delta closed under cup, bracket and delta.
LawResult check_semigroup_closure(const LawConfig& cfg, const Semigroup& delta);
/// I^(r)_Delta absorbs C_Delta under cup and bracket.
LawResult check_ideal_absorption(const LawConfig& cfg, const Semigroup& delta, int r);
/// theta_I is an involutive automorphism of cup and bracket, commutes with
/// delta, and the +/- split follows the parity table.
LawResult check_involution(const LawConfig& cfg, const IndexSet& I);
/// Cumulative filtration: S_a S_b in S_{a+b} for cup/bracket, delta S_a in S_a,
/// and S_a in S_b whenever a < b.
LawResult check_filtration(const LawConfig& cfg);
/// Weight and bigrade decompositions partition c.
LawResult check_decomposition_partition(const LawConfig& cfg);

/// The complement criterion: passes for H = 2Z x Z and finds a counterexample
/// for the non-subgroup semigroup H = <(1,0)>.
LawResult check_subgroup_criterion(const LawConfig& cfg);
/// Solves the constant symplectic star product to order 3 and checks
/// associativity on random polynomial triples.
LawResult check_star_associativity(const LawConfig& cfg);

/// Every law above with default semigroups and index sets.
std::vector<LawResult> run_all_laws(std::uint64_t seed, int trials);

} // namespace gerst
