#pragma once

#include <gerst/cochain.hpp>
#include <gerst/semigroup.hpp>

#include <cstdint>
#include <random>

namespace gerst {

/// Bounds for randomly generated cochains.
struct SampleBounds {
    int dim = 2;
    int max_arity = 3;
    /// Total degree |a0| of the x-part.
    int max_x_degree = 3;
    /// Total order |a_s| of each slot.
    int max_slot_order = 2;
    int max_terms = 4;
    /// Numerators in [-coeff_range, coeff_range], denominators in [1, 3].
    int coeff_range = 5;
};

/// Seeded generator of random algebra elements for property checks.
class Sampler {
public:
    Sampler(std::uint64_t seed, SampleBounds bounds = {});

    const SampleBounds& bounds() const { return bounds_; }

    int uniform(int lo, int hi);
    Rational coefficient();
    /// Random index with total order <= max_total.
    NatIndex nat_index(int max_total);
    BasisTerm basis_term(int arity);

    /// Arity-homogeneous cochain with 1..max_terms terms and random arity
    /// in [min_arity, max_arity].
    Cochain cochain(int min_arity = 0);
    Cochain cochain_of_arity(int arity);
    /// Weight-homogeneous, arity-homogeneous cochain of weight w. Arity 0 is
    /// raised to 1 when w has a negative entry.
    Cochain cochain_of_weight(const IntIndex& w, int arity);
    /// sum_i chi^i(x) d_i with random polynomial coefficients.
    Cochain vector_field();
    Polynomial polynomial(int max_degree, int max_terms);
    /// A random element of Delta built from at least `min_summands` generators.
    IntIndex semigroup_element(const Semigroup& delta, int min_summands, int max_summands);
    IntIndex weight_in_box(int radius);

private:
    SampleBounds bounds_;
    std::mt19937_64 rng_;
};

} // namespace gerst
