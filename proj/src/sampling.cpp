#include <gerst/errors.hpp>
#include <gerst/sampling.hpp>

namespace gerst {

Sampler::Sampler(std::uint64_t seed, SampleBounds bounds) : bounds_(bounds), rng_(seed) {}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::coefficient() {
    int num = 0;
    while (num == 0) num = uniform(-bounds_.coeff_range, bounds_.coeff_range);
    Rational q(num, uniform(1, 3));
    q.canonicalize();
    return q;
}

NatIndex Sampler::nat_index(int max_total) {
    NatIndex a(bounds_.dim);
    const int total = uniform(0, max_total);
    for (int k = 0; k < total; ++k) {
        const int i = uniform(0, bounds_.dim - 1);
        a.set(i, a[i] + 1);
    }
    return a;
}

BasisTerm Sampler::basis_term(int arity) {
    BasisTerm t{nat_index(bounds_.max_x_degree), {}};
    for (int s = 0; s < arity; ++s) t.slots.push_back(nat_index(bounds_.max_slot_order));
    return t;
}

Cochain Sampler::cochain(int min_arity) { return cochain_of_arity(uniform(min_arity, bounds_.max_arity)); }

Cochain Sampler::cochain_of_arity(int arity) {
    Cochain c(bounds_.dim);
    const int terms = uniform(1, bounds_.max_terms);
    while (c.is_zero()) {
        for (int k = 0; k < terms; ++k) c.add_term(basis_term(arity), coefficient());
    }
    return c;
}

Cochain Sampler::cochain_of_weight(const IntIndex& w, int arity) {
    if (w.dim() != bounds_.dim) throw DimensionError("weight dimension differs from sampler");
    bool negative = false;
    for (int i = 0; i < w.dim(); ++i) negative = negative || w[i] < 0;
    if (arity == 0 && negative) arity = 1;
    Cochain c(bounds_.dim);
    const int terms = uniform(1, bounds_.max_terms);
    while (c.is_zero()) {
        for (int k = 0; k < terms; ++k) {
            BasisTerm t{NatIndex(bounds_.dim), {}};
            IntIndex x = w;
            for (int s = 0; s < arity; ++s) {
                t.slots.push_back(nat_index(bounds_.max_slot_order));
                x += to_int(t.slots.back());
            }
            // Push any negative x-entry into a random slot.
            for (int i = 0; i < w.dim(); ++i) {
                if (x[i] < 0) {
                    auto& slot = t.slots[uniform(0, arity - 1)];
                    slot.set(i, slot[i] - x[i]);
                    x.set(i, 0);
                }
            }
            for (int i = 0; i < w.dim(); ++i) t.x.set(i, x[i]);
            c.add_term(t, coefficient());
        }
    }
    return c;
}

Cochain Sampler::vector_field() {
    Cochain chi(bounds_.dim);
    while (chi.is_zero()) {
        for (int i = 0; i < bounds_.dim; ++i) {
            NatIndex d(bounds_.dim);
            d.set(i, 1);
            const int terms = uniform(0, 2);
            for (int k = 0; k < terms; ++k) {
                chi.add_term(BasisTerm{nat_index(bounds_.max_x_degree), {d}}, coefficient());
            }
        }
    }
    return chi;
}

Polynomial Sampler::polynomial(int max_degree, int max_terms) {
    Polynomial u(bounds_.dim);
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) u.add_term(nat_index(max_degree), coefficient());
    return u;
}

IntIndex Sampler::semigroup_element(const Semigroup& delta, int min_summands, int max_summands) {
    const auto& gens = delta.generators();
    if (gens.empty()) throw PreconditionError("empty semigroup has no elements");
    IntIndex a(delta.dimension());
    const int count = uniform(min_summands, max_summands);
    for (int k = 0; k < count; ++k) a += gens[uniform(0, static_cast<int>(gens.size()) - 1)];
    return a;
}

IntIndex Sampler::weight_in_box(int radius) {
    IntIndex a(bounds_.dim);
    for (int i = 0; i < bounds_.dim; ++i) a.set(i, uniform(-radius, radius));
    return a;
}

} // namespace gerst
