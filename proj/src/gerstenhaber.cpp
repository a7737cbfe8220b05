#include <gerst/errors.hpp>
#include <gerst/gerstenhaber.hpp>

#include <string>

namespace gerst {

namespace {

void require_same_dim(const Cochain& f, const Cochain& g) {
    if (f.dimension() != g.dimension()) {
        throw DimensionError("cochain dimensions differ: " + std::to_string(f.dimension()) +
                             " vs " + std::to_string(g.dimension()));
    }
}

int homogeneous_arity(const Cochain& c, const char* what) {
    auto p = c.arity();
    if (!p) throw ArityError(std::string(what) + " must be arity-homogeneous");
    return *p;
}

Rational multinomial(const NatIndex& total, const std::vector<NatIndex>& parts) {
    Rational c = 1;
    for (int i = 0; i < total.dim(); ++i) {
        mpz_class num;
        mpz_fac_ui(num.get_mpz_t(), total[i]);
        c *= num;
        for (const auto& part : parts) {
            mpz_class den;
            mpz_fac_ui(den.get_mpz_t(), part[i]);
            c /= den;
        }
    }
    return c;
}

// d^{outer} applied to x^{inner.x} (d^{inner.slots[0]} v_1) ... distributes the
// derivative over the q + 1 factors.
void insert_terms(const BasisTerm& outer, const Rational& c_outer, int k, const BasisTerm& inner,
                  const Rational& c_inner, Cochain& out) {
    const NatIndex& order = outer.slots[k - 1];
    const int q = inner.arity();
    for (const auto& split : compositions(order, q + 1)) {
        const Rational ff = falling_factorial(inner.x, split[0]);
        if (ff == 0) continue;
        BasisTerm t;
        t.x = outer.x + nat_difference(inner.x, split[0]);
        t.slots.reserve(outer.arity() + q - 1);
        t.slots.insert(t.slots.end(), outer.slots.begin(), outer.slots.begin() + (k - 1));
        for (int j = 0; j < q; ++j) t.slots.push_back(inner.slots[j] + split[j + 1]);
        t.slots.insert(t.slots.end(), outer.slots.begin() + k, outer.slots.end());
        out.add_term(t, c_outer * c_inner * ff * multinomial(order, split));
    }
}

Cochain bracket_homogeneous(const Cochain& f, int p, const Cochain& g, int q) {
    Cochain out(f.dimension());
    for (int k = 1; k <= p; ++k) {
        out += insert(f, k, g) * parity_sign(static_cast<long>(k - 1) * (q - 1));
    }
    Cochain rhs(f.dimension());
    for (int k = 1; k <= q; ++k) {
        rhs += insert(g, k, f) * parity_sign(static_cast<long>(k - 1) * (p - 1));
    }
    out -= rhs * parity_sign(static_cast<long>(p - 1) * (q - 1));
    return out;
}

} // namespace

Cochain multiplication_cochain(int dim) {
    return Cochain::term(BasisTerm{NatIndex(dim), {NatIndex(dim), NatIndex(dim)}});
}

Cochain identity_cochain(int dim) { return Cochain::term(BasisTerm{NatIndex(dim), {NatIndex(dim)}}); }

Cochain euler_field(int dim, int i) {
    if (i < 1 || i > dim) throw PreconditionError("vector field index out of range");
    NatIndex e(dim);
    e.set(i - 1, 1);
    return Cochain::term(BasisTerm{e, {e}});
}

Cochain cup(const Cochain& f, const Cochain& g) {
    require_same_dim(f, g);
    Cochain out(f.dimension());
    for (const auto& [tf, cf] : f.terms()) {
        for (const auto& [tg, cg] : g.terms()) {
            BasisTerm t{tf.x + tg.x, tf.slots};
            t.slots.insert(t.slots.end(), tg.slots.begin(), tg.slots.end());
            out.add_term(t, cf * cg);
        }
    }
    return out;
}

Cochain insert(const Cochain& f, int k, const Cochain& g) {
    require_same_dim(f, g);
    Cochain out(f.dimension());
    if (f.is_zero() || g.is_zero()) return out;
    const int p = homogeneous_arity(f, "outer cochain of an insertion");
    homogeneous_arity(g, "inserted cochain");
    if (k < 1 || k > p) {
        throw PreconditionError("insertion slot " + std::to_string(k) + " out of range 1.." +
                                std::to_string(p));
    }
    for (const auto& [tf, cf] : f.terms()) {
        for (const auto& [tg, cg] : g.terms()) insert_terms(tf, cf, k, tg, cg, out);
    }
    return out;
}

Cochain bracket(const Cochain& f, const Cochain& g) {
    require_same_dim(f, g);
    Cochain out(f.dimension());
    for (int p : f.arities()) {
        const Cochain fp = f.arity_component(p);
        for (int q : g.arities()) out += bracket_homogeneous(fp, p, g.arity_component(q), q);
    }
    return out;
}

Cochain hochschild_delta(const Cochain& f) {
    const int n = f.dimension();
    const NatIndex zero(n);
    Cochain out(n);
    for (const auto& [t, c] : f.terms()) {
        const int p = t.arity();
        // u_1 f(u_2, ..)
        BasisTerm first{t.x, {zero}};
        first.slots.insert(first.slots.end(), t.slots.begin(), t.slots.end());
        out.add_term(first, c);
        // f(.., u_k u_{k+1}, ..), Leibniz-split slot k
        for (int k = 1; k <= p; ++k) {
            for (const auto& [left, right, coeff] : leibniz_split(t.slots[k - 1])) {
                BasisTerm mid{t.x, {}};
                mid.slots.reserve(p + 1);
                mid.slots.insert(mid.slots.end(), t.slots.begin(), t.slots.begin() + (k - 1));
                mid.slots.push_back(left);
                mid.slots.push_back(right);
                mid.slots.insert(mid.slots.end(), t.slots.begin() + k, t.slots.end());
                out.add_term(mid, c * coeff * parity_sign(k));
            }
        }
        // f(u_1, .., u_p) u_{p+1}
        BasisTerm last = t;
        last.slots.push_back(zero);
        out.add_term(last, c * parity_sign(p + 1));
    }
    return out;
}

Cochain delta_via_bracket(const Cochain& f) {
    return -bracket(f, multiplication_cochain(f.dimension()));
}

} // namespace gerst
