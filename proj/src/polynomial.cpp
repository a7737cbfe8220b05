#include <gerst/errors.hpp>
#include <gerst/polynomial.hpp>

#include <string>

namespace gerst {

namespace {

void require_same_dim(const Polynomial& a, const Polynomial& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionError("polynomial dimensions differ: " + std::to_string(a.dimension()) +
                             " vs " + std::to_string(b.dimension()));
    }
}

} // namespace

Polynomial::Polynomial(int dim) : dim_(NatIndex(dim).dim()) {}

Polynomial Polynomial::constant(int dim, const Rational& c) {
    Polynomial p(dim);
    p.add_term(NatIndex(dim), c);
    return p;
}

Polynomial Polynomial::monomial(const NatIndex& exponent, const Rational& c) {
    Polynomial p(exponent.dim());
    p.add_term(exponent, c);
    return p;
}

Polynomial Polynomial::variable(int dim, int i) {
    if (i < 1 || i > dim) throw PreconditionError("variable index out of range");
    NatIndex e(dim);
    e.set(i - 1, 1);
    return monomial(e);
}

Rational Polynomial::coefficient(const NatIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const NatIndex& a, const Rational& c) {
    if (a.dim() != dim_) throw DimensionError("monomial dimension does not match polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_dim(*this, o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_dim(*this, o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_dim(a, b);
    Polynomial out(a.dimension());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

Rational falling_factorial(const NatIndex& b, const NatIndex& e) {
    b.require_same_dim(e);
    Rational c = 1;
    for (int i = 0; i < b.dim(); ++i) {
        if (e[i] > b[i]) return 0;
        for (int k = 0; k < e[i]; ++k) c *= b[i] - k;
    }
    return c;
}

Polynomial derive(const Polynomial& u, const NatIndex& a) {
    if (a.dim() != u.dimension()) throw DimensionError("derivative order has wrong dimension");
    Polynomial out(u.dimension());
    for (const auto& [e, c] : u.terms()) {
        if (!dominated_by(a, e)) continue;
        out.add_term(nat_difference(e, a), c * falling_factorial(e, a));
    }
    return out;
}

} // namespace gerst
