#pragma once

#include <gerst/multi_index.hpp>
#include <gerst/rational.hpp>

#include <map>

namespace gerst {

/// Element of Q[x_1, ..., x_n] in canonical sparse form: no stored zero coefficients.
class Polynomial {
public:
    using TermMap = std::map<NatIndex, Rational>;

    explicit Polynomial(int dim);

    static Polynomial constant(int dim, const Rational& c);
    static Polynomial monomial(const NatIndex& exponent, const Rational& c = 1);
    /// The coordinate function x_i, 1-based.
    static Polynomial variable(int dim, int i);

    int dimension() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of x^a (zero when absent).
    Rational coefficient(const NatIndex& a) const;

    /// Adds c x^a, merging with any existing term.
    void add_term(const NatIndex& a, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int dim_;
    TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);

/// d^a u = d_1^{a^1} ... d_n^{a^n} u.
Polynomial derive(const Polynomial& u, const NatIndex& a);

/// The falling-factorial coefficient of d^e x^b = coeff * x^{b-e}; zero unless e <= b.
Rational falling_factorial(const NatIndex& b, const NatIndex& e);

} // namespace gerst
