#pragma once

#include <gerst/multi_index.hpp>
#include <gerst/polynomial.hpp>
#include <gerst/rational.hpp>

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace gerst {

/// One monomial polydifferential operator x^{a0} d^{a1} (x) ... (x) d^{ap}.
/// Slots may hold the zero index; a d^0 slot passes its argument through.
struct BasisTerm {
    NatIndex x;
    std::vector<NatIndex> slots;

    int arity() const { return static_cast<int>(slots.size()); }
    int dimension() const { return x.dim(); }

    /// Arity first, then the x-part, then the slots in order.
    friend std::strong_ordering operator<=>(const BasisTerm& a, const BasisTerm& b) {
        if (auto c = a.arity() <=> b.arity(); c != 0) return c;
        if (auto c = a.x <=> b.x; c != 0) return c;
        for (std::size_t i = 0; i < a.slots.size(); ++i) {
            if (auto c = a.slots[i] <=> b.slots[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

using RawTerm = std::pair<BasisTerm, Rational>;

/// Finite rational combination of basis terms, always canonical:
/// distinct keys, no zero coefficients, ordered per BasisTerm.
class Cochain {
public:
    using TermMap = std::map<BasisTerm, Rational>;

    explicit Cochain(int dim);

    /// Single term c * t.
    static Cochain term(const BasisTerm& t, const Rational& c = 1);
    /// An arity-0 cochain, i.e. an element of A.
    static Cochain function(const Polynomial& u);

    int dimension() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const BasisTerm& t) const;
    void add_term(const BasisTerm& t, const Rational& c);

    /// Arities present, ascending.
    std::set<int> arities() const;
    /// The common arity, or nullopt when the cochain mixes arities. The zero
    /// cochain reports nullopt as well.
    std::optional<int> arity() const;
    /// The C^p component.
    Cochain arity_component(int p) const;

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain& operator*=(const Rational& c);

    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    void check_term(const BasisTerm& t) const;

    int dim_;
    TermMap terms_;
};

Cochain operator+(Cochain a, const Cochain& b);
Cochain operator-(Cochain a, const Cochain& b);
Cochain operator-(Cochain a);
Cochain operator*(Cochain a, const Rational& c);
Cochain operator*(const Rational& c, Cochain a);

/// Merges like terms and drops zeros. Throws DimensionError when some term's
/// indices do not have length `dim`.
Cochain canonicalize(int dim, std::span<const RawTerm> raw);

/// phi(u_1, ..., u_p) = sum phi_{a} x^{a0} (d^{a1} u_1) ... (d^{ap} u_p).
/// Every term must have arity args.size().
Polynomial apply(const Cochain& c, std::span<const Polynomial> args);

struct LeibnizTerm {
    NatIndex first;
    NatIndex second;
    Rational coeff;
};

/// d^a (u v) = sum coeff (d^first u)(d^second v), first + second = a, with
/// coeff = prod_i binom(a^i, first^i). Ordered by `first`, lexicographically.
std::vector<LeibnizTerm> leibniz_split(const NatIndex& a);

} // namespace gerst
