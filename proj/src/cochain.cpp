#include <gerst/cochain.hpp>
#include <gerst/errors.hpp>

#include <string>

namespace gerst {

Cochain::Cochain(int dim) : dim_(NatIndex(dim).dim()) {}

Cochain Cochain::term(const BasisTerm& t, const Rational& c) {
    Cochain out(t.dimension());
    out.add_term(t, c);
    return out;
}

Cochain Cochain::function(const Polynomial& u) {
    Cochain out(u.dimension());
    for (const auto& [a, c] : u.terms()) out.add_term(BasisTerm{a, {}}, c);
    return out;
}

void Cochain::check_term(const BasisTerm& t) const {
    bool ok = t.x.dim() == dim_;
    for (const auto& s : t.slots) ok = ok && s.dim() == dim_;
    if (!ok) {
        throw DimensionError("basis term does not live in dimension " + std::to_string(dim_));
    }
}

Rational Cochain::coefficient(const BasisTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Cochain::add_term(const BasisTerm& t, const Rational& c) {
    check_term(t);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::set<int> Cochain::arities() const {
    std::set<int> out;
    for (const auto& [t, c] : terms_) out.insert(t.arity());
    return out;
}

std::optional<int> Cochain::arity() const {
    if (terms_.empty()) return std::nullopt;
    // Keys are ordered by arity first.
    const int lo = terms_.begin()->first.arity();
    const int hi = terms_.rbegin()->first.arity();
    if (lo != hi) return std::nullopt;
    return lo;
}

Cochain Cochain::arity_component(int p) const {
    Cochain out(dim_);
    for (const auto& [t, c] : terms_) {
        if (t.arity() == p) out.terms_.emplace_hint(out.terms_.end(), t, c);
    }
    return out;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (o.dim_ != dim_) throw DimensionError("cochain dimensions differ");
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (o.dim_ != dim_) throw DimensionError("cochain dimensions differ");
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

Cochain& Cochain::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
Cochain operator-(Cochain a) { return a *= -1; }
Cochain operator*(Cochain a, const Rational& c) { return a *= c; }
Cochain operator*(const Rational& c, Cochain a) { return a *= c; }

Cochain canonicalize(int dim, std::span<const RawTerm> raw) {
    Cochain out(dim);
    for (const auto& [t, c] : raw) out.add_term(t, c);
    return out;
}

Polynomial apply(const Cochain& c, std::span<const Polynomial> args) {
    Polynomial out(c.dimension());
    for (const auto& u : args) {
        if (u.dimension() != c.dimension()) throw DimensionError("argument dimension mismatch");
    }
    for (const auto& [t, coeff] : c.terms()) {
        if (t.arity() != static_cast<int>(args.size())) {
            throw ArityError("cochain term of arity " + std::to_string(t.arity()) +
                             " applied to " + std::to_string(args.size()) + " arguments");
        }
        Polynomial value = Polynomial::monomial(t.x, coeff);
        for (std::size_t s = 0; s < args.size() && !value.is_zero(); ++s) {
            value = value * derive(args[s], t.slots[s]);
        }
        out += value;
    }
    return out;
}

std::vector<LeibnizTerm> leibniz_split(const NatIndex& a) {
    std::vector<LeibnizTerm> out;
    for (const auto& b : sub_indices(a)) {
        Rational coeff = 1;
        for (int i = 0; i < a.dim(); ++i) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), a[i], b[i]);
            coeff *= binom;
        }
        out.push_back({b, nat_difference(a, b), coeff});
    }
    return out;
}

} // namespace gerst
