#pragma once

#include <gerst/cochain.hpp>
#include <gerst/document.hpp>

#include <initializer_list>
#include <vector>

namespace gerst::test {

/// Single basis term from an x-part and slots, in dimension x.size().
inline BasisTerm bt(std::initializer_list<int> x, std::initializer_list<std::initializer_list<int>> slots = {}) {
    BasisTerm t{NatIndex(x), {}};
    for (const auto& s : slots) t.slots.emplace_back(s);
    return t;
}

inline Cochain co(const char* text) { return parse_cochain(text); }
inline Polynomial poly(const char* text) { return parse_polynomial(text); }

/// x^e with coefficient c.
inline Polynomial mono(std::initializer_list<int> e, const Rational& c = 1) { return Polynomial::monomial(NatIndex(e), c); }

/// All monomials x^e in dimension 2 with |e| <= degree.
inline std::vector<Polynomial> monomials2(int degree) {
    std::vector<Polynomial> out;
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) out.push_back(mono({i, j}));
    }
    return out;
}

} // namespace gerst::test
