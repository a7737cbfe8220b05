#include "helpers.hpp"

#include <gerst/axioms.hpp>
#include <gerst/errors.hpp>
#include <gerst/gerstenhaber.hpp>
#include <gerst/sampling.hpp>

#include <doctest.h>

using namespace gerst;
using namespace gerst::test;

namespace {

// The Hochschild formula evaluated directly on polynomials, term by term.
Polynomial delta_by_evaluation(const Cochain& f, int p, const std::vector<Polynomial>& u) {
    const std::vector<Polynomial> tail(u.begin() + 1, u.end());
    Polynomial out = u[0] * gerst::apply(f, tail);
    for (int k = 1; k <= p; ++k) {
        std::vector<Polynomial> merged(u.begin(), u.begin() + (k - 1));
        merged.push_back(u[k - 1] * u[k]);
        merged.insert(merged.end(), u.begin() + (k + 1), u.end());
        out += gerst::apply(f, merged) * parity_sign(k);
    }
    const std::vector<Polynomial> head(u.begin(), u.end() - 1);
    out += gerst::apply(f, head) * u.back() * parity_sign(p + 1);
    return out;
}

Polynomial compose(const Cochain& f, const Cochain& g, const Polynomial& u) {
    return gerst::apply(f, std::vector{gerst::apply(g, std::vector{u})});
}

} // namespace

TEST_CASE("multiplication cochain") {
    const Cochain m = multiplication_cochain(2);
    CHECK(m == co("(cochain 2 (term 1 (0 0) (0 0) (0 0)))"));
    CHECK(gerst::apply(m, std::vector{mono({1, 0}), mono({1, 1}, 3)}) == mono({2, 1}, 3));
    CHECK(hochschild_delta(m).is_zero());
    CHECK(delta_via_bracket(m).is_zero());
}

TEST_CASE("cup product") {
    CHECK(cup(co("(cochain 2 (term 1 (1 0) (1 0)))"), co("(cochain 2 (term 1 (0 0) (0 1)))")) ==
          co("(cochain 2 (term 1 (1 0) (1 0) (0 1)))"));

    Sampler s(21);
    const Cochain one = Cochain::function(Polynomial::constant(2, 1));
    for (int i = 0; i < 20; ++i) {
        const Cochain f = s.cochain();
        CHECK(cup(one, f) == f);
        CHECK(cup(f, one) == f);
    }

    // x1 (C^0) cup d1 (C^1) is h^1; compared by evaluation on degree <= 2 monomials.
    const Cochain h1 = cup(Cochain::function(mono({1, 0})), co("(cochain 2 (term 1 (0 0) (1 0)))"));
    CHECK(h1 == euler_field(2, 1));
    for (const auto& u : monomials2(2)) {
        CHECK(gerst::apply(h1, std::vector{u}) == mono({1, 0}) * derive(u, NatIndex{1, 0}));
    }

    CHECK_THROWS_AS(cup(Cochain(2), Cochain(3)), DimensionError);
}

TEST_CASE("insert") {
    const Cochain d1 = co("(cochain 2 (term 1 (0 0) (1 0)))");
    const Cochain d2 = co("(cochain 2 (term 1 (0 0) (0 1)))");
    CHECK(insert(d1, 1, d2) == co("(cochain 2 (term 1 (0 0) (1 1)))"));

    // x2 d1 (x1 d2 u) = x2 d2 u + x1 x2 d1 d2 u
    const Cochain f = co("(cochain 2 (term 1 (0 1) (1 0)))");
    const Cochain g = co("(cochain 2 (term 1 (1 0) (0 1)))");
    const Cochain fg = insert(f, 1, g);
    CHECK(fg == co("(cochain 2 (term 1 (0 1) (0 1)) (term 1 (1 1) (1 1)))"));
    for (const auto& u : monomials2(3)) CHECK(gerst::apply(fg, std::vector{u}) == compose(f, g, u));

    Sampler s(4);
    const Cochain id = identity_cochain(2);
    for (int i = 0; i < 20; ++i) {
        const Cochain h = s.cochain_of_arity(1);
        CHECK(insert(h, 1, id) == h);
        CHECK(insert(id, 1, h) == h);
    }

    // Inserting a function consumes the slot.
    CHECK(insert(co("(cochain 2 (term 1 (0 0) (2 0)))"), 1, Cochain::function(mono({3, 0}))) ==
          Cochain::function(mono({1, 0}, 6)));

    CHECK_THROWS_AS(insert(f, 2, g), PreconditionError);
    CHECK_THROWS_AS(insert(f, 0, g), PreconditionError);
    CHECK_THROWS_AS(insert(co("(cochain 2 (term 1 (0 0) (1 0)) (term 1 (0 0) (1 0) (1 0)))"), 1, g), ArityError);
}

TEST_CASE("insert agrees with nested evaluation on random inputs") {
    Sampler s(8);
    for (int trial = 0; trial < 60; ++trial) {
        const Cochain f = s.cochain(1), g = s.cochain();
        const int p = *f.arity(), q = *g.arity();
        const int k = s.uniform(1, p);
        std::vector<Polynomial> u;
        for (int i = 0; i < p + q - 1; ++i) u.push_back(s.polynomial(3, 3));
        std::vector<Polynomial> outer(u.begin(), u.begin() + (k - 1));
        outer.push_back(gerst::apply(g, std::vector<Polynomial>(u.begin() + (k - 1), u.begin() + (k - 1 + q))));
        outer.insert(outer.end(), u.begin() + (k - 1 + q), u.end());
        CHECK(gerst::apply(insert(f, k, g), u) == gerst::apply(f, outer));
    }
}

TEST_CASE("bracket") {
    const Cochain term = co("(cochain 2 (term 1 (2 0) (1 0)))");
    CHECK(bracket(euler_field(2, 1), term) == term);  // eigenvalue 2 - 1
    CHECK(bracket(euler_field(2, 2), term).is_zero());
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) CHECK(bracket(euler_field(2, i), euler_field(2, j)).is_zero());
    }

    // [x1 d2, x2 d1] = x1 d1 - x2 d2, checked against the commutator of operators.
    const Cochain f = co("(cochain 2 (term 1 (1 0) (0 1)))");
    const Cochain g = co("(cochain 2 (term 1 (0 1) (1 0)))");
    const Cochain fg = bracket(f, g);
    CHECK(fg == co("(cochain 2 (term 1 (1 0) (1 0)) (term -1 (0 1) (0 1)))"));
    for (const auto& u : monomials2(3)) {
        CHECK(gerst::apply(fg, std::vector{u}) == compose(f, g, u) - compose(g, f, u));
    }

    // Two functions bracket to zero; [chi, u] = chi(u).
    CHECK(bracket(Cochain::function(mono({1, 0})), Cochain::function(mono({0, 1}))).is_zero());
    CHECK(bracket(euler_field(2, 1), Cochain::function(mono({3, 1}))) == Cochain::function(mono({3, 1}, 3)));
}

TEST_CASE("Hochschild coboundary") {
    Sampler s(13);
    for (int i = 0; i < 20; ++i) CHECK(hochschild_delta(s.cochain_of_arity(0)).is_zero());

    const Cochain d12 = co("(cochain 2 (term 1 (0 0) (1 1)))");
    const Cochain expected = co("(cochain 2 (term -1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))");
    CHECK(hochschild_delta(d12) == expected);
    CHECK(delta_via_bracket(d12) == expected);
    for (const auto& u : monomials2(2)) {
        for (const auto& v : monomials2(2)) {
            const std::vector args{u, v};
            CHECK(gerst::apply(expected, args) == delta_by_evaluation(d12, 1, args));
        }
    }
}

TEST_CASE("Hochschild coboundary matches the formula on random cochains") {
    Sampler s(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Cochain f = s.cochain_of_arity(s.uniform(0, 2));
        const int p = *f.arity();
        std::vector<Polynomial> u;
        for (int i = 0; i <= p; ++i) u.push_back(s.polynomial(3, 3));
        CHECK(gerst::apply(hochschild_delta(f), u) == delta_by_evaluation(f, p, u));
    }
}

TEST_CASE("delta_via_bracket equals hochschild_delta on 200 seeded cochains") {
    CHECK(check_delta_bracket_agreement(LawConfig{2024, 200, {}}).passed);
}

TEST_CASE("Gerstenhaber laws on seeded samples") {
    const LawConfig cfg{99, 60, {}};
    for (auto law : {check_cup_associativity, check_graded_antisymmetry, check_jacobi, check_delta_squared,
                     check_vector_field_leibniz, check_bracket_evaluation, check_cup_evaluation}) {
        const LawResult r = law(cfg);
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}
