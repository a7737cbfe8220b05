#include "helpers.hpp"

#include <gerst/cochain.hpp>
#include <gerst/errors.hpp>
#include <gerst/axioms.hpp>
#include <gerst/sampling.hpp>

#include <doctest.h>

using namespace gerst;
using namespace gerst::test;

TEST_CASE("rational literals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1/-2"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
}

TEST_CASE("multi-indices") {
    CHECK_THROWS_AS(NatIndex({1, -1}), PreconditionError);
    CHECK_THROWS_AS(NatIndex(0), DimensionError);
    CHECK_THROWS_AS(NatIndex({1, 0}) + NatIndex({1, 0, 0}), DimensionError);
    CHECK(IntIndex{1, -2} < IntIndex{2, -5});
    CHECK(sub_indices(NatIndex{1, 2}).size() == 6);
    // Ordered pairs summing to (2, 2): (2 + 1)^2.
    CHECK(compositions(NatIndex{2, 2}, 2).size() == 9);
    // Triples summing to (1, 1): 3 * 3.
    CHECK(compositions(NatIndex{1, 1}, 3).size() == 9);
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial x1 = Polynomial::variable(2, 1);
    const Polynomial one = Polynomial::constant(2, 1);
    CHECK((x1 + one) * (x1 - one) == mono({2, 0}) - one);
    // d^{(1,1)} x1^2 x2 = 2 x1
    CHECK(derive(mono({2, 1}), NatIndex{1, 1}) == mono({1, 0}, 2));
    const Polynomial u = mono({3, 1}, Rational(1, 3)) + mono({0, 2}, -2);
    CHECK(derive(u, NatIndex{0, 0}) == u);
    CHECK(derive(mono({1, 0}), NatIndex{2, 0}).is_zero());
    CHECK_THROWS_AS(x1 + Polynomial::constant(3, 1), DimensionError);
}

TEST_CASE("canonicalize merges, cancels, and is idempotent") {
    const BasisTerm t = bt({1, 0}, {{1, 0}});
    const RawTerm cancel[] = {{t, 2}, {t, -2}};
    CHECK(canonicalize(2, cancel).is_zero());

    const BasisTerm d1 = bt({0, 0}, {{1, 0}});
    const RawTerm merge[] = {{d1, 1}, {d1, 1}};
    const Cochain merged = canonicalize(2, merge);
    CHECK(merged.size() == 1);
    CHECK(merged.coefficient(d1) == 2);

    Sampler s(7);
    for (int i = 0; i < 50; ++i) {
        const Cochain c = s.cochain() + s.cochain();
        std::vector<RawTerm> raw(c.terms().begin(), c.terms().end());
        CHECK(canonicalize(2, raw) == c);
    }

    const RawTerm bad[] = {{bt({0, 0, 0}, {{1, 0, 0}}), 1}};
    CHECK_THROWS_AS(canonicalize(2, bad), DimensionError);
}

TEST_CASE("canonical ordering is by arity, then x-part, then slots") {
    Cochain c(2);
    c.add_term(bt({0, 0}, {{1, 0}, {0, 1}}), 1);
    c.add_term(bt({2, 0}), 1);
    c.add_term(bt({0, 1}, {{1, 0}}), 1);
    c.add_term(bt({0, 0}, {{0, 1}}), 1);
    std::vector<int> arities;
    for (const auto& [t, coeff] : c.terms()) arities.push_back(t.arity());
    CHECK(arities == std::vector<int>{0, 1, 1, 2});
    CHECK(c.terms().begin()->first == bt({2, 0}));
    CHECK(std::next(c.terms().begin())->first == bt({0, 0}, {{0, 1}}));
    CHECK(c.arity() == std::nullopt);
    CHECK(c.arity_component(1).arity() == 1);
}

TEST_CASE("d^0 slots are distinct from absent slots") {
    CHECK(bt({0, 0}) != bt({0, 0}, {{0, 0}}));
    const Cochain id = Cochain::term(bt({0, 0}, {{0, 0}}));
    const Polynomial u = mono({1, 2}, 3);
    CHECK(gerst::apply(id, std::vector{u}) == u);
}

TEST_CASE("apply") {
    // x1 d1 (x1^2) = 2 x1^2
    CHECK(gerst::apply(co("(cochain 2 (term 1 (1 0) (1 0)))"), std::vector{mono({2, 0})}) == mono({2, 0}, 2));

    // Hand evaluation: (d1 (x) d2 - d2 (x) d1)(x1, x2) = 1*1 - 0*0 = 1.
    const Cochain pi = co("(cochain 2 (term 1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))");
    CHECK(gerst::apply(pi, std::vector{mono({1, 0}), mono({0, 1})}) == Polynomial::constant(2, 1));
    CHECK(gerst::apply(pi, std::vector{mono({0, 1}), mono({1, 0})}) == Polynomial::constant(2, -1));

    // Arity 0 is its own value.
    CHECK(gerst::apply(co("(cochain 2 (term 1 (2 0)))"), std::vector<Polynomial>{}) == mono({2, 0}));
    CHECK(gerst::apply(Cochain(2), std::vector{mono({1, 0})}).is_zero());

    CHECK_THROWS_AS(gerst::apply(pi, std::vector{mono({1, 0})}), ArityError);
    CHECK_THROWS_AS(gerst::apply(pi, std::vector{mono({1, 0}), mono({1, 0, 0})}), DimensionError);
    CHECK_THROWS_AS(gerst::apply(co("(cochain 2 (term 1 (0 0)) (term 1 (0 0) (1 0)))"), std::vector{mono({1, 0})}),
                    ArityError);
}

TEST_CASE("leibniz_split") {
    const auto row = leibniz_split(NatIndex{1, 0});
    REQUIRE(row.size() == 2);
    CHECK(row[0].first == NatIndex{0, 0});
    CHECK(row[0].second == NatIndex{1, 0});
    CHECK(row[0].coeff == 1);
    CHECK(row[1].first == NatIndex{1, 0});
    CHECK(row[1].second == NatIndex{0, 0});
    CHECK(row[1].coeff == 1);

    std::vector<Rational> binomial;
    for (const auto& term : leibniz_split(NatIndex{2, 0})) binomial.push_back(term.coeff);
    CHECK(binomial == std::vector<Rational>{1, 2, 1});

    // d^{(1,1)}(x1 * x2) via the split equals derive(x1 x2, (1,1)) = 1.
    Polynomial via_split(2);
    for (const auto& [b, c, coeff] : leibniz_split(NatIndex{1, 1})) {
        via_split += derive(mono({1, 0}), b) * derive(mono({0, 1}), c) * coeff;
    }
    CHECK(via_split == Polynomial::constant(2, 1));
}

TEST_CASE("leibniz_split agrees with direct differentiation of products") {
    Sampler s(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial u = s.polynomial(3, 4), v = s.polynomial(3, 4);
        const NatIndex a = s.nat_index(3);
        Polynomial sum(2);
        for (const auto& [b, c, coeff] : leibniz_split(a)) sum += derive(u, b) * derive(v, c) * coeff;
        CHECK(sum == derive(u * v, a));
    }
}

TEST_CASE("apply is multilinear and insensitive to how the cochain was assembled") {
    LawConfig cfg{3, 100, {}};
    CHECK(check_apply_multilinear(cfg).passed);

    Sampler s(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Cochain c = s.cochain_of_arity(2);
        std::vector<RawTerm> raw;
        for (const auto& [t, coeff] : c.terms()) {
            raw.push_back({t, coeff * 3});
            raw.push_back({t, coeff * -2});
        }
        const std::vector args{s.polynomial(3, 3), s.polynomial(3, 3)};
        CHECK(gerst::apply(canonicalize(2, raw), args) == gerst::apply(c, args));
    }
}

TEST_CASE("canonical equality is a congruence for + and scalar *") {
    Sampler s(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Cochain a = s.cochain(), b = s.cochain(), c = s.cochain();
        const Rational q = s.coefficient();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a + b) * q == a * q + b * q);
        CHECK((a - a).is_zero());
    }
}
