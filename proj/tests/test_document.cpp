#include "helpers.hpp"

#include <gerst/document.hpp>
#include <gerst/errors.hpp>
#include <gerst/maurer_cartan.hpp>
#include <gerst/sampling.hpp>
#include <gerst/sexpr.hpp>

#include <doctest.h>

using namespace gerst;
using namespace gerst::test;

TEST_CASE("s-expression reader") {
    const SExpr e = parse_sexpr("  (a -3 1/2 \"x y\" ; comment\n (b))");
    REQUIRE(e.is_list());
    REQUIRE(e.items().size() == 5);
    CHECK(e.items()[0].is_symbol("a"));
    CHECK(e.items()[1].kind() == SExpr::Kind::integer);
    CHECK(e.items()[1].as_integer() == -3);
    CHECK(e.items()[2].kind() == SExpr::Kind::rational);
    CHECK(e.items()[2].as_rational() == Rational(1, 2));
    CHECK(e.items()[3].kind() == SExpr::Kind::string);
    CHECK(e.items()[3].text() == "x y");
    CHECK(e.items()[4].line() == 2);
    CHECK(to_string(e) == "(a -3 1/2 \"x y\" (b))");
    CHECK(parse_sexpr(to_string(e)) == e);
}

TEST_CASE("reader errors carry positions") {
    auto position = [](const char* text) {
        try {
            parse_sexpr(text);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair{0, 0};
    };
    CHECK(position("(a\n  (b") != std::pair{0, 0});
    CHECK(position("(a))") == std::pair{1, 4});
    CHECK(position("\n  )") == std::pair{2, 3});
    CHECK(position("(a \"open") != std::pair{0, 0});
    CHECK(position("") != std::pair{0, 0});
}

TEST_CASE("cochain documents") {
    const Cochain c = co("(cochain 2 (term 1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))");
    CHECK(c.size() == 2);
    CHECK(c.coefficient(bt({0, 0}, {{0, 1}, {1, 0}})) == -1);
    // Like terms merge and zeros vanish.
    CHECK(co("(cochain 2 (term 1/2 (1 0) (0 1)) (term 1/2 (1 0) (0 1)) (term 0 (0 0)))") ==
          co("(cochain 2 (term 1 (1 0) (0 1)))"));
    CHECK(co("(cochain 1)").is_zero());
    CHECK(print_cochain(co("(cochain 1 (term 2/4 (3)))")) == "(cochain 1\n  (term 1/2 (3)))\n");

    CHECK_THROWS_AS(co("(cochain 2 (term 1 (0 0 0)))"), DimensionError);
    CHECK_THROWS_AS(co("(cochain 2 (term 1 (-1 0)))"), ParseError);
    CHECK_THROWS_AS(co("(poly 2 (term 1 (0 0)))"), PreconditionError);
    CHECK_THROWS_AS(co("(cochain 9)"), Error);
    CHECK_THROWS_AS(co("(cochain 2 (term x (0 0)))"), Error);
}

TEST_CASE("seeded round trips") {
    Sampler s(500);
    for (int i = 0; i < 500; ++i) {
        const Cochain c = s.cochain();
        const std::string text = print_cochain(c);
        CHECK(parse_cochain(text) == c);
        CHECK(print_cochain(parse_cochain(text)) == text);
    }
    for (int i = 0; i < 50; ++i) {
        const Polynomial u = s.polynomial(4, 5);
        CHECK(parse_polynomial(print_polynomial(u)) == u);
    }
}

TEST_CASE("polynomial documents") {
    const Polynomial u = poly("(poly 2 (term 3 (1 0)) (term -1/2 (0 2)))");
    CHECK(u == mono({1, 0}, 3) - mono({0, 2}, Rational(1, 2)));
    CHECK(parse_document(print_polynomial(u)) == Document::of(u));
}

TEST_CASE("deformation documents") {
    const Deformation def = solve_maurer_cartan(co("(cochain 2 (term 1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))"), 3);
    const std::string text = print_document(Document::of(def));
    CHECK(text.starts_with(";"));
    const Document back = parse_document(text);
    CHECK(back.kind == Document::Kind::deformation);
    CHECK(back.deformation() == def);
    CHECK(print_document(back) == text);
    CHECK_THROWS_AS(parse_document("(deformation 2 (p 1 (term 1 (0 0) (1 0))))"), ParseError);
}

TEST_CASE("json image") {
    const auto j = to_json(Document::of(co("(cochain 2 (term -1/2 (1 0) (0 1)))")));
    CHECK(j == nlohmann::json::parse(R"(["cochain", 2, ["term", "-1/2", [1, 0], [0, 1]]])"));
    const auto r = to_json(parse_sexpr("(report 2 (status \"yes\") (weight (1 -1)))"));
    CHECK(r == nlohmann::json::parse(R"(["report", 2, ["status", "yes"], ["weight", [1, -1]]])"));
}

TEST_CASE("index lists") {
    CHECK(parse_index_list("(1 -2)") == std::vector{IntIndex{1, -2}});
    CHECK(parse_index_list("(1 0) (-1 0)", 2) == std::vector{IntIndex{1, 0}, IntIndex{-1, 0}});
    CHECK(parse_index_list("((1 0 2))") == std::vector{IntIndex{1, 0, 2}});
    CHECK_THROWS_AS(parse_index_list("(1 0) (1)", 2), DimensionError);
}
