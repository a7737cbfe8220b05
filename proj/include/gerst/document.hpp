#pragma once

#include <gerst/cochain.hpp>
#include <gerst/maurer_cartan.hpp>
#include <gerst/polynomial.hpp>
#include <gerst/sexpr.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gerst {

/// Top-level file object: "(" kind n body ")".
///
///   (cochain 2 (term 1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))
///   (poly 2 (term 1/2 (2 0)))
///   (deformation 2 (p 1 (term 1/2 (0 0) (1 0) (0 1)) ...) (p 2 ...))
///   (report 2 <free-form s-expressions>)
///
/// Inside a cochain term the first index is the x-part a0 and the rest are the
/// d-slots in order.
struct Document {
    enum class Kind { cochain, poly, deformation, report };
    using Payload = std::variant<Cochain, Polynomial, Deformation, std::vector<SExpr>>;

    Kind kind;
    int dimension;
    Payload payload;

    static Document of(const Cochain& c) { return {Kind::cochain, c.dimension(), c}; }
    static Document of(const Polynomial& u) { return {Kind::poly, u.dimension(), u}; }
    static Document of(const Deformation& d) { return {Kind::deformation, d.dimension(), d}; }
    static Document report(int dim, std::vector<SExpr> body) { return {Kind::report, dim, std::move(body)}; }

    const Cochain& cochain() const;
    const Polynomial& polynomial() const;
    const Deformation& deformation() const;
    const std::vector<SExpr>& report_body() const;

    friend bool operator==(const Document&, const Document&) = default;
};

std::string to_string(Document::Kind kind);

Document parse_document(std::string_view text);
Document document_from_sexpr(const SExpr& e);
SExpr to_sexpr(const Document& doc);
/// Canonical textual form, newline-terminated.
std::string print_document(const Document& doc);

/// One-to-one JSON image of the s-expression: lists become arrays, integers
/// numbers, rationals/symbols/strings become strings.
nlohmann::json to_json(const SExpr& e);
nlohmann::json to_json(const Document& doc);

Cochain parse_cochain(std::string_view text);
std::string print_cochain(const Cochain& c);
Polynomial parse_polynomial(std::string_view text);
std::string print_polynomial(const Polynomial& u);

SExpr index_sexpr(const std::vector<int>& entries);
template <bool S>
SExpr index_sexpr(const BasicIndex<S>& a) {
    return index_sexpr(a.to_vector());
}
SExpr cochain_sexpr(const Cochain& c);
SExpr polynomial_sexpr(const Polynomial& u);

/// Parses "(a b)" or a bare list of such indices "(a b) (c d)".
std::vector<IntIndex> parse_index_list(std::string_view text, int dim);
/// As above, taking the dimension from the first index.
std::vector<IntIndex> parse_index_list(std::string_view text);

} // namespace gerst
