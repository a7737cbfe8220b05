#include <gerst/document.hpp>

namespace gerst {

namespace {

[[noreturn]] void fail_at(const SExpr& e, const std::string& what) { throw ParseError(what, e.line(), e.column()); }

std::vector<int> parse_entries(const SExpr& e, int dim) {
    if (!e.is_list()) fail_at(e, "expected a multi-index list");
    if (static_cast<int>(e.items().size()) != dim) {
        throw DimensionError(std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": multi-index has " +
                             std::to_string(e.items().size()) + " entries, dimension is " + std::to_string(dim));
    }
    std::vector<int> out;
    for (const auto& item : e.items()) out.push_back(static_cast<int>(item.as_integer()));
    return out;
}

NatIndex parse_nat(const SExpr& e, int dim) {
    const auto entries = parse_entries(e, dim);
    for (int v : entries) {
        if (v < 0) fail_at(e, "exponents must be nonnegative");
    }
    return NatIndex(entries);
}

// (term c a0 a1 ... ap)
RawTerm parse_term(const SExpr& e, int dim) {
    if (!e.is_list() || e.items().size() < 3 || !e.items()[0].is_symbol("term")) {
        fail_at(e, "expected (term coefficient index index*)");
    }
    RawTerm raw{BasisTerm{parse_nat(e.items()[2], dim), {}}, e.items()[1].as_rational()};
    for (std::size_t i = 3; i < e.items().size(); ++i) raw.first.slots.push_back(parse_nat(e.items()[i], dim));
    return raw;
}

Cochain parse_cochain_body(const SExpr& e, std::size_t from, int dim) {
    std::vector<RawTerm> raw;
    for (std::size_t i = from; i < e.items().size(); ++i) raw.push_back(parse_term(e.items()[i], dim));
    return canonicalize(dim, raw);
}

SExpr term_sexpr(const BasisTerm& t, const Rational& c) {
    SExpr e = SExpr::list({SExpr::symbol("term"), SExpr::rational(c), index_sexpr(t.x)});
    for (const auto& s : t.slots) e.push(index_sexpr(s));
    return e;
}

SExpr header(const char* kind, int dim) { return SExpr::list({SExpr::symbol(kind), SExpr::integer(dim)}); }

} // namespace

const Cochain& Document::cochain() const {
    if (kind != Kind::cochain) throw PreconditionError("expected a cochain document, got " + to_string(kind));
    return std::get<Cochain>(payload);
}

const Polynomial& Document::polynomial() const {
    if (kind != Kind::poly) throw PreconditionError("expected a poly document, got " + to_string(kind));
    return std::get<Polynomial>(payload);
}

const Deformation& Document::deformation() const {
    if (kind != Kind::deformation) throw PreconditionError("expected a deformation document, got " + to_string(kind));
    return std::get<Deformation>(payload);
}

const std::vector<SExpr>& Document::report_body() const {
    if (kind != Kind::report) throw PreconditionError("expected a report document, got " + to_string(kind));
    return std::get<std::vector<SExpr>>(payload);
}

std::string to_string(Document::Kind kind) {
    switch (kind) {
    case Document::Kind::cochain: return "cochain";
    case Document::Kind::poly: return "poly";
    case Document::Kind::deformation: return "deformation";
    case Document::Kind::report: return "report";
    }
    return "?";
}

SExpr index_sexpr(const std::vector<int>& entries) {
    SExpr e = SExpr::list();
    for (int v : entries) e.push(SExpr::integer(v));
    return e;
}

SExpr cochain_sexpr(const Cochain& c) {
    SExpr e = header("cochain", c.dimension());
    for (const auto& [t, coeff] : c.terms()) e.push(term_sexpr(t, coeff));
    return e;
}

SExpr polynomial_sexpr(const Polynomial& u) {
    SExpr e = header("poly", u.dimension());
    for (const auto& [a, coeff] : u.terms()) {
        e.push(SExpr::list({SExpr::symbol("term"), SExpr::rational(coeff), index_sexpr(a)}));
    }
    return e;
}

Document document_from_sexpr(const SExpr& e) {
    if (!e.is_list() || e.items().size() < 2 || e.items()[0].kind() != SExpr::Kind::symbol) {
        fail_at(e, "expected (kind dimension body...)");
    }
    const std::string& kind = e.items()[0].text();
    const long dim = e.items()[1].as_integer();
    if (dim < 1 || dim > kMaxDimension) fail_at(e.items()[1], "dimension out of range");
    const int n = static_cast<int>(dim);
    if (kind == "cochain") return Document::of(parse_cochain_body(e, 2, n));
    if (kind == "poly") {
        Polynomial u(n);
        for (std::size_t i = 2; i < e.items().size(); ++i) {
            const auto raw = parse_term(e.items()[i], n);
            if (raw.first.arity() != 0) fail_at(e.items()[i], "polynomial terms take exactly one index");
            u.add_term(raw.first.x, raw.second);
        }
        return Document::of(u);
    }
    if (kind == "deformation") {
        Deformation def(n, {});
        for (std::size_t i = 2; i < e.items().size(); ++i) {
            const SExpr& block = e.items()[i];
            if (!block.is_list() || block.items().size() < 2 || !block.items()[0].is_symbol("p")) {
                fail_at(block, "expected (p k term*)");
            }
            const long k = block.items()[1].as_integer();
            if (k < 1 || k > 1000) fail_at(block.items()[1], "deformation order out of range");
            try {
                def.set_term(static_cast<int>(k), parse_cochain_body(block, 2, n));
            } catch (const ArityError& err) {
                fail_at(block, err.what());
            }
        }
        return Document::of(def);
    }
    if (kind == "report") return Document::report(n, {e.items().begin() + 2, e.items().end()});
    fail_at(e.items()[0], "unknown document kind '" + kind + "'");
}

Document parse_document(std::string_view text) { return document_from_sexpr(parse_sexpr(text)); }

SExpr to_sexpr(const Document& doc) {
    switch (doc.kind) {
    case Document::Kind::cochain: return cochain_sexpr(doc.cochain());
    case Document::Kind::poly: return polynomial_sexpr(doc.polynomial());
    case Document::Kind::deformation: {
        SExpr e = header("deformation", doc.dimension);
        const auto& def = doc.deformation();
        for (int k = 1; k <= def.order(); ++k) {
            SExpr block = SExpr::list({SExpr::symbol("p"), SExpr::integer(k)});
            for (const auto& [t, c] : def.term(k).terms()) block.push(term_sexpr(t, c));
            e.push(std::move(block));
        }
        return e;
    }
    case Document::Kind::report: {
        SExpr e = header("report", doc.dimension);
        for (const auto& item : doc.report_body()) e.push(item);
        return e;
    }
    }
    return SExpr::list();
}

std::string print_document(const Document& doc) {
    std::string out;
    if (doc.kind == Document::Kind::deformation) {
        out += "; star product f*g = fg + sum_k t^k p_k(f,g); p_1 = pi_1/2\n";
    }
    return out + pretty(to_sexpr(doc)) + "\n";
}

nlohmann::json to_json(const SExpr& e) {
    switch (e.kind()) {
    case SExpr::Kind::integer: return std::stol(e.text());
    case SExpr::Kind::list: {
        auto arr = nlohmann::json::array();
        for (const auto& item : e.items()) arr.push_back(to_json(item));
        return arr;
    }
    default: return e.text();
    }
}

nlohmann::json to_json(const Document& doc) { return to_json(to_sexpr(doc)); }

Cochain parse_cochain(std::string_view text) { return parse_document(text).cochain(); }
std::string print_cochain(const Cochain& c) { return print_document(Document::of(c)); }
Polynomial parse_polynomial(std::string_view text) { return parse_document(text).polynomial(); }
std::string print_polynomial(const Polynomial& u) { return print_document(Document::of(u)); }

namespace {

// Accepts both "(a b) (c d)" and "((a b) (c d))".
SExpr index_list_sexpr(std::string_view text) {
    SExpr e = parse_sexpr("(" + std::string(text) + ")");
    if (e.items().size() == 1 && e.items()[0].is_list() && !e.items()[0].items().empty() &&
        e.items()[0].items()[0].is_list()) {
        return e.items()[0];
    }
    return e;
}

} // namespace

std::vector<IntIndex> parse_index_list(std::string_view text) {
    const SExpr e = index_list_sexpr(text);
    if (e.items().empty() || !e.items()[0].is_list()) return {};
    return parse_index_list(text, static_cast<int>(e.items()[0].items().size()));
}

std::vector<IntIndex> parse_index_list(std::string_view text, int dim) {
    const SExpr e = index_list_sexpr(text);
    std::vector<IntIndex> out;
    for (const auto& item : e.items()) out.emplace_back(parse_entries(item, dim));
    return out;
}

} // namespace gerst
