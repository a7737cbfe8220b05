#pragma once

#include <gerst/errors.hpp>
#include <gerst/rational.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gerst {

/// Syntax error carrying a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// S-expression node. Atoms keep their canonical text; `rational` atoms print
/// as "p" or "p/q" and map to JSON strings, `integer` atoms map to numbers.
class SExpr {
public:
    enum class Kind { integer, rational, symbol, string, list };

    static SExpr integer(long value);
    static SExpr rational(const Rational& value);
    static SExpr symbol(std::string name);
    static SExpr string(std::string text);
    static SExpr list(std::vector<SExpr> items = {});

    Kind kind() const { return kind_; }
    bool is_list() const { return kind_ == Kind::list; }
    bool is_symbol(std::string_view name) const { return kind_ == Kind::symbol && text_ == name; }
    /// Atom text (unquoted for strings).
    const std::string& text() const { return text_; }
    const std::vector<SExpr>& items() const { return items_; }
    std::vector<SExpr>& items() { return items_; }

    /// Value of an integer atom; throws otherwise.
    long as_integer() const;
    /// Value of an integer or rational atom; throws otherwise.
    Rational as_rational() const;

    SExpr& push(SExpr item);

    int line() const { return line_; }
    int column() const { return column_; }

    friend bool operator==(const SExpr& a, const SExpr& b) {
        return a.kind_ == b.kind_ && a.text_ == b.text_ && a.items_ == b.items_;
    }

private:
    friend class SExprParser;
    Kind kind_ = Kind::list;
    std::string text_;
    std::vector<SExpr> items_;
    int line_ = 0;
    int column_ = 0;
};

/// Parses exactly one expression; `;` starts a comment running to end of line.
SExpr parse_sexpr(std::string_view text);

/// Single-line rendering.
std::string to_string(const SExpr& e);

/// Multi-line rendering: the top-level list and any list holding nested lists
/// break one child per line.
std::string pretty(const SExpr& e, int indent = 0);

} // namespace gerst
