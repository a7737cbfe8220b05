#include <gerst/sexpr.hpp>

#include <algorithm>
#include <cctype>
#include <regex>

namespace gerst {

namespace {

bool is_integer_token(const std::string& s) {
    static const std::regex re("[-+]?[0-9]+");
    return std::regex_match(s, re);
}

bool is_rational_token(const std::string& s) {
    static const std::regex re("[-+]?[0-9]+/[0-9]+");
    return std::regex_match(s, re);
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

bool has_nested_list(const SExpr& e) {
    for (const auto& item : e.items()) {
        if (!item.is_list()) continue;
        for (const auto& inner : item.items()) {
            if (inner.is_list()) return true;
        }
    }
    return false;
}

} // namespace

class SExprParser {
public:
    explicit SExprParser(std::string_view text) : text_(text) {}

    SExpr parse_document() {
        skip_space();
        if (pos_ >= text_.size()) fail("empty input");
        SExpr e = parse();
        skip_space();
        if (pos_ < text_.size()) fail("trailing input after expression");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char ch = text_[pos_];
            if (ch == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                break;
            }
        }
    }

    SExpr parse() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input, missing ')'");
        const int line = line_;
        const int column = column_;
        SExpr e;
        const char ch = text_[pos_];
        if (ch == '(') {
            advance();
            e.kind_ = SExpr::Kind::list;
            while (true) {
                skip_space();
                if (pos_ >= text_.size()) fail("unbalanced '(' opened at " + std::to_string(line) + ":" + std::to_string(column));
                if (text_[pos_] == ')') {
                    advance();
                    break;
                }
                e.items_.push_back(parse());
            }
        } else if (ch == ')') {
            fail("unexpected ')'");
        } else if (ch == '"') {
            advance();
            e.kind_ = SExpr::Kind::string;
            while (true) {
                if (pos_ >= text_.size()) fail("unterminated string");
                char c = text_[pos_];
                advance();
                if (c == '"') break;
                if (c == '\\') {
                    if (pos_ >= text_.size()) fail("unterminated string");
                    c = text_[pos_];
                    advance();
                }
                e.text_ += c;
            }
        } else {
            std::string token;
            while (pos_ < text_.size()) {
                const char c = text_[pos_];
                if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';' || c == '"') break;
                token += c;
                advance();
            }
            if (is_integer_token(token)) {
                e.kind_ = SExpr::Kind::integer;
                e.text_ = mpz_class(token.front() == '+' ? token.substr(1) : token).get_str();
            } else if (is_rational_token(token)) {
                e.kind_ = SExpr::Kind::rational;
                try {
                    e.text_ = to_string(parse_rational(token));
                } catch (const Error& err) {
                    throw ParseError(err.what(), line, column);
                }
            } else {
                e.kind_ = SExpr::Kind::symbol;
                e.text_ = token;
            }
        }
        e.line_ = line;
        e.column_ = column;
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

SExpr SExpr::integer(long value) {
    SExpr e;
    e.kind_ = Kind::integer;
    e.text_ = std::to_string(value);
    return e;
}

SExpr SExpr::rational(const Rational& value) {
    SExpr e;
    e.kind_ = Kind::rational;
    e.text_ = gerst::to_string(value);
    return e;
}

SExpr SExpr::symbol(std::string name) {
    SExpr e;
    e.kind_ = Kind::symbol;
    e.text_ = std::move(name);
    return e;
}

SExpr SExpr::string(std::string text) {
    SExpr e;
    e.kind_ = Kind::string;
    e.text_ = std::move(text);
    return e;
}

SExpr SExpr::list(std::vector<SExpr> items) {
    SExpr e;
    e.kind_ = Kind::list;
    e.items_ = std::move(items);
    return e;
}

long SExpr::as_integer() const {
    if (kind_ != Kind::integer) throw ParseError("expected an integer", line_, column_);
    try {
        return std::stol(text_);
    } catch (const std::exception&) {
        throw ParseError("integer out of range", line_, column_);
    }
}

Rational SExpr::as_rational() const {
    if (kind_ != Kind::integer && kind_ != Kind::rational) throw ParseError("expected a rational", line_, column_);
    return parse_rational(text_);
}

SExpr& SExpr::push(SExpr item) {
    items_.push_back(std::move(item));
    return *this;
}

SExpr parse_sexpr(std::string_view text) { return SExprParser(text).parse_document(); }

std::string to_string(const SExpr& e) {
    switch (e.kind()) {
    case SExpr::Kind::string: return quote(e.text());
    case SExpr::Kind::list: {
        std::string out = "(";
        for (std::size_t i = 0; i < e.items().size(); ++i) {
            if (i) out += ' ';
            out += to_string(e.items()[i]);
        }
        return out + ")";
    }
    default: return e.text();
    }
}

std::string pretty(const SExpr& e, int indent) {
    const bool top = indent == 0 && e.is_list() &&
                     std::any_of(e.items().begin(), e.items().end(), [](const SExpr& i) { return i.is_list(); });
    if (!top && (!e.is_list() || !has_nested_list(e))) return to_string(e);
    std::string out = "(";
    bool first = true;
    for (const auto& item : e.items()) {
        if (item.is_list()) {
            out += "\n" + std::string(indent + 2, ' ') + pretty(item, indent + 2);
        } else {
            if (!first) out += ' ';
            out += to_string(item);
        }
        first = false;
    }
    return out + ")";
}

} // namespace gerst
