#include <gerst/errors.hpp>
#include <gerst/rational.hpp>

#include <cctype>

namespace gerst {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
        den.front() == '+') {
        throw PreconditionError("malformed rational literal '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
    mpz_class n(std::string(strip_plus(num)), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

} // namespace gerst
