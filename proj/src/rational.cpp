#include "dhl/rational.hpp"

#include <cstdio>

namespace dhl {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_text = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) {
        throw ParseError("not a rational: '" + text + "'");
    }
    const BigInt num(num_text);
    const BigInt den(den_text);
    if (den == 0) {
        throw ParseError("zero denominator: '" + text + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    return value.str();
}

std::string to_decimal(const Rational& value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value.convert_to<double>());
    return buf;
}

}  // namespace dhl
