#include "dyc/rational.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dyc {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t narrow(const cpp_int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("rational component " + v.str() + " exceeds 64 bits");
    }
    return v.convert_to<std::int64_t>();
}

cpp_int parse_int(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
    }
    const cpp_int v{std::string(digits)};
    return text.front() == '-' ? cpp_int(-v) : v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    cpp_int n(num);
    cpp_int d(den);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    value_ = Value(n, d);
}

std::int64_t Rational::num() const { return narrow(boost::multiprecision::numerator(value_)); }
std::int64_t Rational::den() const { return narrow(boost::multiprecision::denominator(value_)); }

std::int64_t Rational::floor() const {
    const cpp_int n = boost::multiprecision::numerator(value_);
    const cpp_int d = boost::multiprecision::denominator(value_);
    cpp_int q = n / d;  // truncates toward zero
    if (n % d != 0 && n < 0) --q;
    return narrow(q);
}

std::string Rational::str() const {
    const cpp_int n = boost::multiprecision::numerator(value_);
    const cpp_int d = boost::multiprecision::denominator(value_);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Value(parse_int(text, text)));
    const cpp_int num = parse_int(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') throw std::invalid_argument("negative denominator: '" + std::string(text) + "'");
    const cpp_int den = parse_int(den_text, text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(Value(num, den));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw std::domain_error("division by zero");
    return Rational(Rational::Value(a.value_ / b.value_));
}

}  // namespace dyc
