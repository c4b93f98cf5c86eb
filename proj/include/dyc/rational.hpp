#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace dyc {

/// Exact rational number, arbitrary precision (boost cpp_rational underneath).
class Rational {
public:
    using Value = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error on a zero denominator.
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(Value value) : value_(std::move(value)) {}

    /// Numerator and denominator in lowest terms, denominator positive.
    /// Throw std::overflow_error if they do not fit in 64 bits.
    [[nodiscard]] std::int64_t num() const;
    [[nodiscard]] std::int64_t den() const;
    [[nodiscard]] bool is_integer() const { return boost::multiprecision::denominator(value_) == 1; }
    [[nodiscard]] int sign() const { return value_.sign(); }
    [[nodiscard]] const Value& value() const { return value_; }

    /// Largest integer not greater than the value; std::overflow_error if it
    /// does not fit in 64 bits.
    [[nodiscard]] std::int64_t floor() const;

    /// "p/q", or "p" for integers.
    [[nodiscard]] std::string str() const;

    /// Accepts "p", "-p", "p/q" with decimal digits. Throws
    /// std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    Rational operator-() const { return Rational(Value(-value_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Value(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Value(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Value(a.value_ * b.value_)); }
    /// Throws std::domain_error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    Value value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dyc
