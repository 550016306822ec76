#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace slopekit {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Structural equality is therefore value equality.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT: implicit on purpose, integers are rationals
    Rational(const BigInt& num, const BigInt& den);
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "a" or "a/b" (optional leading '-'); throws DomainError.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_integer() const;
    /// Throws DomainError unless the value is an integer fitting in 64 bits.
    std::int64_t to_int64() const;
    /// Largest integer <= value.
    BigInt floor() const;
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "a/b" in lowest terms, or "a" for integers.
    std::string str() const;

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace slopekit
