#include "slopekit/rational.hpp"

#include <ostream>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace

Rational::Rational(std::int64_t value) : value_(big(value), 1) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(big(num), big(den)) {}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        if (part.empty()) {
            throw DomainError("Rational::parse: empty component in '" + std::string(text) + "'");
        }
        std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
        if (start == part.size()) {
            throw DomainError("Rational::parse: bad integer in '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw DomainError("Rational::parse: bad integer in '" + std::string(text) + "'");
            }
        }
        std::string digits(part.front() == '+' ? part.substr(1) : part);
        return BigInt(digits, 10);
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text), BigInt(1));
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::int64_t Rational::to_int64() const {
    if (!is_integer() || !value_.get_num().fits_slong_p()) {
        throw DomainError("Rational::to_int64: " + str() + " is not a 64-bit integer");
    }
    return value_.get_num().get_si();
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) {
        throw DomainError("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace slopekit
