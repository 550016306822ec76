#include "slopekit/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "slopekit/error.hpp"

namespace slopekit {

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) {
        throw DomainError("ext_gcd: both arguments are zero");
    }
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, x = 0;
    std::int64_t old_y = 0, y = 1;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r = std::exchange(r, old_r - quot * r);
        old_x = std::exchange(x, old_x - quot * x);
        old_y = std::exchange(y, old_y - quot * y);
    }
    if (old_r < 0) {
        return {-old_r, -old_x, -old_y};
    }
    return {old_r, old_x, old_y};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 2) {
        throw DomainError("mod_inverse: modulus must be >= 2");
    }
    const ExtGcd e = ext_gcd(mod(a, m), m);
    if (e.g != 1) {
        throw DomainError("mod_inverse: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
    }
    return mod(e.x, m);
}

CFPlus::CFPlus(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw DomainError("CFPlus: empty expansion");
    }
    if (std::any_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c < 1; })) {
        throw DomainError("CFPlus: coefficients must be >= 1");
    }
}

CFPlus CFPlus::reversed() const {
    return CFPlus(std::vector<std::int64_t>(coeffs_.rbegin(), coeffs_.rend()));
}

CFMinus::CFMinus(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw DomainError("CFMinus: empty expansion");
    }
    if (std::any_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c < 2; })) {
        throw DomainError("CFMinus: coefficients must be >= 2");
    }
}

CFPlus cf_plus_expand(std::int64_t num, std::int64_t den, std::optional<Parity> parity) {
    if (num <= 0 || den <= 0) {
        throw DomainError("cf_plus_expand: input must be positive");
    }
    if (num < den) {
        throw DomainError("cf_plus_expand: input must be >= 1 (leading coefficient would be 0)");
    }
    std::vector<std::int64_t> out;
    while (den != 0) {
        out.push_back(num / den);
        num = std::exchange(den, num % den);
    }
    if (parity) {
        const bool odd = out.size() % 2 == 1;
        if (odd != (*parity == Parity::Odd)) {
            if (out.back() >= 2) {
                out.back() -= 1;
                out.push_back(1);
            } else {
                // only [1] has a trailing 1 in canonical form
                throw DomainError("cf_plus_expand: 1 has no even-length expansion");
            }
        }
    }
    return CFPlus(std::move(out));
}

Rational cf_plus_eval(const CFPlus& cf) {
    const auto& c = cf.coefficients();
    // Backward evaluation: value = num/den of the tail.
    BigInt num = static_cast<long>(c.back());
    BigInt den = 1;
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
        BigInt next = BigInt(static_cast<long>(*it)) * num + den;
        den = num;
        num = next;
    }
    return Rational(num, den);
}

std::vector<std::pair<BigInt, BigInt>> cf_convergents(const CFPlus& cf) {
    std::vector<std::pair<BigInt, BigInt>> out;
    out.reserve(cf.size());
    BigInt p_older = 0, q_older = 1;  // p_{-2}, q_{-2}
    BigInt p_old = 1, q_old = 0;      // p_{-1}, q_{-1}
    for (std::int64_t c : cf.coefficients()) {
        const BigInt coeff = static_cast<long>(c);
        BigInt p_next = coeff * p_old + p_older;
        BigInt q_next = coeff * q_old + q_older;
        p_older = std::exchange(p_old, p_next);
        q_older = std::exchange(q_old, q_next);
        out.emplace_back(std::move(p_next), std::move(q_next));
    }
    return out;
}

std::int64_t cf_reverse_dual(std::int64_t p, std::int64_t q, std::optional<Parity> parity) {
    if (q <= 0 || q >= p || std::gcd(p, q) != 1) {
        throw DomainError("cf_reverse_dual: need 0 < q < p with gcd(p, q) = 1");
    }
    const Rational rev = cf_plus_eval(cf_plus_expand(p, q, parity).reversed());
    if (rev.numerator() != static_cast<long>(p)) {
        throw DomainError("cf_reverse_dual: reversal did not preserve the numerator");
    }
    return Rational(rev.denominator(), BigInt(1)).to_int64();
}

CFMinus cf_minus_expand(std::int64_t p, std::int64_t q) {
    if (q <= 0 || p <= q) {
        throw DomainError("cf_minus_expand: need p/q > 1");
    }
    if (std::gcd(p, q) != 1) {
        throw DomainError("cf_minus_expand: need gcd(p, q) = 1");
    }
    std::vector<std::int64_t> out;
    // p/q = a - 1/(q/(a*q - p)) with a = ceil(p/q)
    while (q != 0) {
        const std::int64_t a = ceil_div(p, q);
        out.push_back(a);
        const std::int64_t rem = a * q - p;
        p = q;
        q = rem;
    }
    return CFMinus(std::move(out));
}

Rational cf_minus_eval(const CFMinus& cf) {
    const auto& c = cf.coefficients();
    Rational value(c.back());
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
        value = Rational(*it) - Rational(1) / value;
    }
    return value;
}

}  // namespace slopekit
