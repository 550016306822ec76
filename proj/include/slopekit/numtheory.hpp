#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "slopekit/rational.hpp"

namespace slopekit {

struct ExtGcd {
    std::int64_t g;  // always > 0
    std::int64_t x;
    std::int64_t y;  // a*x + b*y == g
};

/// Extended Euclid. Throws DomainError when a == b == 0.
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m (m >= 2), as a residue in [1, m-1].
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Floor and ceiling of a/b for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0);
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

enum class Parity { Even, Odd };

/// Regular continued fraction [c0, c1, ..., cn]^+ = c0 + 1/(c1 + 1/(...)),
/// every coefficient >= 1.
class CFPlus {
public:
    explicit CFPlus(std::vector<std::int64_t> coefficients);

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    CFPlus reversed() const;

    friend bool operator==(const CFPlus&, const CFPlus&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// Negative (Hirzebruch-Jung) continued fraction [a1, ..., al]^- = a1 - 1/(a2 - 1/(...)),
/// every coefficient >= 2.
class CFMinus {
public:
    explicit CFMinus(std::vector<std::int64_t> coefficients);

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    friend bool operator==(const CFMinus&, const CFMinus&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// Expansion of num/den >= 1. The canonical form ends in a coefficient >= 2
/// (unless it is [1]); a requested parity is reached by [..., c] <-> [..., c-1, 1].
CFPlus cf_plus_expand(std::int64_t num, std::int64_t den, std::optional<Parity> parity = std::nullopt);

Rational cf_plus_eval(const CFPlus& cf);

/// Convergents p_n/q_n of cf, in order; the last one equals cf_plus_eval(cf).
std::vector<std::pair<BigInt, BigInt>> cf_convergents(const CFPlus& cf);

/// For 0 < q < p coprime: the q' in [1, p-1] with p/q' = reverse of the
/// expansion of p/q. With n + 1 the expansion length, q*q' = (-1)^n mod p.
std::int64_t cf_reverse_dual(std::int64_t p, std::int64_t q, std::optional<Parity> parity = std::nullopt);

/// Hirzebruch-Jung expansion of p/q > 1 with gcd(p, q) = 1.
CFMinus cf_minus_expand(std::int64_t p, std::int64_t q);

Rational cf_minus_eval(const CFMinus& cf);

}  // namespace slopekit
