#include "slopekit/torus_knot.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw DomainError("polynomial coefficient overflow");
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw DomainError("polynomial coefficient overflow");
    }
    return out;
}

// Dense integer polynomial, index = exponent.
using Dense = std::vector<std::int64_t>;

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
        }
    }
    return out;
}

// t^n - 1
Dense binomial(std::int64_t n) {
    Dense out(static_cast<std::size_t>(n) + 1, 0);
    out[0] = -1;
    out[static_cast<std::size_t>(n)] = 1;
    return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
Dense dense_div_exact(Dense num, const Dense& den) {
    const std::size_t dn = den.size() - 1;
    Dense quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const std::int64_t c = num[k];
        quot[k - dn] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dn; ++j) {
            num[k - dn + j] -= checked_mul(c, den[j]);
        }
    }
    for (std::size_t k = 0; k < dn; ++k) {
        if (num[k] != 0) {
            throw std::logic_error("torus knot Alexander polynomial: inexact division");
        }
    }
    return quot;
}

}  // namespace

TorusKnot::TorusKnot(std::int64_t r, std::int64_t s) : r_(r), s_(s) {
    if (r < 2 || std::abs(s) < 2) {
        throw DomainError("torus knot needs r >= 2 and |s| >= 2");
    }
    if (std::gcd(r, std::abs(s)) != 1) {
        throw DomainError("torus knot parameters must be coprime");
    }
}

TorusKnot TorusKnot::canonical() const {
    const std::int64_t a = std::abs(s_);
    const std::int64_t sign = s_ < 0 ? -1 : 1;
    return r_ < a ? TorusKnot(r_, s_) : TorusKnot(a, sign * r_);
}

std::string TorusKnot::str() const {
    return "T(" + std::to_string(r_) + "," + std::to_string(s_) + ")";
}

CableKnot::CableKnot(std::int64_t w, std::int64_t c, TorusKnot companion)
    : w_(w), c_(c), companion_(companion) {
    if (w < 2) {
        throw DomainError("cable winding number must be >= 2");
    }
    if (std::gcd(w, std::abs(c)) != 1) {
        throw DomainError("cable parameters (w, c) must be coprime");
    }
}

std::string CableKnot::str() const {
    return "C(" + std::to_string(w_) + "," + std::to_string(c_) + ";" + companion_.str() + ")";
}

LaurentPoly::LaurentPoly(std::map<std::int64_t, std::int64_t> coefficients) {
    for (const auto& [e, c] : coefficients) {
        if (c != 0) {
            coeffs_.emplace(e, c);
        }
    }
}

std::int64_t LaurentPoly::coefficient(std::int64_t exponent) const {
    const auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

std::int64_t LaurentPoly::min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

bool LaurentPoly::is_symmetric() const {
    for (const auto& [e, c] : coeffs_) {
        if (coefficient(-e) != c) {
            return false;
        }
    }
    return true;
}

std::int64_t LaurentPoly::eval_at_one() const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : coeffs_) {
        sum = checked_add(sum, c);
    }
    return sum;
}

Rational LaurentPoly::second_derivative_at_one() const {
    Rational sum(0);
    for (const auto& [e, c] : coeffs_) {
        sum += Rational(c) * Rational(e) * Rational(e - 1);
    }
    return sum;
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t w) const {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [e, c] : coeffs_) {
        out[checked_mul(e, w)] += c;
    }
    return LaurentPoly(std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            auto& slot = out[ea + eb];
            slot = checked_add(slot, checked_mul(ca, cb));
        }
    }
    return LaurentPoly(std::move(out));
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto [e, c] = *it;
        const std::int64_t mag = std::abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag;
        }
        os << "t";
        if (e != 1) {
            os << "^" << e;
        }
    }
    return os.str();
}

TorsionCoefficients::TorsionCoefficients(std::int64_t bound, std::vector<std::int64_t> values)
    : bound_(bound), values_(std::move(values)) {
    if (bound < 0 || values_.size() != static_cast<std::size_t>(2 * bound + 1)) {
        throw DomainError("TorsionCoefficients: table size must be 2*bound + 1");
    }
}

TorsionCoefficients TorsionCoefficients::from_nonnegative(std::vector<std::int64_t> values) {
    while (!values.empty() && values.back() == 0) {
        values.pop_back();
    }
    const auto bound = static_cast<std::int64_t>(values.size());
    std::vector<std::int64_t> table(static_cast<std::size_t>(2 * bound + 1), 0);
    for (std::int64_t k = 0; k < bound; ++k) {
        table[static_cast<std::size_t>(bound + k)] = values[static_cast<std::size_t>(k)];
    }
    for (std::int64_t k = 1; k <= bound; ++k) {
        table[static_cast<std::size_t>(bound - k)] = table[static_cast<std::size_t>(bound + k)] + k;
    }
    return TorsionCoefficients(bound, std::move(table));
}

std::int64_t TorsionCoefficients::at(std::int64_t k) const {
    if (k > bound_) {
        return 0;
    }
    if (k < -bound_) {
        return -k;
    }
    return values_[static_cast<std::size_t>(k + bound_)];
}

LaurentPoly alexander_torus(std::int64_t r, std::int64_t s) { return alexander_torus(TorusKnot(r, s)); }

LaurentPoly alexander_torus(const TorusKnot& k) {
    // The mirror has the same Alexander polynomial.
    const std::int64_t r = k.r();
    const std::int64_t s = std::abs(k.s());
    const Dense num = dense_mul(binomial(r * s), binomial(1));
    const Dense den = dense_mul(binomial(r), binomial(s));
    const Dense quot = dense_div_exact(num, den);
    const std::int64_t shift = (r - 1) * (s - 1) / 2;
    std::map<std::int64_t, std::int64_t> terms;
    for (std::size_t e = 0; e < quot.size(); ++e) {
        terms[static_cast<std::int64_t>(e) - shift] = quot[e];
    }
    return LaurentPoly(std::move(terms));
}

LaurentPoly alexander_cable(const CableKnot& k) {
    const LaurentPoly pattern =
        std::abs(k.c()) <= 1 ? LaurentPoly::one() : alexander_torus(TorusKnot(k.w(), k.c()));
    return alexander_torus(k.companion()).substitute_power(k.w()) * pattern;
}

LaurentPoly alexander(const Knot& k) {
    return std::visit(
        [](const auto& knot) {
            if constexpr (std::is_same_v<std::decay_t<decltype(knot)>, TorusKnot>) {
                return alexander_torus(knot);
            } else {
                return alexander_cable(knot);
            }
        },
        k);
}

TorsionCoefficients torsion_coefficients(const LaurentPoly& poly) {
    if (!poly.is_symmetric() || poly.eval_at_one() != 1) {
        throw DomainError("torsion_coefficients: polynomial is not symmetric with Delta(1) = 1");
    }
    const std::int64_t deg = poly.max_degree();
    std::vector<std::int64_t> table(static_cast<std::size_t>(2 * deg + 1), 0);
    for (std::int64_t k = -deg; k <= deg; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t i = 1; k + i <= deg; ++i) {
            sum = checked_add(sum, checked_mul(i, poly.coefficient(k + i)));
        }
        table[static_cast<std::size_t>(k + deg)] = sum;
    }
    return TorsionCoefficients(deg, std::move(table));
}

LaurentPoly alexander_from_torsion(const TorsionCoefficients& t) {
    const std::int64_t n = t.bound() + 1;
    std::map<std::int64_t, std::int64_t> terms;
    for (std::int64_t k = -n; k <= n; ++k) {
        terms[k] = t.at(k + 1) - 2 * t.at(k) + t.at(k - 1);
    }
    LaurentPoly poly(std::move(terms));
    if (!poly.is_symmetric() || poly.eval_at_one() != 1) {
        throw DomainError("alexander_from_torsion: data does not come from a normalized polynomial");
    }
    return poly;
}

std::int64_t StaircaseInvariants::nu_plus() const {
    std::int64_t k = 0;
    while (v(k) != 0) {
        ++k;
    }
    return k;
}

StaircaseInvariants StaircaseInvariants::unknot() {
    return {LaurentPoly::one(), 0, torsion_coefficients(LaurentPoly::one())};
}

namespace {

StaircaseInvariants staircase_from(LaurentPoly poly) {
    const std::int64_t genus = poly.max_degree();
    TorsionCoefficients torsion = torsion_coefficients(poly);
    return {std::move(poly), genus, std::move(torsion)};
}

// Nonzero coefficients are +-1, alternate in sign, and start with +1 at the top.
bool has_staircase_shape(const LaurentPoly& poly) {
    std::int64_t expected = 1;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        if (it->second != expected) {
            return false;
        }
        expected = -expected;
    }
    return true;
}

}  // namespace

StaircaseInvariants staircase(const TorusKnot& k) {
    if (k.s() < 0) {
        throw Unsupported("staircase: " + k.str() + " is not an L-space knot");
    }
    return staircase_from(alexander_torus(k));
}

StaircaseInvariants staircase(const CableKnot& k, bool is_l_space_knot) {
    if (!is_l_space_knot) {
        throw Unsupported("staircase: cable " + k.str() + " not flagged as an L-space knot");
    }
    LaurentPoly poly = alexander_cable(k);
    if (!has_staircase_shape(poly)) {
        throw Unsupported("staircase: Alexander polynomial of " + k.str() + " is not of staircase shape");
    }
    return staircase_from(std::move(poly));
}

namespace {

Rational torus_delta_second(const TorusKnot& k) {
    const std::int64_t r = k.r();
    const std::int64_t s = k.s();
    return Rational((r * r - 1) * (s * s - 1), 12);
}

}  // namespace

Rational delta_second(const Knot& k) {
    if (const auto* t = std::get_if<TorusKnot>(&k)) {
        return torus_delta_second(*t);
    }
    const auto& cable = std::get<CableKnot>(k);
    const std::int64_t w = cable.w();
    const std::int64_t c = cable.c();
    const Rational pattern((w * w - 1) * (c * c - 1), 12);
    return pattern + Rational(w * w) * torus_delta_second(cable.companion());
}

Rational casson_walker_obstruction(const Knot& k1, const Knot& k2, std::int64_t p, std::int64_t q) {
    if (p == 0) {
        throw DomainError("casson_walker_obstruction: p must be nonzero");
    }
    return Rational(q, 2 * p) * (delta_second(k1) - delta_second(k2));
}

}  // namespace slopekit
