#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "slopekit/rational.hpp"

namespace slopekit {

/// T_{r,s}: r >= 2, |s| >= 2, gcd(r, |s|) = 1. A negative s is the
/// mirror-convention knot T_{r,-|s|}.
class TorusKnot {
public:
    TorusKnot(std::int64_t r, std::int64_t s);

    std::int64_t r() const { return r_; }
    std::int64_t s() const { return s_; }
    /// (min(r,|s|), max(r,|s|)) with the sign kept on the second entry.
    TorusKnot canonical() const;
    std::int64_t genus() const { return (r_ - 1) * (std::abs(s_) - 1) / 2; }

    std::string str() const;
    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;

private:
    std::int64_t r_;
    std::int64_t s_;
};

/// The (w, c)-cable of a torus knot: pattern T_{w,c} in a solid torus
/// around the companion, winding number w.
class CableKnot {
public:
    CableKnot(std::int64_t w, std::int64_t c, TorusKnot companion);

    std::int64_t w() const { return w_; }
    std::int64_t c() const { return c_; }
    const TorusKnot& companion() const { return companion_; }

    std::string str() const;
    /// Same cable parameters and the same companion up to swapping r and s.
    friend bool operator==(const CableKnot& a, const CableKnot& b) {
        return a.w_ == b.w_ && a.c_ == b.c_ && a.companion_.canonical() == b.companion_.canonical();
    }

private:
    std::int64_t w_;
    std::int64_t c_;
    TorusKnot companion_;
};

using Knot = std::variant<TorusKnot, CableKnot>;

/// Finitely supported integer Laurent polynomial sum a_k t^k.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<std::int64_t, std::int64_t> coefficients);
    static LaurentPoly one() { return LaurentPoly(std::map<std::int64_t, std::int64_t>{{0, 1}}); }

    std::int64_t coefficient(std::int64_t exponent) const;
    const std::map<std::int64_t, std::int64_t>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t max_degree() const;
    std::int64_t min_degree() const;

    /// a_k == a_{-k} for all k.
    bool is_symmetric() const;
    std::int64_t eval_at_one() const;
    /// P''(1) = sum a_k k (k - 1).
    Rational second_derivative_at_one() const;
    /// P(t^w).
    LaurentPoly substitute_power(std::int64_t w) const;

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// e.g. "t - 1 + t^-1".
    std::string str() const;

private:
    std::map<std::int64_t, std::int64_t> coeffs_;  // no zero entries
};

/// Torsion coefficients t_k = sum_{i >= 0} i a_{k+i} of a symmetric
/// normalized Alexander polynomial. Stored for |k| <= bound; outside that
/// window t_k = 0 for k > 0 and t_k = -k for k < 0.
class TorsionCoefficients {
public:
    TorsionCoefficients(std::int64_t bound, std::vector<std::int64_t> values);
    /// Builds the table from t_0, t_1, ... (finitely supported), filling
    /// negative indices by t_{-k} = t_k + k.
    static TorsionCoefficients from_nonnegative(std::vector<std::int64_t> values);

    std::int64_t at(std::int64_t k) const;
    std::int64_t bound() const { return bound_; }

private:
    std::int64_t bound_;
    std::vector<std::int64_t> values_;  // index k + bound_
};

LaurentPoly alexander_torus(std::int64_t r, std::int64_t s);
LaurentPoly alexander_torus(const TorusKnot& k);
/// Delta_companion(t^w) * Delta_{T(w,c)}(t).
LaurentPoly alexander_cable(const CableKnot& k);
LaurentPoly alexander(const Knot& k);

TorsionCoefficients torsion_coefficients(const LaurentPoly& poly);
/// a_k = t_{k+1} - 2 t_k + t_{k-1}; throws DomainError when the result is
/// not symmetric with Delta(1) = 1.
LaurentPoly alexander_from_torsion(const TorsionCoefficients& t);

/// V_k data of an L-space knot (A_red = 0), where V_k = t_k for every k.
struct StaircaseInvariants {
    LaurentPoly alexander;
    std::int64_t genus = 0;
    TorsionCoefficients torsion{0, {0}};

    std::int64_t v(std::int64_t k) const { return torsion.at(k); }
    std::int64_t h(std::int64_t k) const { return v(-k); }
    /// min{k >= 0 : V_k = 0}.
    std::int64_t nu_plus() const;

    static StaircaseInvariants unknot();
};

StaircaseInvariants staircase(const TorusKnot& k);
/// Cables are accepted only when the caller asserts they are L-space knots;
/// the Alexander polynomial must still have staircase shape.
StaircaseInvariants staircase(const CableKnot& k, bool is_l_space_knot);

/// Delta''(1): (r^2-1)(s^2-1)/12 for torus knots, pattern + w^2 companion for cables.
Rational delta_second(const Knot& k);

/// (q / 2p)(Delta''_{k1}(1) - Delta''_{k2}(1)); nonzero rules out
/// S^3_{p/q}(k1) = S^3_{p/q}(k2).
Rational casson_walker_obstruction(const Knot& k1, const Knot& k2, std::int64_t p, std::int64_t q);

}  // namespace slopekit
