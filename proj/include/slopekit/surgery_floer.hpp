#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slopekit/rational.hpp"
#include "slopekit/torus_knot.hpp"

namespace slopekit {

/// The V_k sequence entering the surgery formulas.
class VTable {
public:
    /// V_k = t_k for an L-space knot, at every k.
    static VTable of(const StaircaseInvariants& k);
    /// The mirror of an L-space knot: V_k = max(0, -k). Keeps the knot for
    /// its reduced towers.
    static VTable mirror_of(const StaircaseInvariants& k);
    /// V_k = max(0, -k).
    static VTable unknot();
    /// V identically zero, for grading bookkeeping.
    static VTable zero();

    std::int64_t operator()(std::int64_t k) const;
    /// nu^+ = min{k >= 0 : V_k = 0}.
    std::int64_t nu_plus() const;
    bool is_mirror() const { return kind_ == Kind::Mirror; }
    /// The underlying knot data, when there is one.
    const std::optional<StaircaseInvariants>& knot() const { return knot_; }

private:
    enum class Kind { Knot, Mirror, Unknot, Zero };
    VTable(Kind kind, std::optional<StaircaseInvariants> knot) : kind_(kind), knot_(std::move(knot)) {}

    Kind kind_;
    std::optional<StaircaseInvariants> knot_;
};

/// J(i) = (q - 1 - i) mod p.
std::int64_t conjugate_index(std::int64_t p, std::int64_t q, std::int64_t i);

/// d(S^3_{p/q}(K), i) = d(p,q,i) - 2 max(V_{floor(i/q)}, V_{ceil((p-i)/q)}), p, q > 0.
Rational d_surgery(const VTable& v, std::int64_t p, std::int64_t q, std::int64_t i);
/// All p values, sorted.
std::vector<Rational> d_surgery_multiset(const VTable& v, std::int64_t p, std::int64_t q);

/// d-invariants of S^3_{p/q}(K) for p < 0, via S^3_{p/q}(K) = -S^3_{-p/q}(mirror K).
/// Only the multiset is meaningful; it is sorted.
std::vector<Rational> d_surgery_negative(const StaircaseInvariants& k, std::int64_t p, std::int64_t q);

/// T(n): the F[U]-submodule of T^+ generated by U^{1-n}; n = 0 is trivial.
struct GradedTower {
    Rational bottom_grading;
    std::int64_t length = 0;
    friend bool operator==(const GradedTower&, const GradedTower&) = default;
};

struct RedPiece {
    std::int64_t s;  // cone index
    GradedTower tower;
    friend bool operator==(const RedPiece&, const RedPiece&) = default;
};

/// Bottom grading of the tower in A^+_{floor((i+ps)/q)} at cone index s.
/// Requires 0 <= i <= (p+q-1)/2 and p, q > 0.
Rational tower_base_grading(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s, const VTable& v);

/// gr(0, 1) = d(p, q, i) - 1 in B^+.
Rational b_base_grading(std::int64_t p, std::int64_t q, std::int64_t i);
/// gr(s, 1), stepping by gr(s+1, 1) = gr(s, 1) + 2 floor((i+ps)/q).
Rational b_tower_grading(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s);

/// Reduced Floer homology of S^3_{p/q}(K) (or of the mirror) at index i, as
/// graded towers. Throws Unsupported below the slope p/q > 2 nu^+ - 1.
std::vector<RedPiece> hf_red_pieces(const StaircaseInvariants& k, bool mirror, std::int64_t p, std::int64_t q,
                                    std::int64_t i);

struct GradingSums {
    std::int64_t sum_a;
    std::int64_t sum_b;
};

/// Sums of floor((mq+pk)/q) and floor((mq+1+pk)/q) over k in [1, tq-1]
/// for t > 0 and over k in [tq, 0] for t < 0.
GradingSums grading_match_sums(std::int64_t m, std::int64_t t, std::int64_t p, std::int64_t q);

/// True iff the two V-tables agree on k >= 0. Requires p/q > 2g(k1) - 1.
bool hfk_recovery_verify(const StaircaseInvariants& k1, const StaircaseInvariants& k2, std::int64_t p,
                         std::int64_t q);

}  // namespace slopekit
