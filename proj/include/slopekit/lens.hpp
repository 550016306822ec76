#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "slopekit/rational.hpp"

namespace slopekit {

/// L(p, q) = S^3_{p/q}(U). q is reduced into [0, p); L(1, 0) is S^3.
class LensSpace {
public:
    LensSpace(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }

    /// -L(p, q) = L(p, p - q).
    LensSpace reversed() const;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// All p correction terms d(p, q, 0..p-1), memoized and shared across threads.
std::shared_ptr<const std::vector<Rational>> d_table(std::int64_t p, std::int64_t q);

/// Correction term of L(p, q) in the spin^c structure labelled i, by the
/// recursion d(p,q,i) = -1/4 + (p+q-1-2i)^2/(4pq) - d(q, p mod q, i mod q).
Rational d_invariant(std::int64_t p, std::int64_t q, std::int64_t i);

/// 2p * d(p, q, i); pairwise differences are integers.
Rational d_tilde(std::int64_t p, std::int64_t q, std::int64_t i);

struct CongruenceResidues {
    std::int64_t mod4;   // (dt_i - dt_j) mod 4
    std::int64_t mod4p;  // q (dt_i - dt_j) mod 4p
    friend bool operator==(const CongruenceResidues&, const CongruenceResidues&) = default;
};

/// Residues of the d_tilde difference. Throws std::logic_error if the
/// difference is not an integer.
CongruenceResidues congruence_residues(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t j);

/// Closed-form right-hand sides: 2(i-j)(p+1) mod 4 and 2(pq+q-1-i-j)(j-i) mod 4p.
CongruenceResidues predicted_congruence_residues(std::int64_t p, std::int64_t q, std::int64_t i,
                                                 std::int64_t j);

/// d(p,q,i) - d(p,q,j) in 2Z, decided by (q-1-i-j)(j-i) = 0 mod p (p odd) or mod 2p (p even).
bool d_diff_even(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t j);

/// Same predicate by exact rational arithmetic.
bool d_diff_even_exact(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t j);

/// The p correction terms, sorted ascending.
std::vector<Rational> d_multiset(std::int64_t p, std::int64_t q);

/// Homeomorphism of lens spaces; oriented unless `oriented` is false.
bool lens_homeo(const LensSpace& a, const LensSpace& b, bool oriented = true);

/// max_i |d(p, q, i)| <= (p - 1)/4.
bool d_bound_holds(std::int64_t p, std::int64_t q);

}  // namespace slopekit
