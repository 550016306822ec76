#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slopekit/numtheory.hpp"
#include "slopekit/rational.hpp"
#include "slopekit/torus_knot.hpp"

namespace slopekit {

enum class MapType { I, II, III };

std::string to_string(MapType t);

/// i -> a(i - s0) + s1 mod p with s0, s1 fixed by J(i) = q - 1 - i.
struct AffineMapCandidate {
    std::int64_t p;
    std::int64_t a;
    std::int64_t s0;
    std::int64_t s1;
    MapType type;

    std::int64_t operator()(std::int64_t i) const;
    /// a = +-1 mod p; for typed maps these are the identity and conjugation.
    bool is_identity_like() const;
};

/// Fixed points of J in [0, p).
std::vector<std::int64_t> conjugation_fixed_points(std::int64_t p, std::int64_t q);

/// The matching type, or a description of the first failed congruence.
/// Throws DomainError if s0 or s1 is not fixed by J, or a is not a unit.
std::variant<MapType, std::string> mapform_classify(std::int64_t a, std::int64_t s0, std::int64_t s1, std::int64_t p,
                                                    std::int64_t q);

/// Parity-surviving J-commuting affine bijections, one per distinct map.
/// Survivors that fit no type are returned in `unclassified`.
struct AffineMapSearch {
    std::vector<AffineMapCandidate> maps;
    std::vector<std::string> unclassified;
};
AffineMapSearch enumerate_affine_maps(std::int64_t p, std::int64_t q);

/// p/(4q) + 1/2 - 3/q - q.
Rational nu_plus_bound(std::int64_t p, std::int64_t q);

/// An x with d(p,q,x) > d(p,q,phi(x)) whose implied bound
/// nu^+ >= min{floor(x/q), ceil((p-x)/q)} + 1 beats nu_plus_bound(p, q).
/// Throws DomainError for a = +-1 mod p.
std::optional<std::int64_t> genusbound_witness(std::int64_t p, std::int64_t q, const AffineMapCandidate& phi);

struct CableSlope {
    std::int64_t p;
    std::int64_t q;
    CableKnot cable;
};

/// The non-characterizing slope of T_{r,s} coming from a cable, if any.
std::optional<CableSlope> cable_slope(std::int64_t r, std::int64_t s);

struct CensusRecord {
    TorusKnot torus;
    std::int64_t p;
    std::int64_t q;
    CableKnot cable;
    bool verified;
};

/// Sort key: (r, s, p, q, w, c, companion).
bool census_less(const CensusRecord& x, const CensusRecord& y);
bool census_same_pair(const CensusRecord& x, const CensusRecord& y);

/// Formula-driven list for s <= s_max and q <= q_max, each record checked
/// by Seifert comparison, Casson-Walker and |H_1|.
std::vector<CensusRecord> cable_census(std::int64_t s_max, std::int64_t q_max);

/// Independent search: cables of T_{a,+-b} (ab <= companion_max) with
/// winding w in [2, q_max] at slopes p/q = wc +- 1/q, q in [2, q_max],
/// compared with surgeries on T_{r,s}, 1 < r < s <= s_max. Only the c
/// for which two fiber orders can be r and s are tried.
std::vector<CensusRecord> cable_bruteforce(std::int64_t s_max, std::int64_t q_max, std::int64_t companion_max);

/// Both checks required by a census record.
bool verify_census_pair(const TorusKnot& torus, std::int64_t p, std::int64_t q, const CableKnot& cable);

/// Lens spaces compared by odd-length expansions being equal or reversed.
bool lens_equal_via_cf(std::int64_t p, std::int64_t q1, std::int64_t q2);

/// Oriented homeomorphism S^3_{p/q}(T_{r,s}) = S^3_{p/q}(T_{a,b}).
bool torus_torus_shared(std::int64_t r, std::int64_t s, std::int64_t a, std::int64_t b, std::int64_t p,
                        std::int64_t q);

/// Expansion of p/(qr^2), p = qrs + sign, built from s/r = [a0, ..., ak].
CFPlus toruscase_expansion(std::int64_t r, std::int64_t s, std::int64_t q, int sign);
/// The reversed pattern, an expansion of p/q' with q' q r^2 = 1 mod p.
CFPlus toruscase_reversed_expansion(std::int64_t r, std::int64_t s, std::int64_t q, int sign);

enum class SlopeCondition { I, II, III, NotCovered };

struct SlopeClassification {
    SlopeCondition condition;
    /// The cable sharing this slope, when cable_slope(r, s) is exactly (p, q).
    std::optional<CableKnot> known_cable;

    bool only_trs() const { return condition != SlopeCondition::NotCovered && !known_cable; }
};

SlopeClassification classify_slope(std::int64_t r, std::int64_t s, std::int64_t p, std::int64_t q);
std::string to_string(const SlopeClassification& c);

struct Thresholds {
    std::int64_t hfk_recovery;
    std::int64_t technical2_neg;
    Rational hyperbolic;
};

Thresholds thresholds(std::int64_t g, std::int64_t q);

}  // namespace slopekit
