#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "slopekit/lens.hpp"
#include "slopekit/rational.hpp"
#include "slopekit/torus_knot.hpp"

namespace slopekit {

/// Exceptional fiber with invariant b/a.
struct Fiber {
    std::int64_t a;
    std::int64_t b;
    friend auto operator<=>(const Fiber&, const Fiber&) = default;
};

/// S^2(e; b1/a1, ..., bn/an), n <= 3. Raw values are allowed; normalize()
/// yields a >= 2, 0 < b < a, fibers sorted, integer parts moved into e.
class SeifertInvariants {
public:
    SeifertInvariants(std::int64_t e, std::vector<Fiber> fibers);

    std::int64_t e() const { return e_; }
    const std::vector<Fiber>& fibers() const { return fibers_; }

    friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;

private:
    std::int64_t e_;
    std::vector<Fiber> fibers_;
};

SeifertInvariants normalize(const SeifertInvariants& s);
bool is_normalized(const SeifertInvariants& s);
/// e + sum b_i/a_i.
Rational euler_number(const SeifertInvariants& s);
/// |a1 a2 a3 * euler|; 0 means H_1 is infinite.
BigInt h1_order(const SeifertInvariants& s);
/// Negate e and every b_i, then normalize.
SeifertInvariants reverse_orientation(const SeifertInvariants& s);

/// Neumann criterion for three exceptional fibers. Throws NotComparable when
/// either side has fewer than three fibers after normalization.
bool sfs_equal_oriented(const SeifertInvariants& s1, const SeifertInvariants& s2);

/// The lens space of a space with at most two exceptional fibers, as
/// L(p, q) = S^3_{p/q}(U). Throws NotComparable for three fibers and
/// Unsupported when the Euler number vanishes (S^1 x S^2).
LensSpace lens_from_fibers(const SeifertInvariants& s);

std::string to_string(const SeifertInvariants& s);

class SurgeryResult;

struct ConnectedSumLens {
    LensSpace first;
    LensSpace second;
};

struct OrientationReversed {
    std::shared_ptr<const SurgeryResult> inner;
};

/// Cable surgery along the cabling annulus slope.
struct ReducibleMarker {};
/// Cable surgery containing the incompressible cabling torus.
struct ToroidalMarker {};

class SurgeryResult {
public:
    using Value = std::variant<SeifertInvariants, LensSpace, ConnectedSumLens, OrientationReversed,
                               ReducibleMarker, ToroidalMarker>;

    template <class T>
        requires std::is_constructible_v<Value, T&&>
    SurgeryResult(T&& v) : value_(std::forward<T>(v)) {}  // NOLINT: implicit from any alternative

    const Value& value() const { return value_; }
    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&value_);
    }

    /// Pushes orientation reversals into the underlying Seifert or lens data.
    SurgeryResult resolved() const;
    SurgeryResult reversed() const;

private:
    Value value_;
};

/// S^3_{p/q}(T_{r,s}) for r, s > 1 coprime, q >= 1, gcd(p, q) = 1.
SurgeryResult surgery_torus_knot(std::int64_t r, std::int64_t s, std::int64_t p, std::int64_t q);
/// Same for any torus knot, mirrors handled by S^3_{p/q}(mirror K) = -S^3_{-p/q}(K).
SurgeryResult surgery_torus_knot(const TorusKnot& k, std::int64_t p, std::int64_t q);
/// Non-integral surgery (q >= 2) on a cable of a torus knot.
SurgeryResult surgery_cable(const CableKnot& k, std::int64_t p, std::int64_t q);
SurgeryResult surgery(const Knot& k, std::int64_t p, std::int64_t q);

/// "S2(e; b1/a1, ...)", "L(p,q)", "L(p,q) # L(p',q')", "-(...)", or a marker name.
std::string to_string(const SurgeryResult& r);

/// Oriented homeomorphism when decidable here; nullopt for mixed types and markers.
std::optional<bool> results_equal_oriented(const SurgeryResult& a, const SurgeryResult& b);

}  // namespace slopekit
