#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "slopekit/error.hpp"
#include "slopekit/lens.hpp"
#include "slopekit/numtheory.hpp"
#include "slopekit/seifert.hpp"
#include "slopekit/surgery_floer.hpp"

using namespace slopekit;

namespace {

SeifertInvariants sfs(std::int64_t e, std::vector<Fiber> f) { return SeifertInvariants(e, std::move(f)); }

const SeifertInvariants& seifert_of(const SurgeryResult& r) {
    const auto* s = r.get_if<SeifertInvariants>();
    REQUIRE(s != nullptr);
    return *s;
}

// Ni-Wu d-invariants of the positive surgery, the oracle for lens and
// connected-sum outputs.
std::vector<Rational> floer_multiset(std::int64_t r, std::int64_t s, std::int64_t p, std::int64_t q) {
    return d_surgery_multiset(VTable::of(staircase(TorusKnot(r, s))), p, q);
}

std::vector<Rational> sum_multiset(const LensSpace& a, const LensSpace& b) {
    std::vector<Rational> out;
    for (const Rational& x : d_multiset(a.p(), a.q())) {
        for (const Rational& y : d_multiset(b.p(), b.q())) {
            out.push_back(x + y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("normal form") {
    CHECK(normalize(sfs(0, {{2, -1}, {3, 5}})) == sfs(0, {{2, 1}, {3, 2}}));
    CHECK(normalize(sfs(0, {{-2, 1}})) == sfs(-1, {{2, 1}}));
    CHECK(normalize(sfs(1, {{5, 4}, {1, 3}, {2, 1}})) == sfs(4, {{2, 1}, {5, 4}}));
    CHECK(normalize(sfs(0, {{3, 1}, {2, 1}})).fibers().front() == Fiber{2, 1});
    CHECK(is_normalized(sfs(-2, {{2, 1}, {3, 2}, {5, 4}})));
    CHECK_FALSE(is_normalized(sfs(-2, {{3, 2}, {2, 1}})));
    CHECK_THROWS_AS(sfs(0, {{0, 1}}), DomainError);
    CHECK_THROWS_AS(sfs(0, {{4, 2}}), DomainError);
    CHECK_THROWS_AS(sfs(0, {{2, 1}, {3, 1}, {5, 1}, {7, 1}}), DomainError);
    CHECK(to_string(sfs(-2, {{2, 1}, {3, 2}, {5, 4}})) == "S2(-2; 1/2, 2/3, 4/5)");

    for (std::int64_t e = -3; e <= 3; ++e) {
        for (std::int64_t b1 = -7; b1 <= 7; ++b1) {
            for (std::int64_t b2 = -9; b2 <= 9; ++b2) {
                if (std::gcd(b1, std::int64_t{3}) != 1 || std::gcd(b2, std::int64_t{4}) != 1) {
                    continue;
                }
                const SeifertInvariants raw = sfs(e, {{3, b1}, {-4, b2}});
                const SeifertInvariants n = normalize(raw);
                CHECK(normalize(n) == n);
                CHECK(euler_number(n) == euler_number(raw));
                for (const Fiber& f : n.fibers()) {
                    CHECK(f.a >= 2);
                    CHECK(f.b > 0);
                    CHECK(f.b < f.a);
                }
            }
        }
    }
}

TEST_CASE("Euler number, homology and orientation") {
    const SeifertInvariants poincare = sfs(-2, {{2, 1}, {3, 2}, {5, 4}});
    CHECK(euler_number(poincare) == Rational(-1, 30));
    CHECK(h1_order(poincare) == 1);
    CHECK(h1_order(sfs(-1, {{2, 1}, {2, 1}})) == 0);
    CHECK(reverse_orientation(poincare) == sfs(-1, {{2, 1}, {3, 1}, {5, 1}}));
    CHECK(reverse_orientation(reverse_orientation(poincare)) == poincare);
    CHECK(euler_number(reverse_orientation(poincare)) == Rational(1, 30));
}

TEST_CASE("oriented comparison of Seifert spaces") {
    const SeifertInvariants a = sfs(-1, {{3, 2}, {5, 2}, {13, 8}});
    CHECK(sfs_equal_oriented(a, sfs(1, {{5, 2}, {-3, 1}, {13, -5}})));
    CHECK_FALSE(sfs_equal_oriented(a, reverse_orientation(a)));
    CHECK_FALSE(sfs_equal_oriented(a, sfs(-2, {{3, 2}, {5, 2}, {23, 21}})));
    CHECK_THROWS_AS(sfs_equal_oriented(a, sfs(-1, {{3, 2}, {5, 2}})), NotComparable);
    CHECK_THROWS_AS(sfs_equal_oriented(sfs(0, {{3, 2}, {5, 2}, {1, 1}}), a), NotComparable);
}

TEST_CASE("torus knot surgeries") {
    CHECK(to_string(surgery_torus_knot(2, 3, 1, 1)) == "S2(-2; 1/2, 2/3, 4/5)");
    CHECK(to_string(surgery_torus_knot(2, 3, -1, 1)) == "S2(-2; 1/2, 2/3, 6/7)");
    CHECK(to_string(surgery_torus_knot(3, 5, 7, 2)) == "S2(-2; 2/3, 2/5, 21/23)");
    CHECK(to_string(surgery_torus_knot(5, 13, 133, 2)) == "S2(-1; 2/3, 2/5, 8/13)");
    CHECK(to_string(surgery_torus_knot(2, 3, 5, 1)) == "L(5,4)");
    CHECK(to_string(surgery_torus_knot(2, 3, 6, 1)) == "L(2,1) # L(3,2)");
    CHECK_THROWS_AS(surgery_torus_knot(2, 3, 4, 2), DomainError);
    CHECK_THROWS_AS(surgery_torus_knot(2, 3, 1, 0), DomainError);

    // e = p / (r s (p - r s q)) and |H_1| = |p| across a sweep.
    std::size_t seifert_cases = 0;
    for (std::int64_t r = 2; r <= 12; ++r) {
        for (std::int64_t s = r + 1; s <= 13; ++s) {
            if (std::gcd(r, s) != 1) {
                continue;
            }
            for (std::int64_t q = 1; q <= 5; ++q) {
                for (std::int64_t p = -200; p <= 200; ++p) {
                    if (p == 0 || std::gcd(std::abs(p), q) != 1 || std::abs(p - r * s * q) <= 1) {
                        continue;
                    }
                    const SurgeryResult res = surgery_torus_knot(r, s, p, q);
                    const SeifertInvariants& m = seifert_of(res);
                    CHECK(is_normalized(m));
                    CHECK(m.fibers().size() == 3);
                    CHECK(euler_number(m) == Rational(p, r * s * (p - r * s * q)));
                    CHECK(h1_order(m) == std::abs(p));
                    ++seifert_cases;
                }
            }
        }
    }
    CHECK(seifert_cases > 50000);
}

TEST_CASE("lens space and reducible surgeries agree with Moser and Ni-Wu") {
    std::size_t lens_cases = 0;
    for (std::int64_t r = 2; r <= 6; ++r) {
        for (std::int64_t s = r + 1; s <= 7; ++s) {
            if (std::gcd(r, s) != 1) {
                continue;
            }
            for (std::int64_t q = 1; q <= 5; ++q) {
                for (int sign : {-1, 1}) {
                    const std::int64_t p = r * s * q + sign;
                    const SurgeryResult res = surgery_torus_knot(r, s, p, q);
                    const auto* lens = res.get_if<LensSpace>();
                    REQUIRE(lens != nullptr);
                    CHECK(lens->p() == p);
                    CHECK(lens_homeo(*lens, LensSpace(p, q * r * r % p)));
                    // The same space read off the unnormalized two-fiber data.
                    const ExtGcd g = ext_gcd(r, s);
                    CHECK(lens_homeo(lens_from_fibers(sfs(0, {{s, g.x}, {r, g.y}, {p - r * s * q, q}})), *lens));
                    CHECK(d_multiset(lens->p(), lens->q()) == floer_multiset(r, s, p, q));
                    ++lens_cases;
                }
            }
            const SurgeryResult red = surgery_torus_knot(r, s, r * s, 1);
            const auto* sum = red.get_if<ConnectedSumLens>();
            REQUIRE(sum != nullptr);
            const bool plain = sum->first == LensSpace(r, s) && sum->second == LensSpace(s, r);
            const bool swapped = sum->first == LensSpace(s, r) && sum->second == LensSpace(r, s);
            CHECK((plain || swapped));
            CHECK(sum_multiset(sum->first, sum->second) == floer_multiset(r, s, r * s, 1));
        }
    }
    CHECK(lens_cases == 110);
}

TEST_CASE("lens spaces read off from two fibers") {
    CHECK(lens_from_fibers(sfs(-5, {})) == LensSpace(5, 1));
    CHECK(lens_from_fibers(sfs(-1, {})) == LensSpace(1, 0));
    CHECK_THROWS_AS(lens_from_fibers(sfs(-1, {{2, 1}, {2, 1}})), Unsupported);
    CHECK_THROWS_AS(lens_from_fibers(sfs(-2, {{2, 1}, {3, 2}, {5, 4}})), NotComparable);
    // Reversing the Seifert data reverses the lens space.
    for (std::int64_t e = -3; e <= 2; ++e) {
        for (std::int64_t a1 = 2; a1 <= 7; ++a1) {
            for (std::int64_t b1 = 1; b1 < a1; ++b1) {
                if (std::gcd(a1, b1) != 1) {
                    continue;
                }
                const SeifertInvariants m = sfs(e, {{a1, b1}, {3, 1}});
                if (euler_number(m) == Rational(0)) {
                    continue;
                }
                const LensSpace l = lens_from_fibers(m);
                CHECK(BigInt(l.p()) == h1_order(m));
                CHECK(lens_homeo(lens_from_fibers(reverse_orientation(m)), l.reversed()));
                CHECK_FALSE((lens_homeo(lens_from_fibers(reverse_orientation(m)), l) && !lens_homeo(l, l.reversed())));
            }
        }
    }
}

TEST_CASE("mirrors and orientation reversal") {
    const SurgeryResult r = surgery_torus_knot(TorusKnot(2, -3), -1, 1);
    REQUIRE(r.get_if<OrientationReversed>() != nullptr);
    CHECK(to_string(r) == "-(S2(-2; 1/2, 2/3, 4/5))");
    CHECK(seifert_of(r.resolved()) == sfs(-1, {{2, 1}, {3, 1}, {5, 1}}));
    CHECK(results_equal_oriented(r.resolved(), r) == std::optional<bool>(true));
    CHECK(results_equal_oriented(r, surgery_torus_knot(2, 3, 1, 1)) == std::optional<bool>(false));
    const SurgeryResult lens = surgery_torus_knot(TorusKnot(2, -3), -5, 1);
    REQUIRE(lens.resolved().get_if<LensSpace>() != nullptr);
    CHECK(*lens.resolved().get_if<LensSpace>() == LensSpace(5, 1));
    CHECK(results_equal_oriented(surgery_torus_knot(2, 3, 6, 1), surgery_torus_knot(2, 3, 5, 1)) == std::nullopt);
}

TEST_CASE("cable surgeries") {
    const CableKnot c(2, 33, TorusKnot(3, 5));
    CHECK(to_string(surgery_cable(c, 133, 2)) == "S2(-1; 2/3, 2/5, 8/13)");
    CHECK(results_equal_oriented(surgery_cable(c, 133, 2), surgery_torus_knot(5, 13, 133, 2)) ==
          std::optional<bool>(true));
    CHECK_THROWS_AS(surgery_cable(c, 66, 1), Unsupported);
    CHECK(std::holds_alternative<ReducibleMarker>(surgery_cable(CableKnot(2, 3, TorusKnot(2, 3)), 12, 2).value()));
    CHECK(std::holds_alternative<ToroidalMarker>(surgery_cable(CableKnot(2, 3, TorusKnot(2, 3)), 15, 2).value()));
    CHECK(to_string(surgery(Knot(c), 133, 2)) == "S2(-1; 2/3, 2/5, 8/13)");

    // |p - q w c| = 1 reduces to S^3_{p/(q w^2)} of the companion.
    for (std::int64_t w = 2; w <= 3; ++w) {
        for (std::int64_t cc = -30; cc <= 30; ++cc) {
            if (std::gcd(w, std::abs(cc)) != 1) {
                continue;
            }
            for (std::int64_t q = 2; q <= 4; ++q) {
                for (int sign : {-1, 1}) {
                    const std::int64_t p = q * w * cc + sign;
                    if (p == 0) {
                        continue;
                    }
                    const CableKnot k(w, cc, TorusKnot(2, 5));
                    const SurgeryResult a = surgery_cable(k, p, q);
                    const SurgeryResult b = surgery_torus_knot(TorusKnot(2, 5), p, q * w * w);
                    CHECK(to_string(a.resolved()) == to_string(b.resolved()));
                }
            }
        }
    }
}
