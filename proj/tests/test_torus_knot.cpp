#include <doctest.h>

#include <numeric>
#include <set>

#include "slopekit/error.hpp"
#include "slopekit/torus_knot.hpp"

using namespace slopekit;

namespace {

// Oracle: Delta_{T(r,s)} = t^{-g} (1 - t) sum_{n in <r,s>} t^n, truncated at degree 2g.
std::map<std::int64_t, std::int64_t> semigroup_alexander(std::int64_t r, std::int64_t s) {
    const std::int64_t g = (r - 1) * (s - 1) / 2;
    std::vector<bool> in(static_cast<std::size_t>(2 * g + 1), false);
    for (std::int64_t x = 0; x * r <= 2 * g; ++x) {
        for (std::int64_t y = 0; x * r + y * s <= 2 * g; ++y) {
            in[static_cast<std::size_t>(x * r + y * s)] = true;
        }
    }
    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t k = 0; k <= 2 * g; ++k) {
        const std::int64_t c = (in[static_cast<std::size_t>(k)] ? 1 : 0) -
                               (k > 0 && in[static_cast<std::size_t>(k - 1)] ? 1 : 0);
        if (c != 0) {
            out[k - g] = c;
        }
    }
    return out;
}

// Oracle: t_k = sum_{j > k} (j - k) a_j.
std::int64_t torsion_oracle(const LaurentPoly& poly, std::int64_t k) {
    std::int64_t sum = 0;
    for (const auto& [j, a] : poly.terms()) {
        if (j > k) {
            sum += (j - k) * a;
        }
    }
    return sum;
}

std::vector<TorusKnot> small_torus_knots(std::int64_t max_rs) {
    std::vector<TorusKnot> out;
    for (std::int64_t r = 2; r * (r + 1) <= max_rs; ++r) {
        for (std::int64_t s = r + 1; r * s <= max_rs; ++s) {
            if (std::gcd(r, s) == 1) {
                out.emplace_back(r, s);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("torus knot construction") {
    CHECK(TorusKnot(2, 3).genus() == 1);
    CHECK(TorusKnot(3, 5).genus() == 4);
    CHECK(TorusKnot(5, 13).genus() == 24);
    CHECK(TorusKnot(5, 3).canonical() == TorusKnot(3, 5));
    CHECK(TorusKnot(5, -3).canonical() == TorusKnot(3, -5));
    CHECK(TorusKnot(2, 3).str() == "T(2,3)");
    CHECK_THROWS_AS(TorusKnot(2, 4), DomainError);
    CHECK_THROWS_AS(TorusKnot(1, 4), DomainError);
    CHECK_THROWS_AS(CableKnot(2, 4, TorusKnot(2, 3)), DomainError);
    CHECK(CableKnot(2, 33, TorusKnot(5, 3)) == CableKnot(2, 33, TorusKnot(3, 5)));
    CHECK(CableKnot(2, 33, TorusKnot(3, 5)).str() == "C(2,33;T(3,5))");
}

TEST_CASE("Alexander polynomials of torus knots") {
    CHECK(alexander_torus(2, 3).str() == "t - 1 + t^-1");
    CHECK(alexander_torus(2, -3) == alexander_torus(2, 3));
    for (const TorusKnot& k : small_torus_knots(150)) {
        CAPTURE(k.str());
        const LaurentPoly d = alexander_torus(k);
        CHECK(d.terms() == semigroup_alexander(k.r(), k.s()));
        CHECK(d.is_symmetric());
        CHECK(d.eval_at_one() == 1);
        CHECK(d.max_degree() == k.genus());
        CHECK(d.second_derivative_at_one() == delta_second(k));
    }
}

TEST_CASE("cable Alexander polynomials") {
    const CableKnot c(2, 33, TorusKnot(3, 5));
    const LaurentPoly d = alexander_cable(c);
    CHECK(d == alexander_torus(3, 5).substitute_power(2) * alexander_torus(2, 33));
    CHECK(d.is_symmetric());
    CHECK(d.eval_at_one() == 1);
    CHECK(d.max_degree() == 2 * 4 + 16);
    CHECK(alexander_cable(CableKnot(2, 1, TorusKnot(2, 3))) == alexander_torus(2, 3).substitute_power(2));
    for (std::int64_t w = 2; w <= 4; ++w) {
        for (std::int64_t cc = -11; cc <= 11; ++cc) {
            if (std::gcd(w, std::abs(cc)) != 1) {
                continue;
            }
            const CableKnot k(w, cc, TorusKnot(2, 5));
            CHECK(alexander(k).second_derivative_at_one() == delta_second(k));
        }
    }
}

TEST_CASE("second derivatives and Casson-Walker") {
    CHECK(delta_second(TorusKnot(5, 13)) == Rational(336));
    const CableKnot c(2, 33, TorusKnot(3, 5));
    CHECK(delta_second(c) == Rational(272 + 4 * 16));
    CHECK(casson_walker_obstruction(TorusKnot(5, 13), c, 133, 2) == Rational(0));
    CHECK(casson_walker_obstruction(TorusKnot(2, 3), TorusKnot(2, 5), 13, 2) == Rational(2, 26) * Rational(2 - 6));
    CHECK_THROWS_AS(casson_walker_obstruction(TorusKnot(2, 3), TorusKnot(2, 5), 0, 1), DomainError);
}

TEST_CASE("torsion coefficients") {
    const TorsionCoefficients t = torsion_coefficients(alexander_torus(3, 5));
    const std::vector<std::int64_t> expected{2, 1, 1, 1, 0};
    for (std::int64_t k = 0; k < 5; ++k) {
        CHECK(t.at(k) == expected[static_cast<std::size_t>(k)]);
    }
    for (const TorusKnot& k : small_torus_knots(90)) {
        const LaurentPoly d = alexander_torus(k);
        const TorsionCoefficients tk = torsion_coefficients(d);
        for (std::int64_t j = -k.genus() - 3; j <= k.genus() + 3; ++j) {
            CHECK(tk.at(j) == torsion_oracle(d, j));
            CHECK(tk.at(-j) == tk.at(j) + j);
        }
        CHECK(alexander_from_torsion(tk) == d);
        std::vector<std::int64_t> nonneg;
        for (std::int64_t j = 0; j <= k.genus(); ++j) {
            nonneg.push_back(tk.at(j));
        }
        const TorsionCoefficients rebuilt = TorsionCoefficients::from_nonnegative(nonneg);
        for (std::int64_t j = -k.genus() - 2; j <= k.genus() + 2; ++j) {
            CHECK(rebuilt.at(j) == tk.at(j));
        }
    }
    CHECK_THROWS_AS(torsion_coefficients(LaurentPoly(std::map<std::int64_t, std::int64_t>{{1, 1}, {0, 1}})),
                    DomainError);
    CHECK_THROWS_AS(alexander_from_torsion(TorsionCoefficients(1, {5, 0, 0})), DomainError);
}

TEST_CASE("staircase invariants of torus knots") {
    for (const TorusKnot& k : small_torus_knots(60)) {
        CAPTURE(k.str());
        const StaircaseInvariants st = staircase(k);
        const std::int64_t g = k.genus();
        CHECK(st.genus == g);
        CHECK(st.v(g) == 0);
        CHECK(st.v(g - 1) == 1);
        CHECK(st.nu_plus() == g);
        for (std::int64_t j = -g - 2; j <= g + 2; ++j) {
            CHECK(st.v(j) - st.v(j + 1) >= 0);
            CHECK(st.v(j) - st.v(j + 1) <= 1);
            CHECK(st.h(j) == st.v(-j));
        }
    }
    const StaircaseInvariants u = StaircaseInvariants::unknot();
    CHECK(u.v(0) == 0);
    CHECK(u.v(-3) == 3);
    CHECK(u.nu_plus() == 0);
    CHECK_THROWS_AS(staircase(TorusKnot(2, -3)), Unsupported);
}

TEST_CASE("staircase invariants of cables need the caller's word") {
    const CableKnot c(2, 33, TorusKnot(3, 5));
    CHECK_THROWS_AS(staircase(c, false), Unsupported);
    const StaircaseInvariants st = staircase(c, true);
    CHECK(st.genus == 24);
    CHECK(st.v(23) == 1);
    CHECK(st.v(24) == 0);
}

TEST_CASE("Laurent polynomial helpers") {
    const LaurentPoly p(std::map<std::int64_t, std::int64_t>{{2, 3}, {0, -1}, {-1, 0}});
    CHECK(p.coefficient(-1) == 0);
    CHECK(p.terms().size() == 2);
    CHECK(p.min_degree() == 0);
    CHECK(p.str() == "3t^2 - 1");
    CHECK((p * LaurentPoly::one()) == p);
    CHECK(p.substitute_power(3).max_degree() == 6);
    CHECK(LaurentPoly().is_zero());
}
