#include "slopekit/char_slopes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "slopekit/error.hpp"
#include "slopekit/lens.hpp"
#include "slopekit/seifert.hpp"

namespace slopekit {

std::string to_string(MapType t) {
    switch (t) {
        case MapType::I:
            return "I";
        case MapType::II:
            return "II";
        case MapType::III:
            return "III";
    }
    return "?";
}

std::int64_t AffineMapCandidate::operator()(std::int64_t i) const { return mod(a * (i - s0) + s1, p); }

bool AffineMapCandidate::is_identity_like() const { return p <= 2 || mod(a, p) == 1 || mod(a, p) == p - 1; }

std::vector<std::int64_t> conjugation_fixed_points(std::int64_t p, std::int64_t q) {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < p; ++i) {
        if (mod(q - 1 - 2 * i, p) == 0) {
            out.push_back(i);
        }
    }
    return out;
}

std::variant<MapType, std::string> mapform_classify(std::int64_t a, std::int64_t s0, std::int64_t s1, std::int64_t p,
                                                    std::int64_t q) {
    if (p < 1) {
        throw DomainError("mapform_classify: p must be positive");
    }
    if (std::gcd(mod(a, p), p) != 1) {
        throw DomainError("mapform_classify: a is not a unit mod p");
    }
    const auto fix = conjugation_fixed_points(p, q);
    const auto is_fixed = [&](std::int64_t s) { return std::find(fix.begin(), fix.end(), mod(s, p)) != fix.end(); };
    if (!is_fixed(s0) || !is_fixed(s1)) {
        throw DomainError("mapform_classify: s0 and s1 must be fixed points of J");
    }
    const std::int64_t r = mod(a, p);
    if (p % 2 == 1) {
        if (mod(r * r - 1, p) == 0) {
            return MapType::I;
        }
        return "a^2 = " + std::to_string(mod(r * r, p)) + " mod p, not 1 (p odd)";
    }
    const std::int64_t sq = mod(r * r, 2 * p);
    if (mod(s0 - s1, p) == 0) {
        if (sq == 1) {
            return MapType::II;
        }
        return "a^2 = " + std::to_string(sq) + " mod 2p, not 1 (p even, s0 = s1)";
    }
    if (p % 8 != 0) {
        return "p = " + std::to_string(p % 8) + " mod 8, not 0 (p even, s0 != s1)";
    }
    if (sq == p + 1) {
        return MapType::III;
    }
    return "a^2 = " + std::to_string(sq) + " mod 2p, not p + 1 (p even, s0 != s1)";
}

AffineMapSearch enumerate_affine_maps(std::int64_t p, std::int64_t q) {
    if (p < 1 || std::gcd(p, q) != 1) {
        throw DomainError("enumerate_affine_maps: need p >= 1 and gcd(p, q) = 1");
    }
    AffineMapSearch out;
    const auto fix = conjugation_fixed_points(p, q);
    if (fix.empty()) {
        return out;
    }
    // Any choice of s0 in Fix(J) can be moved to the first one by shifting s1.
    const std::int64_t s0 = fix.front();
    std::set<std::vector<std::int64_t>> seen;
    for (std::int64_t a = 0; a < p; ++a) {
        if (std::gcd(a, p) != 1) {
            continue;
        }
        for (std::int64_t s1 : fix) {
            std::vector<std::int64_t> image(static_cast<std::size_t>(p));
            bool ok = true;
            for (std::int64_t i = 0; i < p && ok; ++i) {
                const std::int64_t j = mod(a * (i - s0) + s1, p);
                image[static_cast<std::size_t>(i)] = j;
                ok = mod(q - 1 - j, p) == mod(a * (mod(q - 1 - i, p) - s0) + s1, p) && d_diff_even(p, q, i, j);
            }
            if (!ok || !seen.insert(image).second) {
                continue;
            }
            const auto kind = mapform_classify(a, s0, s1, p, q);
            if (const auto* t = std::get_if<MapType>(&kind)) {
                out.maps.push_back({p, a, s0, s1, *t});
            } else {
                out.unclassified.push_back("p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                           " a=" + std::to_string(a) + " s0=" + std::to_string(s0) +
                                           " s1=" + std::to_string(s1) + ": " + std::get<std::string>(kind));
            }
        }
    }
    return out;
}

Rational nu_plus_bound(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0) {
        throw DomainError("nu_plus_bound: need p, q > 0");
    }
    return Rational(p, 4 * q) + Rational(1, 2) - Rational(3, q) - Rational(q);
}

std::optional<std::int64_t> genusbound_witness(std::int64_t p, std::int64_t q, const AffineMapCandidate& phi) {
    if (phi.p != p) {
        throw DomainError("genusbound_witness: map modulus differs from p");
    }
    if (phi.is_identity_like()) {
        throw DomainError("genusbound_witness: a = +-1 mod p is excluded");
    }
    const Rational bound = nu_plus_bound(p, q);
    std::optional<std::int64_t> best;
    std::int64_t best_f = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t f = std::min(floor_div(x, q), ceil_div(p - x, q));
        if (best && f <= best_f) {
            continue;
        }
        if (d_invariant(p, q, x) > d_invariant(p, q, phi(x))) {
            best = x;
            best_f = f;
        }
    }
    if (best && Rational(best_f + 1) > bound) {
        return best;
    }
    return std::nullopt;
}

std::optional<CableSlope> cable_slope(std::int64_t r, std::int64_t s) {
    if (r < 2 || s <= r || std::gcd(r, s) != 1) {
        throw DomainError("cable_slope: need s > r > 1 coprime");
    }
    const std::int64_t q = s / r;
    if (q < 2 || r <= q) {
        return std::nullopt;
    }
    const std::int64_t q2 = q * q - 1;
    const std::int64_t q3 = r * q * q * q;
    int sign = 0;
    if (s * q2 == q3 + 1) {
        sign = 1;
    } else if (s * q2 == q3 - 1) {
        sign = -1;
    } else {
        return std::nullopt;
    }
    const std::int64_t p_num = r * r * q * q * q * q - 1;
    const std::int64_t b_num = r * q + sign;
    const std::int64_t c_num = q * q * r * r - 1;
    if (p_num % q2 != 0 || b_num % q2 != 0 || c_num % q2 != 0) {
        throw std::logic_error("cable_slope: non-integral parameters");
    }
    const std::int64_t b = b_num / q2;
    return CableSlope{p_num / q2, q, CableKnot(q, c_num / q2, TorusKnot(r, b))};
}

namespace {

auto census_key(const CensusRecord& x) {
    const TorusKnot t = x.torus.canonical();
    const TorusKnot c = x.cable.companion().canonical();
    return std::make_tuple(t.r(), t.s(), x.p, x.q, x.cable.w(), x.cable.c(), c.r(), c.s());
}

}  // namespace

bool census_less(const CensusRecord& x, const CensusRecord& y) { return census_key(x) < census_key(y); }

bool census_same_pair(const CensusRecord& x, const CensusRecord& y) { return census_key(x) == census_key(y); }

bool verify_census_pair(const TorusKnot& torus, std::int64_t p, std::int64_t q, const CableKnot& cable) {
    const SurgeryResult a = surgery_torus_knot(torus, p, q).resolved();
    const SurgeryResult b = surgery_cable(cable, p, q).resolved();
    const auto* sa = a.get_if<SeifertInvariants>();
    const auto* sb = b.get_if<SeifertInvariants>();
    if (sa == nullptr || sb == nullptr) {
        return false;
    }
    const BigInt order = std::abs(p);
    return results_equal_oriented(a, b) == true && casson_walker_obstruction(torus, cable, p, q) == Rational(0) &&
           h1_order(*sa) == order && h1_order(*sb) == order;
}

std::vector<CensusRecord> cable_census(std::int64_t s_max, std::int64_t q_max) {
    if (s_max < 2 || q_max < 2) {
        throw DomainError("cable_census: bounds must be >= 2");
    }
    std::vector<CensusRecord> out;
    for (std::int64_t s = 3; s <= s_max; ++s) {
        for (std::int64_t r = 2; r < s; ++r) {
            if (std::gcd(r, s) != 1) {
                continue;
            }
            const auto slope = cable_slope(r, s);
            if (!slope || slope->q > q_max) {
                continue;
            }
            const TorusKnot torus(r, s);
            out.push_back({torus, slope->p, slope->q, slope->cable,
                           verify_census_pair(torus, slope->p, slope->q, slope->cable)});
        }
    }
    std::sort(out.begin(), out.end(), census_less);
    return out;
}

std::vector<CensusRecord> cable_bruteforce(std::int64_t s_max, std::int64_t q_max, std::int64_t companion_max) {
    if (s_max < 2 || q_max < 2) {
        throw DomainError("cable_bruteforce: bounds must be >= 2");
    }
    std::vector<CensusRecord> out;
    auto try_pair = [&](const CableKnot& cable, std::int64_t p, std::int64_t q) {
        const TorusKnot& comp = cable.companion();
        const std::int64_t a = comp.r();
        const std::int64_t b = std::abs(comp.s());
        const std::int64_t w = cable.w();
        const std::int64_t m = std::abs(p - a * comp.s() * q * w * w);
        const std::int64_t orders[3] = {a, b, m};
        std::optional<SurgeryResult> y;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                const std::int64_t r = std::min(orders[i], orders[j]);
                const std::int64_t s = std::max(orders[i], orders[j]);
                if (r < 2 || s <= r || s > s_max || std::gcd(r, s) != 1 ||
                    std::abs(p - r * s * q) != orders[3 - i - j]) {
                    continue;
                }
                if (!y) {
                    y = surgery_cable(cable, p, q);
                }
                if (results_equal_oriented(surgery_torus_knot(r, s, p, q), *y) == true) {
                    const TorusKnot torus(r, s);
                    out.push_back({torus, p, q, cable, verify_census_pair(torus, p, q, cable)});
                }
            }
        }
    };
    for (std::int64_t a = 2; a * (a + 1) <= companion_max; ++a) {
        for (std::int64_t b = a + 1; a * b <= companion_max; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            for (const std::int64_t sb : {b, -b}) {
                for (std::int64_t w = 2; w <= q_max; ++w) {
                    for (std::int64_t q = 2; q <= q_max; ++q) {
                        for (const std::int64_t delta : {-1, 1}) {
                            // Two of the fiber orders {a, b, m} of the cable surgery must be
                            // the r < s <= s_max of the torus knot. Either m <= s_max, which
                            // pins c near a*sb*w, or {r, s} = {a, b}, which fixes 2p.
                            std::vector<std::int64_t> cs;
                            const std::int64_t centre = a * sb * w;
                            const std::int64_t span = (s_max + 1) / (q * w) + 1;
                            for (std::int64_t c = centre - span; c <= centre + span; ++c) {
                                cs.push_back(c);
                            }
                            for (const std::int64_t sign : {1, -1}) {
                                const std::int64_t twice_p = sign * a * b * q * (1 + w * w);
                                if (twice_p % 2 == 0 && (twice_p / 2 - delta) % (q * w) == 0) {
                                    cs.push_back((twice_p / 2 - delta) / (q * w));
                                }
                            }
                            for (const std::int64_t c : cs) {
                                if (std::gcd(w, std::abs(c)) != 1) {
                                    continue;
                                }
                                try_pair(CableKnot(w, c, TorusKnot(a, sb)), q * w * c + delta, q);
                            }
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), census_less);
    out.erase(std::unique(out.begin(), out.end(), census_same_pair), out.end());
    return out;
}

bool lens_equal_via_cf(std::int64_t p, std::int64_t q1, std::int64_t q2) {
    if (p < 1) {
        throw DomainError("lens_equal_via_cf: p must be positive");
    }
    q1 = mod(q1, p);
    q2 = mod(q2, p);
    if (p <= 2) {
        return true;
    }
    const CFPlus e1 = cf_plus_expand(p, q1, Parity::Odd);
    const CFPlus e2 = cf_plus_expand(p, q2, Parity::Odd);
    return e1 == e2 || e1 == e2.reversed();
}

bool torus_torus_shared(std::int64_t r, std::int64_t s, std::int64_t a, std::int64_t b, std::int64_t p,
                        std::int64_t q) {
    const TorusKnot k1(r, s);
    const TorusKnot k2(a, b);
    if (q < 1 || std::gcd(p, q) != 1) {
        throw DomainError("torus_torus_shared: need q >= 1 and gcd(p, q) = 1");
    }
    if (k1.canonical() == k2.canonical()) {
        return true;
    }
    const SurgeryResult y1 = surgery_torus_knot(k1, p, q).resolved();
    const SurgeryResult y2 = surgery_torus_knot(k2, p, q).resolved();
    if (y1.get_if<ConnectedSumLens>() != nullptr || y2.get_if<ConnectedSumLens>() != nullptr) {
        return results_equal_oriented(y1, y2).value_or(false);
    }
    const auto* l1 = y1.get_if<LensSpace>();
    const auto* l2 = y2.get_if<LensSpace>();
    if (l1 != nullptr && l2 != nullptr) {
        return l1->p() == l2->p() && lens_equal_via_cf(l1->p(), l1->q(), l2->q());
    }
    if (l1 != nullptr || l2 != nullptr) {
        return false;
    }
    if (p != 0 && casson_walker_obstruction(k1, k2, p, q) != Rational(0)) {
        return false;
    }
    return sfs_equal_oriented(*y1.get_if<SeifertInvariants>(), *y2.get_if<SeifertInvariants>());
}

namespace {

std::vector<std::int64_t> expansion_of(std::int64_t r, std::int64_t s) {
    if (r < 2 || s <= r || std::gcd(r, s) != 1) {
        throw DomainError("toruscase expansion: need s > r > 1 coprime");
    }
    return cf_plus_expand(s, r).coefficients();
}

void check_sign_q(std::int64_t q, int sign) {
    if (q < 2 || (sign != 1 && sign != -1)) {
        throw DomainError("toruscase expansion: need q >= 2 and sign = +-1");
    }
}

}  // namespace

CFPlus toruscase_expansion(std::int64_t r, std::int64_t s, std::int64_t q, int sign) {
    check_sign_q(q, sign);
    const auto a = expansion_of(r, s);
    const std::size_t k = a.size() - 1;
    const int parity = k % 2 == 0 ? 1 : -1;
    std::vector<std::int64_t> out;
    if (sign == parity) {
        // [a0, ..., ak, q-1, 1, ak - 1, a_{k-1}, ..., a1]
        out.assign(a.begin(), a.end());
        out.push_back(q - 1);
        out.push_back(1);
        out.push_back(a[k] - 1);
        for (std::size_t i = k - 1; i >= 1; --i) {
            out.push_back(a[i]);
        }
    } else {
        // [a0, ..., a_{k-1}, ak - 1, 1, q-1, ak, ..., a1]
        out.assign(a.begin(), a.end() - 1);
        out.push_back(a[k] - 1);
        out.push_back(1);
        out.push_back(q - 1);
        for (std::size_t i = k; i >= 1; --i) {
            out.push_back(a[i]);
        }
    }
    return CFPlus(std::move(out));
}

CFPlus toruscase_reversed_expansion(std::int64_t r, std::int64_t s, std::int64_t q, int sign) {
    check_sign_q(q, sign);
    const auto a = expansion_of(r, s);
    const std::size_t k = a.size() - 1;
    const int parity = k % 2 == 0 ? 1 : -1;
    std::vector<std::int64_t> out(a.begin() + 1, a.end());
    if (sign == parity) {
        // [a1, ..., a_{k-1}, ak - 1, 1, q-1, ak, ..., a0]
        out.back() -= 1;
        out.push_back(1);
        out.push_back(q - 1);
    } else {
        // [a1, ..., ak, q-1, 1, ak - 1, a_{k-1}, ..., a0]
        out.push_back(q - 1);
        out.push_back(1);
        out.push_back(a[k] - 1);
        for (std::size_t i = k - 1; i >= 1; --i) {
            out.push_back(a[i]);
        }
        out.push_back(a[0]);
        return CFPlus(std::move(out));
    }
    for (std::size_t i = k + 1; i-- > 0;) {
        out.push_back(a[i]);
    }
    return CFPlus(std::move(out));
}

SlopeClassification classify_slope(std::int64_t r, std::int64_t s, std::int64_t p, std::int64_t q) {
    if (q < 2) {
        throw Unsupported("classify_slope: integer slopes are out of scope");
    }
    if (r < 2 || s <= r || std::gcd(r, s) != 1) {
        throw DomainError("classify_slope: need s > r > 1 coprime");
    }
    if (std::gcd(p, q) != 1) {
        throw DomainError("classify_slope: gcd(p, q) != 1");
    }
    const Rational hyperbolic = Rational(43, 4) * Rational(r * s - r - s);
    const Rational pr(p);
    SlopeCondition cond = SlopeCondition::NotCovered;
    if (pr <= std::min(-hyperbolic, Rational(-32 * q))) {
        cond = SlopeCondition::I;
    } else if (pr >= std::max(hyperbolic, Rational(32 * q + 2 * q * (r - 1) * (s - 1)))) {
        cond = SlopeCondition::II;
    } else if (q >= 9) {
        cond = SlopeCondition::III;
    }
    std::optional<CableKnot> cable;
    if (const auto slope = cable_slope(r, s); slope && slope->p == p && slope->q == q) {
        cable = slope->cable;
    }
    return {cond, cable};
}

std::string to_string(const SlopeClassification& c) {
    if (c.condition == SlopeCondition::NotCovered) {
        return c.known_cable ? "not covered; known cable pair exists at this slope" : "not covered";
    }
    const std::string name = c.condition == SlopeCondition::I ? "(i)" : (c.condition == SlopeCondition::II ? "(ii)" : "(iii)");
    if (c.known_cable) {
        return "condition " + name + ": torus knot or " + c.known_cable->str();
    }
    return "condition " + name + ": characterizing among q>=2 candidates";
}

Thresholds thresholds(std::int64_t g, std::int64_t q) {
    if (g < 0 || q < 1) {
        throw DomainError("thresholds: need g >= 0 and q >= 1");
    }
    return {12 + 4 * q * q - 2 * q + 4 * q * g, std::min(2 * q - 12 - 4 * q * q, -2 * q * g),
            Rational(43 * (2 * g - 1), 4)};
}

}  // namespace slopekit
