#include "slopekit/seifert.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "slopekit/error.hpp"
#include "slopekit/numtheory.hpp"

namespace slopekit {

SeifertInvariants::SeifertInvariants(std::int64_t e, std::vector<Fiber> fibers)
    : e_(e), fibers_(std::move(fibers)) {
    if (fibers_.size() > 3) {
        throw DomainError("Seifert invariants: at most three exceptional fibers are supported");
    }
    for (const Fiber& f : fibers_) {
        if (f.a == 0) {
            throw DomainError("Seifert invariants: fiber with a = 0");
        }
        if (std::gcd(std::abs(f.a), std::abs(f.b)) != 1) {
            throw DomainError("Seifert invariants: fiber " + std::to_string(f.b) + "/" + std::to_string(f.a) +
                              " is not in lowest terms");
        }
    }
}

SeifertInvariants normalize(const SeifertInvariants& s) {
    std::int64_t e = s.e();
    std::vector<Fiber> out;
    for (Fiber f : s.fibers()) {
        if (f.a < 0) {
            f = {-f.a, -f.b};
        }
        e += floor_div(f.b, f.a);
        f.b = mod(f.b, f.a);
        if (f.a != 1) {
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return SeifertInvariants(e, std::move(out));
}

bool is_normalized(const SeifertInvariants& s) { return normalize(s) == s; }

Rational euler_number(const SeifertInvariants& s) {
    Rational sum(s.e());
    for (const Fiber& f : s.fibers()) {
        sum += Rational(f.b, f.a);
    }
    return sum;
}

BigInt h1_order(const SeifertInvariants& s) {
    Rational prod = euler_number(s);
    for (const Fiber& f : s.fibers()) {
        prod *= Rational(f.a);
    }
    return abs(prod).numerator();
}

SeifertInvariants reverse_orientation(const SeifertInvariants& s) {
    std::vector<Fiber> fibers;
    for (const Fiber& f : s.fibers()) {
        fibers.push_back({f.a, -f.b});
    }
    return normalize(SeifertInvariants(-s.e(), std::move(fibers)));
}

bool sfs_equal_oriented(const SeifertInvariants& s1, const SeifertInvariants& s2) {
    const SeifertInvariants n1 = normalize(s1);
    const SeifertInvariants n2 = normalize(s2);
    if (n1.fibers().size() < 3 || n2.fibers().size() < 3) {
        throw NotComparable("Neumann criterion needs three exceptional fibers on both sides");
    }
    // Normalized fibers are the fractions mod 1 in sorted order; with those
    // equal, equal Euler numbers means equal e.
    return n1 == n2;
}

LensSpace lens_from_fibers(const SeifertInvariants& s) {
    const SeifertInvariants n = normalize(s);
    if (n.fibers().size() > 2) {
        throw NotComparable("three exceptional fibers: not a lens space");
    }
    Fiber f1{1, 0};
    Fiber f2{1, 0};
    if (!n.fibers().empty()) {
        f1 = n.fibers()[0];
    }
    if (n.fibers().size() == 2) {
        f2 = n.fibers()[1];
    }
    // Central unknot with framing -e, meridional fibers a_i/b_i. Slam-dunk
    // the second fiber into the centre, then read off the first as a rational
    // tangle: the result is surgery on the unknot with slope P/Q below.
    using Wide = __int128;
    const Wide e = n.e();
    Wide big_p = -(e * f1.a * f2.a + Wide(f1.b) * f2.a + Wide(f2.b) * f1.a);
    if (big_p == 0) {
        throw Unsupported("Seifert space with zero Euler number (S^1 x S^2 type)");
    }
    const Wide zn = -(e * f2.a + f2.b);
    const Wide zd = f2.a;
    // a1 D - b1 B = 1.
    const ExtGcd g = ext_gcd(f1.a, -f1.b);
    const Wide d_coef = g.x;
    const Wide b_coef = g.y;
    Wide big_q = -b_coef * zn + d_coef * zd;
    if (big_p < 0) {
        big_p = -big_p;
        big_q = -big_q;
    }
    big_q %= big_p;
    if (big_q < 0) {
        big_q += big_p;
    }
    return LensSpace(static_cast<std::int64_t>(big_p), static_cast<std::int64_t>(big_q));
}

std::string to_string(const SeifertInvariants& s) {
    std::ostringstream os;
    os << "S2(" << s.e() << ";";
    bool first = true;
    for (const Fiber& f : s.fibers()) {
        os << (first ? " " : ", ") << f.b << "/" << f.a;
        first = false;
    }
    os << ")";
    return os.str();
}

SurgeryResult SurgeryResult::resolved() const {
    const auto* rev = get_if<OrientationReversed>();
    if (rev == nullptr) {
        return *this;
    }
    const SurgeryResult inner = rev->inner->resolved();
    if (const auto* sfs = inner.get_if<SeifertInvariants>()) {
        return reverse_orientation(*sfs);
    }
    if (const auto* lens = inner.get_if<LensSpace>()) {
        return lens->reversed();
    }
    if (const auto* sum = inner.get_if<ConnectedSumLens>()) {
        return ConnectedSumLens{sum->first.reversed(), sum->second.reversed()};
    }
    // Markers are orientation-blind.
    return inner;
}

SurgeryResult SurgeryResult::reversed() const {
    if (const auto* rev = get_if<OrientationReversed>()) {
        return *rev->inner;
    }
    return OrientationReversed{std::make_shared<const SurgeryResult>(*this)};
}

SurgeryResult surgery_torus_knot(std::int64_t r, std::int64_t s, std::int64_t p, std::int64_t q) {
    if (r < 2 || s < 2 || std::gcd(r, s) != 1) {
        throw DomainError("surgery_torus_knot: need r, s > 1 coprime");
    }
    if (q < 1 || std::gcd(p, q) != 1) {
        throw DomainError("surgery_torus_knot: slope " + std::to_string(p) + "/" + std::to_string(q) +
                          " needs q >= 1 and gcd(p, q) = 1");
    }
    const std::int64_t rs = r * s;
    const std::int64_t third = p - rs * q;
    if (third == 0) {
        // p/q = rs forces q = 1.
        return ConnectedSumLens{LensSpace(r, s), LensSpace(s, r)};
    }
    // r s' + s r' = 1 with e = 0.
    const ExtGcd g = ext_gcd(r, s);
    SeifertInvariants raw(0, {{s, g.x}, {r, g.y}, {third, q}});
    if (std::abs(third) == 1) {
        const std::int64_t pp = std::abs(p);
        const std::int64_t qq = static_cast<std::int64_t>((static_cast<__int128>(q) * r * r) % pp);
        return p > 0 ? LensSpace(pp, qq) : LensSpace(pp, qq).reversed();
    }
    return normalize(raw);
}

SurgeryResult surgery_torus_knot(const TorusKnot& k, std::int64_t p, std::int64_t q) {
    if (k.s() > 0) {
        return surgery_torus_knot(k.r(), k.s(), p, q);
    }
    return surgery_torus_knot(k.r(), -k.s(), -p, q).reversed();
}

SurgeryResult surgery_cable(const CableKnot& k, std::int64_t p, std::int64_t q) {
    if (q < 2) {
        throw Unsupported("surgery_cable: only non-integral slopes (q >= 2) are handled");
    }
    const std::int64_t wc = k.w() * k.c();
    if (p == q * wc) {
        return ReducibleMarker{};
    }
    if (std::gcd(p, q) != 1) {
        throw DomainError("surgery_cable: gcd(p, q) != 1");
    }
    if (p == q * wc + 1 || p == q * wc - 1) {
        return surgery_torus_knot(k.companion(), p, q * k.w() * k.w());
    }
    return ToroidalMarker{};
}

SurgeryResult surgery(const Knot& k, std::int64_t p, std::int64_t q) {
    if (const auto* t = std::get_if<TorusKnot>(&k)) {
        return surgery_torus_knot(*t, p, q);
    }
    return surgery_cable(std::get<CableKnot>(k), p, q);
}

namespace {

std::string lens_text(const LensSpace& l) {
    return "L(" + std::to_string(l.p()) + "," + std::to_string(l.q()) + ")";
}

}  // namespace

std::string to_string(const SurgeryResult& r) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SeifertInvariants>) {
                return to_string(v);
            } else if constexpr (std::is_same_v<T, LensSpace>) {
                return lens_text(v);
            } else if constexpr (std::is_same_v<T, ConnectedSumLens>) {
                return lens_text(v.first) + " # " + lens_text(v.second);
            } else if constexpr (std::is_same_v<T, OrientationReversed>) {
                return "-(" + to_string(*v.inner) + ")";
            } else if constexpr (std::is_same_v<T, ReducibleMarker>) {
                return "reducible";
            } else {
                return "toroidal";
            }
        },
        r.value());
}

std::optional<bool> results_equal_oriented(const SurgeryResult& a, const SurgeryResult& b) {
    const SurgeryResult x = a.resolved();
    const SurgeryResult y = b.resolved();
    if (const auto* s1 = x.get_if<SeifertInvariants>()) {
        if (const auto* s2 = y.get_if<SeifertInvariants>()) {
            return sfs_equal_oriented(*s1, *s2);
        }
        return std::nullopt;
    }
    if (const auto* l1 = x.get_if<LensSpace>()) {
        if (const auto* l2 = y.get_if<LensSpace>()) {
            return lens_homeo(*l1, *l2);
        }
        return std::nullopt;
    }
    if (const auto* c1 = x.get_if<ConnectedSumLens>()) {
        if (const auto* c2 = y.get_if<ConnectedSumLens>()) {
            const bool straight = lens_homeo(c1->first, c2->first) && lens_homeo(c1->second, c2->second);
            const bool crossed = lens_homeo(c1->first, c2->second) && lens_homeo(c1->second, c2->first);
            return straight || crossed;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace slopekit
