#include "slopekit/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "slopekit/char_slopes.hpp"
#include "slopekit/error.hpp"
#include "slopekit/lens.hpp"
#include "slopekit/seifert.hpp"
#include "slopekit/surgery_floer.hpp"

namespace slopekit {

namespace {

constexpr std::size_t kMaxReported = 20;

class Checker {
public:
    explicit Checker(std::string name) { report_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& what) {
        ++report_.checked;
        if (ok) {
            return;
        }
        ++report_.failure_count;
        if (report_.failures.size() < kMaxReported) {
            report_.failures.push_back(what());
        }
    }

    VerifyReport take() { return std::move(report_); }

private:
    VerifyReport report_;
};

std::string join(const std::vector<Rational>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + xs[i].str();
    }
    return out + "}";
}

VerifyReport poincare() {
    Checker c("poincare");
    const SurgeryResult y = surgery_torus_knot(3, 2, 1, 1);
    const std::string text = to_string(y);
    c.expect(text == "S2(-2; 1/2, 2/3, 4/5)", [&] { return "S^3_1(T(3,2)) gave " + text; });
    if (const auto* sfs = y.get_if<SeifertInvariants>()) {
        c.expect(euler_number(*sfs) == Rational(-1, 30),
                 [&] { return "Euler number " + euler_number(*sfs).str() + ", expected -1/30"; });
        c.expect(h1_order(*sfs) == 1, [] { return "H_1 is not trivial"; });
    }
    return c.take();
}

VerifyReport remark_29_2() {
    Checker c("remark-29-2");
    const SurgeryResult y1 = surgery_torus_knot(2, 7, 29, 2);
    const SurgeryResult y2 = surgery_torus_knot(3, 5, 29, 2);
    const auto* l1 = y1.get_if<LensSpace>();
    const auto* l2 = y2.get_if<LensSpace>();
    c.expect(l1 != nullptr && l2 != nullptr, [] { return "both surgeries should be lens spaces"; });
    if (l1 == nullptr || l2 == nullptr) {
        return c.take();
    }
    c.expect(*l1 == LensSpace(29, 8), [&] { return "T(2,7) side gave " + to_string(y1); });
    c.expect(*l2 == LensSpace(29, 18), [&] { return "T(3,5) side gave " + to_string(y2); });
    // -L(29,18) = L(29,11), and reversing the odd expansion of 29/11 gives 29/8.
    const LensSpace minus2 = l2->reversed();
    const std::int64_t dual = cf_reverse_dual(minus2.p(), minus2.q(), Parity::Odd);
    c.expect(dual == l1->q(), [&] { return "reverse dual of 29/" + std::to_string(minus2.q()) + " is " +
                                           std::to_string(dual); });
    c.expect(lens_homeo(*l1, minus2), [] { return "L(29,8) and -L(29,18) should agree"; });
    c.expect(!lens_homeo(*l1, *l2), [] { return "oriented equality must fail"; });
    c.expect(!torus_torus_shared(2, 7, 3, 5, 29, 2), [] { return "torus_torus_shared should be false"; });
    const auto d1 = d_surgery_multiset(VTable::of(staircase(TorusKnot(2, 7))), 29, 2);
    auto d2 = d_surgery_multiset(VTable::of(staircase(TorusKnot(3, 5))), 29, 2);
    for (Rational& x : d2) {
        x = -x;
    }
    std::sort(d2.begin(), d2.end());
    c.expect(d1 == d2, [&] { return "d-multisets not negatives: " + join(d1) + " vs " + join(d2); });
    c.expect(d1 != d_surgery_multiset(VTable::of(staircase(TorusKnot(3, 5))), 29, 2),
             [] { return "d-multisets should differ with orientation kept"; });
    return c.take();
}

VerifyReport congruences() {
    Checker c("congruences");
    for (std::int64_t p = 2; p <= 60; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            for (std::int64_t i = 0; i < p; ++i) {
                for (std::int64_t j = 0; j < p; ++j) {
                    const auto got = congruence_residues(p, q, i, j);
                    const auto want = predicted_congruence_residues(p, q, i, j);
                    auto where = [&] {
                        return "p=" + std::to_string(p) + " q=" + std::to_string(q) + " i=" + std::to_string(i) +
                               " j=" + std::to_string(j);
                    };
                    c.expect(got == want, [&] { return "residues differ at " + where(); });
                    c.expect(d_diff_even(p, q, i, j) == d_diff_even_exact(p, q, i, j),
                             [&] { return "2Z criterion differs at " + where(); });
                }
            }
        }
    }
    return c.take();
}

VerifyReport moser() {
    Checker c("moser");
    for (std::int64_t r = 2; r <= 7; ++r) {
        for (std::int64_t s = r + 1; s <= 7; ++s) {
            if (std::gcd(r, s) != 1) {
                continue;
            }
            const VTable v = VTable::of(staircase(TorusKnot(r, s)));
            for (std::int64_t q = 1; q <= 5; ++q) {
                for (const std::int64_t p : {q * r * s - 1, q * r * s + 1}) {
                    if (p > 400 || std::gcd(p, q) != 1) {
                        continue;
                    }
                    const auto lhs = d_surgery_multiset(v, p, q);
                    const auto rhs = d_multiset(p, q * r * r % p);
                    c.expect(lhs == rhs, [&] {
                        return "T(" + std::to_string(r) + "," + std::to_string(s) + ") at " + std::to_string(p) +
                               "/" + std::to_string(q);
                    });
                }
            }
        }
    }
    return c.take();
}

VerifyReport mapform() {
    Checker c("mapform");
    for (std::int64_t p = 2; p <= 48; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            const auto found = enumerate_affine_maps(p, q);
            c.expect(!found.maps.empty(), [&] { return "no maps (identity missing) at p=" + std::to_string(p); });
            for (const std::string& bad : found.unclassified) {
                c.expect(false, [&] { return "unclassified survivor " + bad; });
            }
        }
    }
    return c.take();
}

VerifyReport contfrac() {
    Checker c("contfrac");
    for (std::int64_t r = 2; r <= 20; ++r) {
        for (std::int64_t s = r + 1; s <= 20; ++s) {
            if (std::gcd(r, s) != 1) {
                continue;
            }
            for (std::int64_t q = 2; q <= 5; ++q) {
                for (const int sign : {1, -1}) {
                    const std::int64_t p = q * r * s + sign;
                    const std::int64_t qr2 = q * r * r;
                    auto where = [&] {
                        return "r=" + std::to_string(r) + " s=" + std::to_string(s) + " q=" + std::to_string(q) +
                               " p=" + std::to_string(p);
                    };
                    const CFPlus built = toruscase_expansion(r, s, q, sign);
                    c.expect(built == cf_plus_expand(p, qr2, Parity::Odd), [&] { return "pattern at " + where(); });
                    const Rational rev = cf_plus_eval(toruscase_reversed_expansion(r, s, q, sign));
                    const bool dual_ok = rev.numerator() == p && rev.denominator() * qr2 % p == 1;
                    c.expect(dual_ok, [&] { return "reversed pattern at " + where() + " gave " + rev.str(); });
                }
            }
        }
    }
    return c.take();
}

const std::map<std::string, std::function<VerifyReport()>>& registry() {
    static const std::map<std::string, std::function<VerifyReport()>> table{
        {"poincare", poincare}, {"remark-29-2", remark_29_2}, {"congruences", congruences},
        {"moser", moser},       {"mapform", mapform},         {"contfrac", contfrac},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_names() {
    static const std::vector<std::string> names{"poincare", "remark-29-2", "congruences",
                                                "moser",    "mapform",     "contfrac"};
    return names;
}

VerifyReport run_verify(const std::string& name) {
    const auto it = registry().find(name);
    if (it == registry().end()) {
        throw DomainError("unknown check '" + name + "'");
    }
    return it->second();
}

}  // namespace slopekit
