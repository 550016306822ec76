#include "slopekit/surgery_floer.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "slopekit/error.hpp"
#include "slopekit/lens.hpp"
#include "slopekit/numtheory.hpp"

namespace slopekit {

VTable VTable::of(const StaircaseInvariants& k) { return VTable(Kind::Knot, k); }

VTable VTable::mirror_of(const StaircaseInvariants& k) { return VTable(Kind::Mirror, k); }

VTable VTable::unknot() { return VTable(Kind::Unknot, std::nullopt); }

VTable VTable::zero() { return VTable(Kind::Zero, std::nullopt); }

std::int64_t VTable::operator()(std::int64_t k) const {
    switch (kind_) {
        case Kind::Knot:
            return knot_->v(k);
        case Kind::Mirror:
        case Kind::Unknot:
            return std::max<std::int64_t>(0, -k);
        case Kind::Zero:
            return 0;
    }
    return 0;
}

std::int64_t VTable::nu_plus() const {
    std::int64_t k = 0;
    while ((*this)(k) != 0) {
        ++k;
    }
    return k;
}

namespace {

void check_slope(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
        throw DomainError("need p, q > 0 coprime, got " + std::to_string(p) + "/" + std::to_string(q));
    }
}

void check_index(std::int64_t p, std::int64_t i) {
    if (i < 0 || i >= p) {
        throw DomainError("spin^c index " + std::to_string(i) + " outside [0, " + std::to_string(p - 1) + "]");
    }
}

}  // namespace

std::int64_t conjugate_index(std::int64_t p, std::int64_t q, std::int64_t i) {
    if (p < 1) {
        throw DomainError("conjugate_index: p must be positive");
    }
    check_index(p, i);
    return mod(q - 1 - i, p);
}

Rational d_surgery(const VTable& v, std::int64_t p, std::int64_t q, std::int64_t i) {
    check_slope(p, q);
    check_index(p, i);
    const std::int64_t lo = v(floor_div(i, q));
    const std::int64_t hi = v(ceil_div(p - i, q));
    return d_invariant(p, q, i) - Rational(2 * std::max(lo, hi));
}

std::vector<Rational> d_surgery_multiset(const VTable& v, std::int64_t p, std::int64_t q) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(p));
    for (std::int64_t i = 0; i < p; ++i) {
        out.push_back(d_surgery(v, p, q, i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> d_surgery_negative(const StaircaseInvariants& k, std::int64_t p, std::int64_t q) {
    if (p >= 0) {
        throw DomainError("d_surgery_negative: p must be negative");
    }
    std::vector<Rational> out = d_surgery_multiset(VTable::mirror_of(k), -p, q);
    for (Rational& x : out) {
        x = -x;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Rational base_grading_unchecked(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s, const VTable& v) {
    Rational g = d_invariant(p, q, i) - Rational(2 * v(floor_div(i + s * p, q)));
    std::int64_t sum = 0;
    if (s >= 1) {
        for (std::int64_t k = 1; k <= s - 1; ++k) {
            sum += floor_div(i + p * k, q);
        }
        return g + Rational(2 * sum);
    }
    for (std::int64_t k = s; k <= 0; ++k) {
        sum += floor_div(i + p * k, q);
    }
    return g - Rational(2 * sum);
}

}  // namespace

Rational tower_base_grading(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s, const VTable& v) {
    check_slope(p, q);
    if (i < 0 || 2 * i > p + q - 1) {
        throw DomainError("tower_base_grading: index outside [0, (p+q-1)/2]");
    }
    return base_grading_unchecked(p, q, i, s, v);
}

Rational b_base_grading(std::int64_t p, std::int64_t q, std::int64_t i) {
    check_slope(p, q);
    check_index(p, i);
    return d_invariant(p, q, i) - Rational(1);
}

Rational b_tower_grading(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s) {
    Rational g = b_base_grading(p, q, i);
    std::int64_t shift = 0;
    for (std::int64_t k = 0; k < s; ++k) {
        shift += floor_div(i + p * k, q);
    }
    for (std::int64_t k = s; k < 0; ++k) {
        shift -= floor_div(i + p * k, q);
    }
    return g + Rational(2 * shift);
}

std::vector<RedPiece> hf_red_pieces(const StaircaseInvariants& k, bool mirror, std::int64_t p, std::int64_t q,
                                    std::int64_t i) {
    check_slope(p, q);
    check_index(p, i);
    const VTable v = mirror ? VTable::mirror_of(k) : VTable::of(k);
    // p/q > 2 nu^+ - 1
    if (p <= (2 * v.nu_plus() - 1) * q) {
        throw Unsupported("hf_red_pieces: slope " + std::to_string(p) + "/" + std::to_string(q) +
                          " below 2 nu^+ - 1");
    }
    std::vector<RedPiece> out;
    if (!mirror) {
        return out;
    }
    // A_red of the mirror at index j is T(V_{|j|}(K)), nonzero only for |j| < g.
    const std::int64_t g = k.genus;
    const std::int64_t s_lo = floor_div(-g * q - i, p) - 1;
    const std::int64_t s_hi = ceil_div(g * q - i, p) + 1;
    for (std::int64_t s = s_lo; s <= s_hi; ++s) {
        const std::int64_t j = floor_div(i + p * s, q);
        const std::int64_t n = k.v(j < 0 ? -j : j);
        if (n > 0) {
            out.push_back({s, {base_grading_unchecked(p, q, i, s, v), n}});
        }
    }
    return out;
}

GradingSums grading_match_sums(std::int64_t m, std::int64_t t, std::int64_t p, std::int64_t q) {
    if (t == 0) {
        throw DomainError("grading_match_sums: t must be nonzero");
    }
    if (q < 2 || m < 0) {
        throw DomainError("grading_match_sums: need q >= 2 and m >= 0");
    }
    const std::int64_t lo = t > 0 ? 1 : t * q;
    const std::int64_t hi = t > 0 ? t * q - 1 : 0;
    GradingSums out{0, 0};
    for (std::int64_t k = lo; k <= hi; ++k) {
        out.sum_a += floor_div(m * q + p * k, q);
        out.sum_b += floor_div(m * q + 1 + p * k, q);
    }
    return out;
}

bool hfk_recovery_verify(const StaircaseInvariants& k1, const StaircaseInvariants& k2, std::int64_t p,
                         std::int64_t q) {
    check_slope(p, q);
    if (p <= (2 * k1.genus - 1) * q) {
        throw Unsupported("hfk_recovery_verify: slope must exceed 2g - 1");
    }
    const std::int64_t top = std::max(k1.genus, k2.genus);
    for (std::int64_t k = 0; k <= top; ++k) {
        if (k1.v(k) != k2.v(k)) {
            return false;
        }
    }
    return true;
}

}  // namespace slopekit
