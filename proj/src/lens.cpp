#include "slopekit/lens.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "slopekit/error.hpp"
#include "slopekit/numtheory.hpp"

namespace slopekit {

namespace {

std::int64_t reduce_q(std::int64_t p, std::int64_t q) {
    if (p < 1) {
        throw DomainError("lens space: p must be >= 1");
    }
    const std::int64_t r = mod(q, p);
    if (p > 1 && std::gcd(p, r) != 1) {
        throw DomainError("lens space: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    }
    return r;
}

void check_index(std::int64_t p, std::int64_t i) {
    if (i < 0 || i >= p) {
        throw DomainError("spin^c index " + std::to_string(i) + " outside [0, " + std::to_string(p - 1) + "]");
    }
}

using Table = std::shared_ptr<const std::vector<Rational>>;

class DTableCache {
public:
    Table get(std::int64_t p, std::int64_t q) {
        const auto key = std::make_pair(p, q);
        {
            std::shared_lock lock(mutex_);
            if (auto it = tables_.find(key); it != tables_.end()) {
                return it->second;
            }
        }
        Table computed = compute(p, q);
        std::unique_lock lock(mutex_);
        return tables_.try_emplace(key, std::move(computed)).first->second;
    }

private:
    // Recursion depth is the Euclid length of (p, q); the lock is not held
    // while recursing.
    Table compute(std::int64_t p, std::int64_t q) {
        auto values = std::make_shared<std::vector<Rational>>();
        values->reserve(static_cast<std::size_t>(p));
        if (p == 1) {
            values->emplace_back(0);
            return values;
        }
        const Table inner = get(q, p % q);
        const Rational quarter(1, 4);
        for (std::int64_t i = 0; i < p; ++i) {
            const std::int64_t t = p + q - 1 - 2 * i;
            values->push_back(Rational(t * t, 4 * p * q) - quarter - (*inner)[static_cast<std::size_t>(i % q)]);
        }
        return values;
    }

    std::shared_mutex mutex_;
    std::map<std::pair<std::int64_t, std::int64_t>, Table> tables_;
};

DTableCache& cache() {
    static DTableCache instance;
    return instance;
}

}  // namespace

LensSpace::LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(reduce_q(p, q)) {}

LensSpace LensSpace::reversed() const { return LensSpace(p_, p_ - q_); }

std::shared_ptr<const std::vector<Rational>> d_table(std::int64_t p, std::int64_t q) {
    return cache().get(p, reduce_q(p, q));
}

Rational d_invariant(std::int64_t p, std::int64_t q, std::int64_t i) {
    const auto table = d_table(p, q);
    check_index(p, i);
    return (*table)[static_cast<std::size_t>(i)];
}

Rational d_tilde(std::int64_t p, std::int64_t q, std::int64_t i) { return Rational(2 * p) * d_invariant(p, q, i); }

CongruenceResidues congruence_residues(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t j) {
    const Rational diff = d_tilde(p, q, i) - d_tilde(p, q, j);
    if (!diff.is_integer()) {
        throw std::logic_error("d_tilde difference " + diff.str() + " is not an integer");
    }
    const std::int64_t n = diff.to_int64();
    const std::int64_t qr = reduce_q(p, q);
    return {mod(n, 4), mod(qr * n, 4 * p)};
}

CongruenceResidues predicted_congruence_residues(std::int64_t p, std::int64_t q, std::int64_t i,
                                                 std::int64_t j) {
    const std::int64_t qr = reduce_q(p, q);
    check_index(p, i);
    check_index(p, j);
    return {mod(2 * (i - j) * (p + 1), 4), mod(2 * (p * qr + qr - 1 - i - j) * (j - i), 4 * p)};
}

bool d_diff_even(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t j) {
    const std::int64_t qr = reduce_q(p, q);
    check_index(p, i);
    check_index(p, j);
    const std::int64_t modulus = (p % 2 == 1) ? p : 2 * p;
    return mod(mod(qr - 1 - i - j, modulus) * mod(j - i, modulus), modulus) == 0;
}

bool d_diff_even_exact(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t j) {
    const Rational half_diff = (d_invariant(p, q, i) - d_invariant(p, q, j)) / Rational(2);
    return half_diff.is_integer();
}

std::vector<Rational> d_multiset(std::int64_t p, std::int64_t q) {
    std::vector<Rational> out = *d_table(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

bool lens_homeo(const LensSpace& a, const LensSpace& b, bool oriented) {
    if (a.p() != b.p()) {
        return false;
    }
    const std::int64_t p = a.p();
    if (p <= 2) {
        return true;
    }
    auto oriented_match = [p](std::int64_t q1, std::int64_t q2) {
        return mod(q1 - q2, p) == 0 || mod(q1 * q2, p) == 1;
    };
    if (oriented_match(a.q(), b.q())) {
        return true;
    }
    return !oriented && oriented_match(a.q(), b.reversed().q());
}

bool d_bound_holds(std::int64_t p, std::int64_t q) {
    const Rational bound(p - 1, 4);
    const auto table = d_table(p, q);
    return std::all_of(table->begin(), table->end(), [&](const Rational& d) { return abs(d) <= bound; });
}

}  // namespace slopekit
