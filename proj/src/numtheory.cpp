#include "oafrac/numtheory.hpp"

#include <numeric>

#include "oafrac/detail/subsets.hpp"
#include "oafrac/errors.hpp"

namespace oafrac {

FactorSpec::FactorSpec(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw UsageError("factor spec needs at least one factor");
    for (int s : orders_) {
        if (s < 2)
            throw UsageError("factor order " + std::to_string(s) +
                             " is invalid; every order must be at least 2");
    }
}

Wide FactorSpec::product() const {
    Wide p = 1;
    for (int s : orders_) p = checked_mul(p, static_cast<Wide>(s));
    return p;
}

Wide lcm_set(const std::vector<std::uint64_t>& values) {
    if (values.empty()) throw UsageError("lcm of an empty list is undefined");
    Wide acc = 1;
    for (std::uint64_t v : values) {
        if (v == 0) throw UsageError("lcm requires positive integers");
        acc = lcm_wide(acc, static_cast<Wide>(v));
    }
    return acc;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    // Miller-Rabin with the deterministic 64-bit witness set.
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int ord_p(std::uint64_t p, std::uint64_t b) {
    if (p < 2 || !is_prime_u64(p)) throw UsageError("ord_p requires a prime p");
    if (b == 0) throw UsageError("ord_p requires b >= 1");
    int f = 0;
    while (b % p == 0) {
        b /= p;
        ++f;
    }
    return f;
}

PrimeOrder prime_order(std::uint64_t p, std::uint64_t b) { return {p, ord_p(p, b)}; }

Wide lcm_of_leave_one_out_products(const std::vector<std::uint64_t>& values) {
    if (values.size() < 2)
        throw UsageError("leave-one-out lcm needs at least two integers");
    for (std::uint64_t v : values) {
        if (v == 0) throw UsageError("leave-one-out lcm requires positive integers");
    }

    Wide direct = 1;
    for (size_t skip = 0; skip < values.size(); ++skip) {
        Wide prod = 1;
        for (size_t i = 0; i < values.size(); ++i) {
            if (i != skip) prod = checked_mul(prod, static_cast<Wide>(values[i]));
        }
        direct = lcm_wide(direct, prod);
    }

    Wide full = 1;
    Wide g = static_cast<Wide>(values[0]);
    for (std::uint64_t v : values) {
        full = checked_mul(full, static_cast<Wide>(v));
        g = gcd_wide(g, static_cast<Wide>(v));
    }
    Wide via_gcd = full / g;

    if (direct != via_gcd)
        throw std::logic_error("leave-one-out lcm identity violated: " + to_string(direct) +
                               " vs " + to_string(via_gcd));
    return direct;
}

Wide compute_L(const FactorSpec& spec, int t) {
    int k = spec.factor_count();
    if (t < 1 || t > k)
        throw UsageError("strength t=" + std::to_string(t) + " out of range 1.." + std::to_string(k));
    Wide acc = 1;
    auto subset = detail::first_subset(t);
    do {
        Wide prod = 1;
        for (int i : subset) prod = checked_mul(prod, static_cast<Wide>(spec.order(i)));
        acc = lcm_wide(acc, prod);
    } while (detail::next_subset(subset, k));
    return acc;
}

int compute_d(const FactorSpec& spec) {
    int k = spec.factor_count();
    // Scan subset sizes from k downward; the first size with a shared
    // divisor > 1 is d. Size 1 always qualifies (orders are >= 2).
    for (int size = k; size >= 2; --size) {
        auto subset = detail::first_subset(size);
        do {
            std::uint64_t g = 0;
            for (int i : subset) g = std::gcd(g, static_cast<std::uint64_t>(spec.order(i)));
            if (g > 1) return size;
        } while (detail::next_subset(subset, k));
    }
    return 1;
}

BoundProfile bound_profile(const FactorSpec& spec) {
    BoundProfile profile;
    int k = spec.factor_count();
    profile.levels.reserve(static_cast<size_t>(k));
    for (int t = 1; t <= k; ++t) profile.levels.push_back(compute_L(spec, t));
    profile.threshold_d = compute_d(spec);
    return profile;
}

bool proper_fraction_feasible(const FactorSpec& spec, int t) {
    int k = spec.factor_count();
    if (t < 1 || t > k)
        throw UsageError("strength t=" + std::to_string(t) + " out of range 1.." + std::to_string(k));
    return t < compute_d(spec);
}

}  // namespace oafrac
