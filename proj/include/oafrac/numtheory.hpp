#pragma once

#include <cstdint>
#include <vector>

#include "oafrac/wideint.hpp"

namespace oafrac {

/// Ordered list of factor orders s_1..s_k. Positions are factor identities,
/// so [6,2,4] and [6,4,2] are different specs. Orders of 1 are rejected:
/// a one-level factor degenerates every size bound.
class FactorSpec {
public:
    explicit FactorSpec(std::vector<int> orders);

    int factor_count() const { return static_cast<int>(orders_.size()); }
    int order(int i) const { return orders_[i]; }  // 0-based
    const std::vector<int>& orders() const { return orders_; }

    /// s_1 * ... * s_k, the size of the complete factorial design.
    Wide product() const;

    bool operator==(const FactorSpec&) const = default;

private:
    std::vector<int> orders_;
};

/// The full ladder of size bounds L_1..L_k together with the threshold d.
/// The ladder is strictly increasing below d and constant from d on;
/// consecutive entries always divide each other.
struct BoundProfile {
    std::vector<Wide> levels;  // levels[t-1] = L_t
    int threshold_d = 0;

    Wide level(int t) const { return levels[t - 1]; }
};

/// prime^exponent is the largest power of `prime` dividing some integer.
struct PrimeOrder {
    std::uint64_t prime = 0;
    int exponent = 0;
};

/// Least common multiple of a nonempty list of positive integers.
Wide lcm_set(const std::vector<std::uint64_t>& values);

/// Largest f with p^f | b. Requires p prime and b >= 1.
int ord_p(std::uint64_t p, std::uint64_t b);

PrimeOrder prime_order(std::uint64_t p, std::uint64_t b);

/// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// lcm of the n products that each leave one input out. Evaluated two ways
/// (directly, and as product/gcd); a disagreement would be an internal bug
/// and throws std::logic_error. Requires n >= 2 and all inputs >= 1.
Wide lcm_of_leave_one_out_products(const std::vector<std::uint64_t>& values);

/// L_t: lcm over all size-t subsets I of prod_{i in I} s_i.
Wide compute_L(const FactorSpec& spec, int t);

/// Largest subset size whose factor orders share a common divisor > 1.
/// 1 iff the orders are pairwise coprime, k iff gcd(s_1..s_k) > 1.
int compute_d(const FactorSpec& spec);

BoundProfile bound_profile(const FactorSpec& spec);

/// True iff L_t < L_k (equivalently t < d): a strength-t array smaller than
/// the complete design is not ruled out by the divisibility bound.
bool proper_fraction_feasible(const FactorSpec& spec, int t);

}  // namespace oafrac
