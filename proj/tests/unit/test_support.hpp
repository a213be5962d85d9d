#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "oafrac/numtheory.hpp"

namespace doctest {
template <>
struct StringMaker<unsigned __int128> {
    static String convert(unsigned __int128 v) { return oafrac::to_string(v).c_str(); }
};
}  // namespace doctest

namespace testutil {

/// Random spec in the property-test regime: k <= max_k, 2 <= s_i <= max_s.
inline oafrac::FactorSpec random_spec(std::mt19937_64& rng, int max_k = 6, int max_s = 12) {
    int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_k));
    std::vector<int> orders(static_cast<size_t>(k));
    for (auto& s : orders) s = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_s - 1));
    return oafrac::FactorSpec(orders);
}

}  // namespace testutil
