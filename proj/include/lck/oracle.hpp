#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lck/poly.hpp"

namespace lck {

struct Witness {
    std::vector<std::pair<std::string, Rational>> point;  // sorted by symbol name
    Rational value;
};

struct OracleResult {
    bool all_zero = true;
    std::uint64_t points = 0;
    // Every symbol received more points than its degree, so the verdict is a proof.
    bool certified = false;
    std::optional<Witness> witness;
};

struct OracleOptions {
    unsigned count = 0;  // points per symbol; 0 means (degree + 1) per symbol
    std::uint64_t seed = 0;
    std::uint64_t max_grid = 4'000'000;
};

// Evaluates the sum of `terms` on a grid of integer points without forming the sum symbolically.
OracleResult evaluation_oracle(std::span<const Poly> terms, const OracleOptions& opts = {});
bool evaluation_oracle(const Poly& p, unsigned count, std::uint64_t seed = 0);

// A point where p is nonzero, searched over a seeded sequence. Empty for the zero polynomial.
std::optional<Witness> find_witness(const Poly& p, std::uint64_t seed = 0);

}  // namespace lck
