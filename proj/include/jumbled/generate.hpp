#pragma once

#include <cstddef>
#include <random>
#include <string>

namespace jumbled {

using Rng = std::mt19937_64;

// Independent fair coin per character.
std::string random_text(std::size_t length, Rng& rng);

// Alternating runs with lengths drawn from Geometric(p) on {1, 2, ...},
// first letter a fair coin; truncated to `length`.
std::string geometric_run_text(std::size_t length, double p, Rng& rng);

// Exactly `runs` maximal runs (1 <= runs <= length), first letter a fair
// coin, run lengths a uniformly random composition of `length`.
std::string text_with_runs(std::size_t length, std::size_t runs, Rng& rng);

}  // namespace jumbled
