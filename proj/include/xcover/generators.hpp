#pragma once

#include <cstdint>
#include <random>

#include "xcover/bigraph.hpp"

namespace xcover {

// Unbiased integer in [0, n), portable across platforms (the standard
// distributions are not pinned down, the mt19937_64 stream is).
uint64_t uniform_below(std::mt19937_64& rng, uint64_t n);

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng);

// The two-parameter family on X = {x_1..x_n}, Y = {y_1..y_n} with
// x_i y_j an edge iff i <= k or j <= k (1-based). Requires 1 <= k <= n.
BiGraph gen_fam(int n, int k);

// A single cycle of the given even length >= 4.
BiGraph gen_cycle(int length);

// Random d-regular bigraph on n+n vertices via the pairing model,
// retried until simple. Requires 1 <= d <= n.
BiGraph gen_random_regular(int n, int d, uint64_t seed);

// Random forest on n vertices; acyclic for every seed.
BiGraph gen_random_forest(int n, uint64_t seed);

// Each of the nx*ny potential edges present independently with probability p.
BiGraph gen_random_bigraph(int nx, int ny, double p, uint64_t seed);

}  // namespace xcover
