#pragma once

#include <vector>

#include "xcover/bigraph.hpp"

namespace xcover {

// Witness that a subset S of X attains deficiency |S| - |Lambda(S)|, where
// Lambda(S) is the set of Y vertices with at least two neighbors in S.
struct DeficiencyCertificate {
  std::vector<int> subset;  // sorted X indices
  std::vector<int> lambda;  // sorted Y indices, = Lambda(subset)
  int value = 0;            // |subset| - |lambda|; may be negative for a candidate
};

// A subset S of X with Lambda(S) empty.
struct LambdaIndependentSet {
  std::vector<int> subset;  // sorted X indices
};

// Y vertices with >= 2 neighbors in s (s: set of X indices, deduplicated).
std::vector<int> lambda_set(const BiGraph& g, const std::vector<int>& s);

// Certificate for a specific subset (not necessarily a maximizer).
DeficiencyCertificate deficiency_of(const BiGraph& g, const std::vector<int>& s);

// Exact maximum deficiency over all subsets of X, with the lexicographically
// smallest maximizing subset. Branch and bound; throws errc::cap when
// x_count exceeds the cap.
DeficiencyCertificate max_deficiency(const BiGraph& g, int cap = 30);

// Exact maximum Lambda-independent subset of X (no two members share a
// neighbor), lexicographically smallest among maximum ones. Same cap rule.
LambdaIndependentSet alpha_lambda(const BiGraph& g, int cap = 30);

// A Lambda-independent set as a deficiency certificate: Lambda is empty and
// the value equals the set size.
DeficiencyCertificate certificate_for(const BiGraph& g, const LambdaIndependentSet& s);

}  // namespace xcover
