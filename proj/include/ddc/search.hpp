#pragma once

// Exact m(n,d) for small (n, d) by depth-first branch and bound over the
// ball B_{ceil(d/2)}(e). Any DDC of diameter <= d can be translated into this
// ball, so the search is exhaustive when it finishes inside its budgets.

#include <cstdint>
#include <vector>

#include "ddc/check.hpp"
#include "ddc/word.hpp"

namespace ddc {

struct SearchConfig {
    GroupCtx ctx{2};
    int d = 1;
    std::uint64_t node_budget = 100'000'000;
    double time_budget_seconds = 300.0;
    bool symmetry_pruning = true;
    unsigned threads = 1;
};

struct SearchResult {
    std::size_t size = 0;
    DdcSet witness{GroupCtx{2}};
    bool proven_optimal = false;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// When a budget runs out the best set found so far is returned with
/// proven_optimal = false.
SearchResult max_ddc_exact(const SearchConfig& cfg, const Guards& guards = {});

/// is_ddc(witness) and diameter(witness) <= d. The empty set passes.
bool verify_witness(const DdcSet& witness, int d, const Guards& guards = {});

/// Image of a word under a signed permutation of the generators: letter
/// ±i maps to ±sign[i-1]·perm[i-1].
Word apply_signed_permutation(const Word& w, const std::vector<int>& perm, const std::vector<int>& sign);

/// True when no signed generator permutation maps w to a smaller word.
bool orbit_minimal(const Word& w, int rank);

}  // namespace ddc
