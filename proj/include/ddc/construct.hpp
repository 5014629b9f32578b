#pragma once

// Explicit and randomized DDC constructions.
//
// mirror: D = { w·rev(w) : |w| = d/4 }, a DDC inside S_{d/2}(e).
//
// random: V = S_{d/3-γ}(e), W = S_{d/6+γ}(e). Every v ∈ V is extended by a
// uniformly random w_v ∈ W with v·w_v reduced; repeated differences among the
// resulting elements ("bad events") are then repaired by deleting elements.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddc/bigint.hpp"
#include "ddc/check.hpp"
#include "ddc/word.hpp"

namespace ddc {

DdcSet mirror(const GroupCtx& ctx, int d, const Guards& guards = {});

/// Smallest integer γ with (1/3)·log_{2n-1}(d/3) <= γ, decided exactly.
int choose_gamma(const GroupCtx& ctx, int d);

inline constexpr const char* kGeneratorName = "splitmix64, one stream per V index, one draw per letter";

struct RandomPlan {
    GroupCtx ctx{2};
    int d = 0;
    int gamma = 0;
    int v_radius = 0;  // d/3 - γ
    int w_radius = 0;  // d/6 + γ
    std::uint64_t seed = 0;
};

/// Validates d ≡ 0 (mod 6), rank >= 2, radii >= 1 and the γ interval.
/// When `gamma` is empty, choose_gamma decides it.
RandomPlan make_plan(const GroupCtx& ctx, int d, std::uint64_t seed, std::optional<int> gamma = std::nullopt);

struct CandidateEntry {
    Word prefix;   // v ∈ V
    Word tail;     // w_v
    Word element;  // v·w_v
};

/// The random set before repair, entries in canonical order of their prefix.
struct Candidate {
    RandomPlan plan;
    std::vector<CandidateEntry> entries;

    std::vector<Word> elements() const;
};

/// Number of reduced extensions of length w_radius available to each v.
BigInt extensions_per_prefix(const RandomPlan& plan);

/// Draws w_v for the v with canonical index `index`. The stream depends only
/// on (seed, index) and consumes exactly w_radius outputs.
Word draw_tail(const RandomPlan& plan, std::uint64_t index, const Word& prefix);

Candidate random_candidate(const RandomPlan& plan, const Guards& guards = {});

/// A repeated difference (u w_u)⁻¹(v w_v) = (x w_x)⁻¹(y w_y) among four
/// distinct entries; k is the length of the common prefix of u and v.
struct BadEvent {
    Word u, v, x, y;
    std::size_t k = 0;
    std::array<std::uint32_t, 4> index{};  // entry indices of u, v, x, y

    friend bool operator==(const BadEvent&, const BadEvent&) = default;
};

/// Whether the prefix conditions hold for (u, v, x, y) at cancellation k:
/// u, v agree on exactly k letters, so do x, y, and u/x and v/y agree after k.
bool event_conditions_hold(const Word& u, const Word& v, const Word& x, const Word& y, std::size_t k);

/// Each unordered pair {(u,v),(x,y)} of colliding ordered pairs is reported
/// once, sorted by difference and then by entry index.
std::vector<BadEvent> detect_bad_events(const Candidate& candidate, const Guards& guards = {});

struct RepairResult {
    DdcSet set;
    std::vector<Word> removed;
    bool verified = false;
};

/// Greedy deletion: repeatedly drop the element in the most unresolved
/// events (ties to the canonically smallest word), then re-verify.
RepairResult repair(const Candidate& candidate, const std::vector<BadEvent>& events, const Guards& guards = {});

struct LowerResult {
    DdcSet set;
    int d = 0;
    int d_effective = 0;
    int gamma = 0;
    std::uint64_t seed = 0;
    std::size_t v_size = 0;
    std::size_t events = 0;
    std::size_t removed = 0;
    std::size_t diameter = 0;
    bool verified = false;
};

/// choose_gamma -> random_candidate -> detect_bad_events -> repair, run at
/// d' = 6·floor(d/6).
LowerResult construct_lower(const GroupCtx& ctx, int d, std::uint64_t seed, const Guards& guards = {});

}  // namespace ddc
