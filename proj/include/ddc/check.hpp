#pragma once

// Distinct-difference checking, diameters, recentering and the per-level
// suffix-set condition for subsets of a sphere.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ddc/word.hpp"

namespace ddc {

/// A finite set of reduced words, deduplicated and held in canonical order.
class DdcSet {
public:
    explicit DdcSet(GroupCtx ctx) : ctx_(ctx) {}
    DdcSet(GroupCtx ctx, std::vector<Word> elements);

    const GroupCtx& ctx() const noexcept { return ctx_; }
    const std::vector<Word>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(const Word& w) const;

    /// Shells D ∩ S_j(e), keyed by j; only non-empty shells appear.
    std::map<std::size_t, std::vector<Word>> shells() const;
    /// True when every element has the same length.
    bool equi_length() const noexcept;

    friend bool operator==(const DdcSet&, const DdcSet&) = default;

private:
    GroupCtx ctx_;
    std::vector<Word> elements_;
};

struct OrderedPair {
    Word g;
    Word h;
    friend bool operator==(const OrderedPair&, const OrderedPair&) = default;
    friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

/// Every ordered pair (g, h), g != h, whose difference g⁻¹h equals `difference`.
struct CollisionClass {
    Word difference;
    std::vector<OrderedPair> pairs;
};

/// Index form of a collision class over an element list.
struct IndexedCollision {
    Word difference;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

/// Groups the ordered differences of `elements` and returns every value that
/// occurs at least twice. Classes are sorted by difference, pairs by index.
/// Throws ResourceLimit when m(m-1) exceeds guards.max_pairs.
std::vector<IndexedCollision> repeated_differences(std::span<const Word> elements, const Guards& guards = {});

bool is_ddc(const DdcSet& d, const Guards& guards = {});
std::vector<CollisionClass> find_repeats(const DdcSet& d, const Guards& guards = {});

/// Maximum pairwise distance; throws EmptySet.
std::size_t diameter(const DdcSet& d);

DdcSet inv_set(const DdcSet& d);
bool is_left_ddc(const DdcSet& d, const Guards& guards = {});
std::size_t left_diameter(const DdcSet& d);

struct Recentered {
    Word center;
    DdcSet set;
};

/// Translates D by center⁻¹ so that it lies in B_{ceil(diam/2)}(e). The centre
/// sits floor(diam/2) along the geodesic of the canonically smallest pair
/// realizing the diameter.
Recentered recenter(const DdcSet& d);

/// For a set inside S_r(e) and 0 <= k < r: prefix x of length k maps to D_x.
std::map<Word, std::vector<Word>> suffix_sets(const DdcSet& d, std::size_t k);

/// Two distinct prefixes of equal length sharing two suffixes.
struct SphereViolation {
    std::size_t level = 0;
    Word x;
    Word y;
    Word z;
    Word w;
};

/// Checks |D_x ∩ D_y| <= 1 over all levels 1..r-1 for D inside S_r(e); returns
/// the first violation in canonical order, if any. Throws NotEquiLength.
std::optional<SphereViolation> sphere_condition_violation(const DdcSet& d);
bool sphere_condition_check(const DdcSet& d);

}  // namespace ddc
