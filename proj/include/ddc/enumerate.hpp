#pragma once

// Sizes and streaming enumeration of spheres S_r(e) and balls B_r(e).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ddc/bigint.hpp"
#include "ddc/word.hpp"

namespace ddc {

/// |S_r(e)| = 2n(2n-1)^(r-1) for r >= 1, and 1 for r = 0.
BigInt sphere_size(const GroupCtx& ctx, std::size_t r);
/// |B_r(e)| = 1 + sum of sphere sizes 1..r.
BigInt ball_size(const GroupCtx& ctx, std::size_t r);

// Successor-function iterator over the reduced words of length r in
// lexicographic order. Memory is O(r). An optional first letter restricts the
// iteration to one branch of the tree, which is how S_r is split for
// parallel enumeration.
class SphereIter {
public:
    SphereIter(const GroupCtx& ctx, std::size_t radius);
    SphereIter(const GroupCtx& ctx, std::size_t radius, Letter first_letter);

    bool done() const noexcept { return done_; }
    const std::vector<Letter>& current() const noexcept { return letters_; }
    Word word() const { return Word::from_reduced(letters_); }
    void advance();

    std::size_t radius() const noexcept { return letters_.size(); }

private:
    int rank_;
    bool fixed_first_ = false;
    bool done_ = false;
    std::vector<Letter> letters_;

    Letter smallest_after(Letter prev) const noexcept;
    std::optional<Letter> next_letter(Letter current, Letter prev_or_zero) const noexcept;
};

/// The first-letter prefixes that partition S_r for r >= 1, in canonical order.
std::vector<Letter> sphere_partition(const GroupCtx& ctx);

/// Streams S_r(e) through `fn`.
void for_each_sphere_word(const GroupCtx& ctx, std::size_t r,
                          const std::function<void(std::span<const Letter>)>& fn);
/// Streams B_r(e) shell by shell (shortlex order).
void for_each_ball_word(const GroupCtx& ctx, std::size_t r,
                        const std::function<void(std::span<const Letter>)>& fn);

/// Materialized sphere / ball; throw ResourceLimit beyond guards.max_elements.
std::vector<Word> sphere_words(const GroupCtx& ctx, std::size_t r, const Guards& guards = {});
std::vector<Word> ball_words(const GroupCtx& ctx, std::size_t r, const Guards& guards = {});

}  // namespace ddc
