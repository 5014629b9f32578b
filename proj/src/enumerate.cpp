#include "ddc/enumerate.hpp"

namespace ddc {

BigInt sphere_size(const GroupCtx& ctx, std::size_t r) {
    if (r == 0) return 1;
    const BigInt q = 2 * ctx.rank() - 1;
    return BigInt(2 * ctx.rank()) * boost::multiprecision::pow(q, static_cast<unsigned>(r - 1));
}

BigInt ball_size(const GroupCtx& ctx, std::size_t r) {
    BigInt total = 1;
    for (std::size_t i = 1; i <= r; ++i) total += sphere_size(ctx, i);
    return total;
}

SphereIter::SphereIter(const GroupCtx& ctx, std::size_t radius) : rank_(ctx.rank()) {
    letters_.reserve(radius);
    Letter prev = 0;
    for (std::size_t i = 0; i < radius; ++i) {
        prev = smallest_after(prev);
        letters_.push_back(prev);
    }
}

SphereIter::SphereIter(const GroupCtx& ctx, std::size_t radius, Letter first_letter)
    : rank_(ctx.rank()), fixed_first_(true) {
    if (radius == 0) throw Error(ErrorCode::BadParameter, "a fixed first letter needs radius >= 1");
    if (!ctx.valid(first_letter)) throw Error(ErrorCode::InvalidLetter, std::to_string(first_letter));
    letters_.reserve(radius);
    letters_.push_back(first_letter);
    for (std::size_t i = 1; i < radius; ++i) letters_.push_back(smallest_after(letters_.back()));
}

Letter SphereIter::smallest_after(Letter prev) const noexcept {
    const Letter lowest = -rank_;
    if (prev != -lowest) return lowest;
    // prev == rank_, so -rank_ is forbidden.
    return rank_ == 1 ? 1 : lowest + 1;
}

std::optional<Letter> SphereIter::next_letter(Letter current, Letter prev_or_zero) const noexcept {
    Letter next = current;
    while (true) {
        next = next == -1 ? 1 : next + 1;
        if (next > rank_) return std::nullopt;
        if (prev_or_zero == 0 || next != -prev_or_zero) return next;
    }
}

void SphereIter::advance() {
    if (done_) return;
    const std::size_t lowest = fixed_first_ ? 1 : 0;
    for (std::size_t i = letters_.size(); i > lowest; --i) {
        const std::size_t pos = i - 1;
        const Letter prev = pos > 0 ? letters_[pos - 1] : 0;
        if (const auto next = next_letter(letters_[pos], prev)) {
            letters_[pos] = *next;
            for (std::size_t j = pos + 1; j < letters_.size(); ++j) {
                letters_[j] = smallest_after(letters_[j - 1]);
            }
            return;
        }
    }
    done_ = true;
}

std::vector<Letter> sphere_partition(const GroupCtx& ctx) {
    std::vector<Letter> out;
    for (Letter l = -ctx.rank(); l <= ctx.rank(); ++l) {
        if (l != 0) out.push_back(l);
    }
    return out;
}

void for_each_sphere_word(const GroupCtx& ctx, std::size_t r,
                          const std::function<void(std::span<const Letter>)>& fn) {
    for (SphereIter it(ctx, r); !it.done(); it.advance()) fn(it.current());
}

void for_each_ball_word(const GroupCtx& ctx, std::size_t r,
                        const std::function<void(std::span<const Letter>)>& fn) {
    for (std::size_t i = 0; i <= r; ++i) for_each_sphere_word(ctx, i, fn);
}

namespace {

void check_guard(const BigInt& count, const Guards& guards) {
    if (count > BigInt(guards.max_elements)) {
        throw Error(ErrorCode::ResourceLimit,
                    count.str() + " elements exceed the element guard " + std::to_string(guards.max_elements));
    }
}

}  // namespace

std::vector<Word> sphere_words(const GroupCtx& ctx, std::size_t r, const Guards& guards) {
    const BigInt count = sphere_size(ctx, r);
    check_guard(count, guards);
    std::vector<Word> out;
    out.reserve(count.convert_to<std::size_t>());
    for (SphereIter it(ctx, r); !it.done(); it.advance()) out.push_back(it.word());
    return out;
}

std::vector<Word> ball_words(const GroupCtx& ctx, std::size_t r, const Guards& guards) {
    const BigInt count = ball_size(ctx, r);
    check_guard(count, guards);
    std::vector<Word> out;
    out.reserve(count.convert_to<std::size_t>());
    for (std::size_t i = 0; i <= r; ++i) {
        for (SphereIter it(ctx, i); !it.done(); it.advance()) out.push_back(it.word());
    }
    return out;
}

}  // namespace ddc
