#pragma once

// Reduced words in the free group F_n.
//
// Letters are signed integers: +i is the generator x_i, -i its inverse. The
// canonical order on letters is numeric (-n < ... < -1 < 1 < ... < n), and
// words are ordered shortlex: shorter first, then lexicographically.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddc/error.hpp"

namespace ddc {

using Letter = std::int32_t;

class Word;

/// Rank of the free group. Scopes letter validation and parsing.
class GroupCtx {
public:
    explicit GroupCtx(int rank);

    int rank() const noexcept { return rank_; }
    int alphabet_size() const noexcept { return 2 * rank_; }

    bool valid(Letter l) const noexcept { return l != 0 && l >= -rank_ && l <= rank_; }

    /// Free reduction of an arbitrary letter sequence. Throws InvalidLetter.
    Word reduce(std::span<const Letter> raw) const;
    Word reduce(std::initializer_list<Letter> raw) const;

    /// Accepts only input that is already reduced; throws NotReduced otherwise.
    Word word(std::span<const Letter> letters) const;
    Word word(std::initializer_list<Letter> letters) const;

    /// The generators x_1..x_n followed by their inverses, in canonical order.
    std::vector<Word> generators_and_inverses() const;

    friend bool operator==(const GroupCtx&, const GroupCtx&) = default;

private:
    int rank_;
};

class Word {
public:
    Word() = default;

    /// Caller guarantees `letters` is reduced; no validation against a rank.
    static Word from_reduced(std::vector<Letter> letters);

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter back() const { return letters_.back(); }

    /// Largest |letter| appearing in the word (0 for the identity).
    int max_generator() const noexcept;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::vector<Letter> letters_;
};

/// Single-scan reducedness test.
bool is_reduced(std::span<const Letter> letters) noexcept;

/// Letters of u that cancel against the start of v in the product u·v.
std::size_t cancellation_length(const Word& u, const Word& v) noexcept;

/// Longest common prefix of two words.
std::size_t common_prefix(const Word& a, const Word& b) noexcept;

Word mul(const Word& u, const Word& v);
Word inv(const Word& w);
Word rev(const Word& w);

/// First `len` letters (clamped to the word length).
Word prefix(const Word& w, std::size_t len);
/// Letters from position `start` onward.
Word suffix_from(const Word& w, std::size_t start);

/// Cayley-graph distance, |g|+|h|-2·lcp(g,h).
std::size_t dist(const Word& g, const Word& h) noexcept;

/// The left difference g·h⁻¹ and right difference g⁻¹·h.
inline Word right_difference(const Word& g, const Word& h) { return mul(inv(g), h); }
inline Word left_difference(const Word& g, const Word& h) { return mul(g, inv(h)); }

// 128-bit fingerprint of a letter sequence. Equal words always share a
// fingerprint; users confirm matches letter by letter.
struct Fingerprint {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

class FingerprintBuilder {
public:
    void push(Letter l) noexcept;
    Fingerprint finish() const noexcept;

private:
    std::uint64_t a_ = 0x243f6a8885a308d3ULL;
    std::uint64_t b_ = 0x13198a2e03707344ULL;
    std::uint64_t n_ = 0;
};

Fingerprint fingerprint(const Word& w) noexcept;

/// Fingerprint of the reduced form of g⁻¹·h without materializing it.
Fingerprint difference_fingerprint(const Word& g, const Word& h) noexcept;

/// Canonical text: signed integers separated by single spaces, `e` for identity.
std::string to_string(const Word& w);
/// Compact text for rank <= 26: `a` = x_1, `A` = x_1⁻¹; `e` for identity.
std::string to_compact_string(const Word& w);

/// Accepts either text form. Throws ParseError / InvalidLetter / NotReduced.
Word parse_word(std::string_view text, const GroupCtx& ctx);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept { return fingerprint(w).lo; }
};

}  // namespace ddc
