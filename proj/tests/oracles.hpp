#pragma once

// Reference implementations used only by tests. They deliberately avoid the
// library's arithmetic: words are plain integer vectors and reduction is the
// quadratic "delete a cancelling pair and rescan" procedure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ddc/word.hpp"

namespace oracle {

using Raw = std::vector<int>;

inline Raw naive_reduce(Raw w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == -w[i + 1]) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

inline Raw raw_of(const ddc::Word& w) { return Raw(w.letters().begin(), w.letters().end()); }

inline Raw naive_inverse(const Raw& w) {
    Raw out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

inline Raw naive_product(const Raw& a, const Raw& b) {
    Raw joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    return naive_reduce(joined);
}

inline Raw naive_difference(const Raw& g, const Raw& h) { return naive_product(naive_inverse(g), h); }

/// All words of length r over ±1..±n by brute force, filtered to reduced ones.
inline std::vector<Raw> brute_sphere(int n, std::size_t r) {
    std::vector<int> alphabet;
    for (int l = -n; l <= n; ++l) {
        if (l != 0) alphabet.push_back(l);
    }
    std::vector<Raw> out;
    Raw cur(r, 0);
    std::vector<std::size_t> idx(r, 0);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) cur[i] = alphabet[idx[i]];
        bool reduced = true;
        for (std::size_t i = 1; i < r; ++i) reduced = reduced && cur[i] != -cur[i - 1];
        if (reduced) out.push_back(cur);
        std::size_t pos = r;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < alphabet.size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
        if (r == 0) return out;
    }
}

/// Sort-then-scan over all ordered differences: map difference -> pairs.
inline std::map<Raw, std::vector<std::pair<Raw, Raw>>> naive_repeats(std::vector<Raw> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<std::pair<Raw, std::pair<Raw, Raw>>> all;
    for (const auto& g : set) {
        for (const auto& h : set) {
            if (g != h) all.push_back({naive_difference(g, h), {g, h}});
        }
    }
    std::sort(all.begin(), all.end());
    std::map<Raw, std::vector<std::pair<Raw, Raw>>> out;
    for (std::size_t a = 0; a < all.size();) {
        std::size_t b = a + 1;
        while (b < all.size() && all[b].first == all[a].first) ++b;
        if (b - a >= 2) {
            for (std::size_t t = a; t < b; ++t) out[all[a].first].push_back(all[t].second);
        }
        a = b;
    }
    return out;
}

inline bool naive_is_ddc(const std::vector<Raw>& set) { return naive_repeats(set).empty(); }

inline std::size_t naive_length_of_difference(const Raw& g, const Raw& h) { return naive_difference(g, h).size(); }

inline std::size_t naive_diameter(const std::vector<Raw>& set) {
    std::size_t best = 0;
    for (const auto& g : set) {
        for (const auto& h : set) best = std::max(best, naive_length_of_difference(g, h));
    }
    return best;
}

/// Random reduced word of exactly `len` letters.
inline ddc::Word random_word(std::mt19937_64& rng, int n, std::size_t len) {
    std::uniform_int_distribution<int> pick(1, 2 * n);
    std::vector<ddc::Letter> letters;
    while (letters.size() < len) {
        int v = pick(rng);
        const ddc::Letter l = v <= n ? v : -(v - n);
        if (!letters.empty() && letters.back() == -l) continue;
        letters.push_back(l);
    }
    return ddc::Word::from_reduced(std::move(letters));
}

inline ddc::Word random_word_upto(std::mt19937_64& rng, int n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return random_word(rng, n, len(rng));
}

/// Raw, possibly unreduced letter sequence.
inline std::vector<ddc::Letter> random_raw(std::mt19937_64& rng, int n, std::size_t len) {
    std::uniform_int_distribution<int> pick(1, 2 * n);
    std::vector<ddc::Letter> out;
    for (std::size_t i = 0; i < len; ++i) {
        const int v = pick(rng);
        out.push_back(v <= n ? v : -(v - n));
    }
    return out;
}

/// k distinct random picks from `pool`.
template <class T>
std::vector<T> sample(std::mt19937_64& rng, const std::vector<T>& pool, std::size_t k) {
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<T> out;
    for (std::size_t i = 0; i < k && i < idx.size(); ++i) out.push_back(pool[idx[i]]);
    return out;
}

}  // namespace oracle
