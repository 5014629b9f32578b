#include "ddc/check.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace ddc {

DdcSet::DdcSet(GroupCtx ctx, std::vector<Word> elements) : ctx_(ctx), elements_(std::move(elements)) {
    for (const Word& w : elements_) {
        if (w.max_generator() > ctx_.rank()) {
            throw Error(ErrorCode::InvalidLetter, "word " + to_string(w) + " outside rank " +
                                                      std::to_string(ctx_.rank()));
        }
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool DdcSet::contains(const Word& w) const {
    return std::binary_search(elements_.begin(), elements_.end(), w);
}

std::map<std::size_t, std::vector<Word>> DdcSet::shells() const {
    std::map<std::size_t, std::vector<Word>> out;
    for (const Word& w : elements_) out[w.length()].push_back(w);
    return out;
}

bool DdcSet::equi_length() const noexcept {
    return elements_.empty() || elements_.front().length() == elements_.back().length();
}

namespace {

struct DifferenceEntry {
    Fingerprint fp;
    std::uint32_t i;
    std::uint32_t j;
};

std::vector<DifferenceEntry> difference_entries(std::span<const Word> elements, const Guards& guards) {
    const std::uint64_t m = elements.size();
    if (m > 0xffffffffULL) throw Error(ErrorCode::ResourceLimit, "set too large to index");
    const std::uint64_t pairs = m < 2 ? 0 : m * (m - 1);
    if (pairs > guards.max_pairs) {
        throw Error(ErrorCode::ResourceLimit, std::to_string(pairs) + " ordered pairs exceed the pair budget " +
                                                  std::to_string(guards.max_pairs));
    }
    std::vector<DifferenceEntry> entries(pairs);
    // Entry (i, j) lives at a fixed slot, so the layout is independent of
    // the number of workers.
    auto fill = [&](std::uint64_t from, std::uint64_t to) {
        for (std::uint64_t i = from; i < to; ++i) {
            std::uint64_t slot = i * (m - 1);
            for (std::uint64_t j = 0; j < m; ++j) {
                if (i == j) continue;
                entries[slot++] = {difference_fingerprint(elements[i], elements[j]),
                                   static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(guards.threads, static_cast<unsigned>(m)));
    if (workers == 1 || m < 64) {
        fill(0, m);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back(fill, m * t / workers, m * (t + 1) / workers);
        }
        for (auto& th : pool) th.join();
    }
    std::sort(entries.begin(), entries.end(), [](const DifferenceEntry& a, const DifferenceEntry& b) {
        if (a.fp != b.fp) return a.fp < b.fp;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return entries;
}

// Splits a run of equal fingerprints into exact classes of size >= 2.
void confirm_run(std::span<const Word> elements, std::span<const DifferenceEntry> run,
                 std::vector<IndexedCollision>& out) {
    std::vector<std::pair<Word, std::pair<std::uint32_t, std::uint32_t>>> exact;
    exact.reserve(run.size());
    for (const auto& e : run) exact.push_back({right_difference(elements[e.i], elements[e.j]), {e.i, e.j}});
    std::sort(exact.begin(), exact.end());
    for (std::size_t a = 0; a < exact.size();) {
        std::size_t b = a + 1;
        while (b < exact.size() && exact[b].first == exact[a].first) ++b;
        if (b - a >= 2) {
            IndexedCollision cls{exact[a].first, {}};
            for (std::size_t t = a; t < b; ++t) cls.pairs.push_back(exact[t].second);
            out.push_back(std::move(cls));
        }
        a = b;
    }
}

}  // namespace

std::vector<IndexedCollision> repeated_differences(std::span<const Word> elements, const Guards& guards) {
    const auto entries = difference_entries(elements, guards);
    std::vector<IndexedCollision> out;
    for (std::size_t a = 0; a < entries.size();) {
        std::size_t b = a + 1;
        while (b < entries.size() && entries[b].fp == entries[a].fp) ++b;
        if (b - a >= 2) confirm_run(elements, std::span(entries).subspan(a, b - a), out);
        a = b;
    }
    std::sort(out.begin(), out.end(),
              [](const IndexedCollision& x, const IndexedCollision& y) { return x.difference < y.difference; });
    return out;
}

bool is_ddc(const DdcSet& d, const Guards& guards) {
    const auto& elements = d.elements();
    const auto entries = difference_entries(elements, guards);
    std::vector<IndexedCollision> scratch;
    for (std::size_t a = 0; a < entries.size();) {
        std::size_t b = a + 1;
        while (b < entries.size() && entries[b].fp == entries[a].fp) ++b;
        if (b - a >= 2) {
            confirm_run(elements, std::span(entries).subspan(a, b - a), scratch);
            if (!scratch.empty()) return false;
        }
        a = b;
    }
    return true;
}

std::vector<CollisionClass> find_repeats(const DdcSet& d, const Guards& guards) {
    const auto& elements = d.elements();
    std::vector<CollisionClass> out;
    for (auto& cls : repeated_differences(elements, guards)) {
        CollisionClass c{std::move(cls.difference), {}};
        // Elements are in canonical order, so index order is canonical order.
        for (auto [i, j] : cls.pairs) c.pairs.push_back({elements[i], elements[j]});
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

struct Extremal {
    std::size_t diameter = 0;
    std::size_t i = 0;
    std::size_t j = 0;
};

Extremal extremal_pair(const DdcSet& d) {
    if (d.empty()) throw Error(ErrorCode::EmptySet, "diameter of an empty set");
    const auto& e = d.elements();
    Extremal best;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const std::size_t dd = dist(e[i], e[j]);
            if (dd > best.diameter) best = {dd, i, j};
        }
    }
    return best;
}

}  // namespace

std::size_t diameter(const DdcSet& d) { return extremal_pair(d).diameter; }

DdcSet inv_set(const DdcSet& d) {
    std::vector<Word> out;
    out.reserve(d.size());
    for (const Word& w : d.elements()) out.push_back(inv(w));
    return DdcSet(d.ctx(), std::move(out));
}

bool is_left_ddc(const DdcSet& d, const Guards& guards) { return is_ddc(inv_set(d), guards); }

std::size_t left_diameter(const DdcSet& d) { return diameter(inv_set(d)); }

Recentered recenter(const DdcSet& d) {
    const Extremal ex = extremal_pair(d);
    const Word& g = d.elements()[ex.i];
    const Word& h = d.elements()[ex.j];
    const Word center = mul(g, prefix(right_difference(g, h), ex.diameter / 2));
    const Word shift = inv(center);
    std::vector<Word> moved;
    moved.reserve(d.size());
    for (const Word& w : d.elements()) moved.push_back(mul(shift, w));
    return {center, DdcSet(d.ctx(), std::move(moved))};
}

namespace {

std::size_t common_length(const DdcSet& d) {
    if (!d.equi_length()) throw Error(ErrorCode::NotEquiLength, "elements have different lengths");
    return d.empty() ? 0 : d.elements().front().length();
}

}  // namespace

std::map<Word, std::vector<Word>> suffix_sets(const DdcSet& d, std::size_t k) {
    const std::size_t r = common_length(d);
    if (!d.empty() && k >= r) throw Error(ErrorCode::BadParameter, "prefix length must be below the radius");
    std::map<Word, std::vector<Word>> out;
    for (const Word& w : d.elements()) out[prefix(w, k)].push_back(suffix_from(w, k));
    return out;
}

std::optional<SphereViolation> sphere_condition_violation(const DdcSet& d) {
    const std::size_t r = common_length(d);
    for (std::size_t k = 1; k < r; ++k) {
        std::map<Word, std::vector<Word>> prefixes_by_suffix;
        for (const Word& w : d.elements()) prefixes_by_suffix[suffix_from(w, k)].push_back(prefix(w, k));
        std::map<std::pair<Word, Word>, Word> first_shared;
        for (const auto& [suffix, prefixes] : prefixes_by_suffix) {
            for (std::size_t a = 0; a < prefixes.size(); ++a) {
                for (std::size_t b = a + 1; b < prefixes.size(); ++b) {
                    auto [it, inserted] = first_shared.try_emplace({prefixes[a], prefixes[b]}, suffix);
                    if (!inserted) return SphereViolation{k, prefixes[a], prefixes[b], it->second, suffix};
                }
            }
        }
    }
    return std::nullopt;
}

bool sphere_condition_check(const DdcSet& d) { return !sphere_condition_violation(d).has_value(); }

}  // namespace ddc
