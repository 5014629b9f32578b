#include "ddc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "ddc/bounds.hpp"
#include "ddc/enumerate.hpp"

namespace ddc {

Word apply_signed_permutation(const Word& w, const std::vector<int>& perm, const std::vector<int>& sign) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (Letter l : w.letters()) {
        const int i = (l < 0 ? -l : l) - 1;
        const int image = sign[static_cast<std::size_t>(i)] * perm[static_cast<std::size_t>(i)];
        out.push_back(l < 0 ? -image : image);
    }
    return Word::from_reduced(std::move(out));
}

bool orbit_minimal(const Word& w, int rank) {
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> sign(static_cast<std::size_t>(rank));
    do {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rank); ++mask) {
            for (int i = 0; i < rank; ++i) sign[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
            if (apply_signed_permutation(w, perm, sign) < w) return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

bool verify_witness(const DdcSet& witness, int d, const Guards& guards) {
    if (witness.empty()) return true;
    return is_ddc(witness, guards) && diameter(witness) <= static_cast<std::size_t>(d);
}

namespace {

using Clock = std::chrono::steady_clock;

// Candidate space shared read-only by all workers.
struct Space {
    std::vector<Word> words;
    std::vector<char> close;            // close[i*K+j]: dist <= d
    std::vector<std::uint32_t> diff;    // diff[i*K+j]: id of words[i]⁻¹·words[j]
    std::size_t diff_count = 0;
    std::size_t cap = 0;                // no DDC can be larger than this

    std::size_t k() const { return words.size(); }
};

Space build_space(const SearchConfig& cfg, const Guards& guards) {
    Space s;
    const auto radius = static_cast<std::size_t>((cfg.d + 1) / 2);
    s.words = ball_words(cfg.ctx, radius, guards);
    const std::size_t k = s.words.size();
    if (static_cast<std::uint64_t>(k) * k > guards.max_pairs) {
        throw Error(ErrorCode::ResourceLimit, "candidate pair table exceeds the pair budget");
    }
    s.close.assign(k * k, 0);
    s.diff.assign(k * k, 0);
    std::unordered_map<Word, std::uint32_t, WordHash> ids;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            s.close[i * k + j] = dist(s.words[i], s.words[j]) <= static_cast<std::size_t>(cfg.d);
            if (i == j) continue;
            auto [it, inserted] = ids.try_emplace(right_difference(s.words[i], s.words[j]),
                                                  static_cast<std::uint32_t>(ids.size()));
            s.diff[i * k + j] = it->second;
        }
    }
    s.diff_count = ids.size();

    BigInt cap = elementary_bound(cfg.ctx, cfg.d);
    cap = std::min(cap, max_subset_size(cfg.ctx, cfg.d));
    cap = std::min(cap, BigInt(k));
    s.cap = cap.convert_to<std::size_t>();
    return s;
}

struct Shared {
    std::atomic<std::size_t> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<bool> capped{false};
    std::uint64_t node_budget = 0;
    Clock::time_point deadline;
};

class Worker {
public:
    Worker(const Space& space, Shared& shared, bool strict_shared)
        : space_(space), shared_(shared), strict_shared_(strict_shared), used_(space.diff_count, 0) {}

    // Explores all sets whose smallest element is `root`; returns the first
    // largest set in depth-first order.
    std::vector<std::uint32_t> run(std::uint32_t root) {
        local_best_.clear();
        chosen_.clear();
        std::vector<std::uint32_t> rest;
        for (std::uint32_t c = root + 1; c < space_.k(); ++c) {
            if (space_.close[root * space_.k() + c]) rest.push_back(c);
        }
        chosen_.push_back(root);
        dfs(rest);
        chosen_.pop_back();
        return local_best_;
    }

private:
    const Space& space_;
    Shared& shared_;
    bool strict_shared_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint32_t> chosen_;
    std::vector<std::uint32_t> local_best_;
    std::vector<std::uint32_t> marked_;

    bool stopped() const { return shared_.out_of_budget.load() || shared_.capped.load(); }

    bool prune(std::size_t bound) const {
        if (bound <= local_best_.size()) return true;
        const std::size_t global = shared_.best.load();
        return strict_shared_ ? bound < global : bound <= global;
    }

    void record() {
        if (chosen_.size() <= local_best_.size()) return;
        local_best_ = chosen_;
        std::size_t cur = shared_.best.load();
        while (chosen_.size() > cur && !shared_.best.compare_exchange_weak(cur, chosen_.size())) {
        }
        if (chosen_.size() >= space_.cap) shared_.capped.store(true);
    }

    bool tick() {
        const std::uint64_t n = shared_.nodes.fetch_add(1) + 1;
        if (n > shared_.node_budget) shared_.out_of_budget.store(true);
        if ((n & 1023) == 0 && Clock::now() > shared_.deadline) shared_.out_of_budget.store(true);
        return !stopped();
    }

    // Marks the differences between c and every chosen element; on a clash
    // rolls back and returns false.
    bool try_add(std::uint32_t c, std::size_t& mark_start) {
        const std::size_t k = space_.k();
        mark_start = marked_.size();
        for (std::uint32_t s : chosen_) {
            for (std::uint32_t id : {space_.diff[s * k + c], space_.diff[c * k + s]}) {
                if (used_[id]) {
                    undo(mark_start);
                    return false;
                }
                used_[id] = 1;
                marked_.push_back(id);
            }
        }
        return true;
    }

    void undo(std::size_t mark_start) {
        while (marked_.size() > mark_start) {
            used_[marked_.back()] = 0;
            marked_.pop_back();
        }
    }

    bool admissible(std::uint32_t c) const {
        const std::size_t k = space_.k();
        for (std::uint32_t s : chosen_) {
            if (used_[space_.diff[s * k + c]] || used_[space_.diff[c * k + s]]) return false;
        }
        return true;
    }

    void dfs(const std::vector<std::uint32_t>& rest) {
        if (!tick()) return;
        record();
        if (stopped()) return;
        const std::size_t k = space_.k();
        for (std::size_t idx = 0; idx < rest.size(); ++idx) {
            if (prune(chosen_.size() + rest.size() - idx) || stopped()) return;
            const std::uint32_t c = rest[idx];
            std::size_t mark = 0;
            if (!try_add(c, mark)) continue;
            chosen_.push_back(c);
            std::vector<std::uint32_t> next;
            next.reserve(rest.size() - idx);
            for (std::size_t t = idx + 1; t < rest.size(); ++t) {
                const std::uint32_t o = rest[t];
                if (space_.close[c * k + o] && admissible(o)) next.push_back(o);
            }
            if (!prune(chosen_.size() + next.size())) dfs(next);
            chosen_.pop_back();
            undo(mark);
        }
    }
};

}  // namespace

SearchResult max_ddc_exact(const SearchConfig& cfg, const Guards& guards) {
    if (cfg.d < 1) throw Error(ErrorCode::BadDiameter, "search needs d >= 1");
    if (cfg.node_budget == 0 || cfg.time_budget_seconds <= 0) {
        throw Error(ErrorCode::BadParameter, "budgets must be positive");
    }
    const auto start = Clock::now();
    const Space space = build_space(cfg, guards);

    Shared shared;
    shared.node_budget = cfg.node_budget;
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(cfg.time_budget_seconds));

    std::vector<std::uint32_t> roots;
    for (std::uint32_t i = 0; i < space.k(); ++i) {
        if (!cfg.symmetry_pruning || orbit_minimal(space.words[i], cfg.ctx.rank())) roots.push_back(i);
    }

    std::vector<std::vector<std::uint32_t>> per_root(roots.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(roots.size())));
    if (workers == 1) {
        Worker w(space, shared, false);
        for (std::size_t r = 0; r < roots.size() && !shared.out_of_budget && !shared.capped; ++r) {
            per_root[r] = w.run(roots[r]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                Worker w(space, shared, true);
                for (std::size_t r = next.fetch_add(1); r < roots.size(); r = next.fetch_add(1)) {
                    if (shared.out_of_budget || shared.capped) break;
                    per_root[r] = w.run(roots[r]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Largest size wins; among equals the lowest root, which is the first
    // maximum in sequential depth-first order.
    std::size_t pick = 0;
    for (std::size_t r = 1; r < per_root.size(); ++r) {
        if (per_root[r].size() > per_root[pick].size()) pick = r;
    }
    SearchResult result;
    std::vector<Word> members;
    if (!per_root.empty()) {
        for (auto i : per_root[pick]) members.push_back(space.words[i]);
    }
    result.size = members.size();
    result.witness = DdcSet(cfg.ctx, std::move(members));
    result.proven_optimal = shared.capped.load() || !shared.out_of_budget.load();
    result.nodes = shared.nodes.load();
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

}  // namespace ddc
