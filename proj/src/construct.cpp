#include "ddc/construct.hpp"

#include <algorithm>

#include "ddc/enumerate.hpp"

namespace ddc {

DdcSet mirror(const GroupCtx& ctx, int d, const Guards& guards) {
    if (d < 4 || d % 4 != 0) throw Error(ErrorCode::BadDiameter, "mirror needs d divisible by 4, d >= 4");
    if (ctx.rank() < 2) throw Error(ErrorCode::BadParameter, "mirror needs rank >= 2");
    const auto half = static_cast<std::size_t>(d / 4);
    if (sphere_size(ctx, half) > BigInt(guards.max_elements)) {
        throw Error(ErrorCode::ResourceLimit, "mirror set exceeds the element guard");
    }
    std::vector<Word> out;
    for (SphereIter it(ctx, half); !it.done(); it.advance()) {
        std::vector<Letter> letters = it.current();
        letters.insert(letters.end(), it.current().rbegin(), it.current().rend());
        out.push_back(Word::from_reduced(std::move(letters)));
    }
    return DdcSet(ctx, std::move(out));
}

namespace {

void check_randomized_shape(const GroupCtx& ctx, int d) {
    if (d < 6 || d % 6 != 0) throw Error(ErrorCode::BadDiameter, "randomized plan needs d divisible by 6, d >= 6");
    if (ctx.rank() < 2) throw Error(ErrorCode::BadParameter, "randomized plan needs rank >= 2");
}

BigInt q_pow(const GroupCtx& ctx, int e) {
    return boost::multiprecision::pow(BigInt(2 * ctx.rank() - 1), static_cast<unsigned>(e));
}

// (1/3)·log_q(d/3) <= γ  <=>  3·q^(3γ) >= d
bool gamma_at_least_lower(const GroupCtx& ctx, int d, int gamma) {
    return gamma >= 0 && 3 * q_pow(ctx, 3 * gamma) >= d;
}

// γ <= (1/3)·log_q(d/3) + 1  <=>  γ < 1 or 3·q^(3(γ-1)) <= d
bool gamma_at_most_upper(const GroupCtx& ctx, int d, int gamma) {
    return gamma < 1 || 3 * q_pow(ctx, 3 * (gamma - 1)) <= d;
}

}  // namespace

int choose_gamma(const GroupCtx& ctx, int d) {
    check_randomized_shape(ctx, d);
    int gamma = 0;
    while (!gamma_at_least_lower(ctx, d, gamma)) ++gamma;
    if (d / 3 - gamma < 1) throw Error(ErrorCode::BadDiameter, "d too small for the chosen gamma");
    return gamma;
}

RandomPlan make_plan(const GroupCtx& ctx, int d, std::uint64_t seed, std::optional<int> gamma) {
    check_randomized_shape(ctx, d);
    RandomPlan plan;
    plan.ctx = ctx;
    plan.d = d;
    plan.seed = seed;
    plan.gamma = gamma ? *gamma : choose_gamma(ctx, d);
    if (!gamma_at_least_lower(ctx, d, plan.gamma) || !gamma_at_most_upper(ctx, d, plan.gamma)) {
        throw Error(ErrorCode::BadParameter, "gamma " + std::to_string(plan.gamma) +
                                                 " outside [log(d/3)/(3 log(2n-1)), that + 1]");
    }
    plan.v_radius = d / 3 - plan.gamma;
    plan.w_radius = d / 6 + plan.gamma;
    if (plan.v_radius < 1 || plan.w_radius < 1) throw Error(ErrorCode::BadParameter, "radii must be positive");
    return plan;
}

std::vector<Word> Candidate::elements() const {
    std::vector<Word> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.element);
    return out;
}

BigInt extensions_per_prefix(const RandomPlan& plan) { return q_pow(plan.ctx, plan.w_radius); }

namespace {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}
    std::uint64_t operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace

Word draw_tail(const RandomPlan& plan, std::uint64_t index, const Word& prefix) {
    SplitMix64 keyed(plan.seed ^ (index * 0xd1b54a32d192ed03ULL));
    SplitMix64 stream(keyed());
    const int n = plan.ctx.rank();
    std::vector<Letter> tail;
    tail.reserve(static_cast<std::size_t>(plan.w_radius));
    Letter prev = prefix.is_identity() ? 0 : prefix.back();
    for (int pos = 0; pos < plan.w_radius; ++pos) {
        const std::uint64_t choices = prev == 0 ? 2 * n : 2 * n - 1;
        auto pick = static_cast<std::uint64_t>((static_cast<unsigned __int128>(stream()) * choices) >> 64);
        Letter letter = 0;
        for (Letter l = -n; l <= n; ++l) {
            if (l == 0 || l == -prev) continue;
            if (pick-- == 0) {
                letter = l;
                break;
            }
        }
        tail.push_back(letter);
        prev = letter;
    }
    return Word::from_reduced(std::move(tail));
}

Candidate random_candidate(const RandomPlan& plan, const Guards& guards) {
    const auto radius = static_cast<std::size_t>(plan.v_radius);
    if (sphere_size(plan.ctx, radius) > BigInt(guards.max_elements)) {
        throw Error(ErrorCode::ResourceLimit, "|V| exceeds the element guard");
    }
    Candidate cand{plan, {}};
    std::uint64_t index = 0;
    for (SphereIter it(plan.ctx, radius); !it.done(); it.advance(), ++index) {
        Word v = it.word();
        Word w = draw_tail(plan, index, v);
        std::vector<Letter> joined(v.letters().begin(), v.letters().end());
        joined.insert(joined.end(), w.letters().begin(), w.letters().end());
        cand.entries.push_back({std::move(v), std::move(w), Word::from_reduced(std::move(joined))});
    }
    return cand;
}

bool event_conditions_hold(const Word& u, const Word& v, const Word& x, const Word& y, std::size_t k) {
    const std::size_t r = u.length();
    if (v.length() != r || x.length() != r || y.length() != r) return false;
    if (k == 0 || k >= r) return false;
    if (common_prefix(u, v) != k || common_prefix(x, y) != k) return false;
    for (std::size_t i = k; i < r; ++i) {
        if (u[i] != x[i] || v[i] != y[i]) return false;
    }
    return true;
}

std::vector<BadEvent> detect_bad_events(const Candidate& candidate, const Guards& guards) {
    const auto elements = candidate.elements();
    std::vector<BadEvent> events;
    for (const auto& cls : repeated_differences(elements, guards)) {
        for (std::size_t a = 0; a < cls.pairs.size(); ++a) {
            for (std::size_t b = a + 1; b < cls.pairs.size(); ++b) {
                const auto [iu, iv] = cls.pairs[a];
                const auto [ix, iy] = cls.pairs[b];
                if (iu == ix || iu == iy || iv == ix || iv == iy) continue;
                const auto& e = candidate.entries;
                BadEvent ev{e[iu].prefix, e[iv].prefix, e[ix].prefix, e[iy].prefix,
                            common_prefix(e[iu].prefix, e[iv].prefix), {iu, iv, ix, iy}};
                events.push_back(std::move(ev));
            }
        }
    }
    return events;
}

RepairResult repair(const Candidate& candidate, const std::vector<BadEvent>& events, const Guards& guards) {
    const std::size_t m = candidate.entries.size();
    std::vector<std::size_t> degree(m, 0);
    std::vector<char> alive(events.size(), 1);
    std::vector<char> removed(m, 0);
    std::size_t live = events.size();

    auto members = [&](const BadEvent& ev) {
        std::array<std::uint32_t, 4> idx = ev.index;
        std::sort(idx.begin(), idx.end());
        return idx;
    };
    for (const auto& ev : events) {
        for (auto i : members(ev)) ++degree[i];
    }

    RepairResult result{DdcSet(candidate.plan.ctx), {}, false};
    while (live > 0) {
        // Entries are in canonical order, so the first maximum is the
        // canonically smallest word among the tied elements.
        const auto victim = static_cast<std::size_t>(std::max_element(degree.begin(), degree.end()) - degree.begin());
        removed[victim] = 1;
        result.removed.push_back(candidate.entries[victim].element);
        for (std::size_t e = 0; e < events.size(); ++e) {
            if (!alive[e]) continue;
            const auto idx = members(events[e]);
            if (std::find(idx.begin(), idx.end(), victim) == idx.end()) continue;
            alive[e] = 0;
            --live;
            for (auto i : idx) --degree[i];
        }
    }

    std::vector<Word> kept;
    kept.reserve(m - result.removed.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (!removed[i]) kept.push_back(candidate.entries[i].element);
    }
    result.set = DdcSet(candidate.plan.ctx, std::move(kept));
    result.verified = is_ddc(result.set, guards) &&
                      (result.set.empty() || diameter(result.set) <= static_cast<std::size_t>(candidate.plan.d));
    return result;
}

LowerResult construct_lower(const GroupCtx& ctx, int d, std::uint64_t seed, const Guards& guards) {
    if (d < 6) throw Error(ErrorCode::BadDiameter, "randomized construction needs d >= 6");
    const int d_eff = 6 * (d / 6);
    const RandomPlan plan = make_plan(ctx, d_eff, seed);
    const Candidate cand = random_candidate(plan, guards);
    const auto events = detect_bad_events(cand, guards);
    RepairResult fixed = repair(cand, events, guards);

    LowerResult out{std::move(fixed.set), d, d_eff, plan.gamma, seed, cand.entries.size(), events.size(),
                    fixed.removed.size(), 0, fixed.verified};
    out.diameter = out.set.empty() ? 0 : diameter(out.set);
    out.verified = out.verified && out.diameter <= static_cast<std::size_t>(d);
    return out;
}

}  // namespace ddc
