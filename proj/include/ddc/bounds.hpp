#pragma once

// Closed-form bounds on m(n,d), the largest DDC of diameter at most d in F_n.
//
// Integers are exact. Real-valued bounds are evaluated with MPFR using
// directed rounding on every operation, so a reported upper bound is never
// below the true value and a reported lower bound is never above it.

#include <optional>
#include <string>

#include "ddc/bigint.hpp"
#include "ddc/word.hpp"
#include "json.hpp"

namespace ddc {

enum class Direction { Upper, Lower, Exact };

std::string_view to_string(Direction d);

struct BoundValue {
    Direction direction = Direction::Exact;
    std::string decimal;  // 40 significant digits, rounded toward `direction`
    double value = 0.0;   // nearest double in the safe direction
    std::string rounding;
    bool vacuous = false;  // lower bounds below 1 carry no information
};

/// Largest m with m(m-1) <= |B_d(e)|.
BigInt elementary_bound(const GroupCtx& ctx, int d);

/// Largest subset of F_n with diameter <= d: a ball of radius d/2 for even d,
/// two adjacent balls of radius floor(d/2) for odd d.
BigInt max_subset_size(const GroupCtx& ctx, int d);

/// 2n(4n²-3n+1) / ((2n-1)^(1/3)·((2n-1)^(2/3)-1)).
BoundValue thm_constant(const GroupCtx& ctx);
/// thm_constant·(2n-1)^(d/3). Needs rank >= 2, d >= 1.
BoundValue thm_upper_bound(const GroupCtx& ctx, int d);
/// The same bound as an exact expression with radicals.
std::string thm_upper_expression(const GroupCtx& ctx, int d);

/// (d/3-1)·2n·(2n-1)^(d/3-4γ-1), exact. Needs d ≡ 0 (mod 6), γ >= 1.
BigRational eta_bound_exact(const GroupCtx& ctx, int d, int gamma);
BoundValue eta_bound(const GroupCtx& ctx, int d, int gamma);

/// 2n(2n-1)^(d/3 - (4/3)log_{2n-1}(d/3) - 5) for even d; odd d uses d-1.
/// Needs d >= 6.
BoundValue lower_bound_formula(const GroupCtx& ctx, int d);

/// 2n(2n-1)^(d/4-1), the size of the mirror construction (4 | d, d >= 4).
BigInt mirror_size(const GroupCtx& ctx, int d);

struct BoundsReport {
    int n = 0;
    int d = 0;
    BigInt ball;
    BigInt elementary;
    BigInt subset_max;
    std::optional<BoundValue> thm_constant;
    std::optional<BoundValue> thm_upper;
    std::optional<std::string> thm_expression;
    std::optional<BoundValue> lower_formula;
    std::optional<int> gamma;
    std::optional<BoundValue> eta;
    std::optional<BigInt> mirror_size;
};

/// Every bound that is defined at (n, d). `gamma` defaults to choose_gamma
/// when d ≡ 0 (mod 6).
BoundsReport bounds_report(const GroupCtx& ctx, int d, std::optional<int> gamma = std::nullopt);

nlohmann::json to_json(const BoundValue& b);
nlohmann::json to_json(const BoundsReport& r);
/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json big_to_json(const BigInt& v);

}  // namespace ddc
