#include "ddc/bounds.hpp"

#include <mpfr.h>

#include <array>
#include <cmath>

#include "ddc/construct.hpp"
#include "ddc/enumerate.hpp"

namespace ddc {

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::Upper: return "upper";
        case Direction::Lower: return "lower";
        case Direction::Exact: return "exact";
    }
    return "exact";
}

namespace {

constexpr mpfr_prec_t kWorkingBits = 256;
constexpr int kDigits = 40;

class Real {
public:
    explicit Real(mpfr_prec_t bits = kWorkingBits) { mpfr_init2(v_, bits); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

private:
    mpfr_t v_;
};

mpfr_rnd_t rounding_for(Direction d) {
    switch (d) {
        case Direction::Upper: return MPFR_RNDU;
        case Direction::Lower: return MPFR_RNDD;
        case Direction::Exact: return MPFR_RNDN;
    }
    return MPFR_RNDN;
}

// Exact conversion: the precision grows with the integer.
void set_exact(Real& out, const BigInt& v) {
    const auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(v.backend().data(), 2)) + 8;
    mpfr_set_prec(out.get(), std::max(bits, kWorkingBits));
    mpfr_set_z(out.get(), v.backend().data(), MPFR_RNDN);
}

BoundValue finish(const Real& x, Direction dir, std::string rounding) {
    BoundValue b;
    b.direction = dir;
    b.rounding = std::move(rounding);
    const mpfr_rnd_t rnd = rounding_for(dir);
    std::array<char, 256> buf{};
    mpfr_snprintf(buf.data(), buf.size(), "%.*R*g", kDigits, rnd, x.get());
    b.decimal = buf.data();
    b.value = mpfr_get_d(x.get(), rnd);
    return b;
}

constexpr const char* kDirected =
    "directed: every MPFR operation rounded toward the bound direction, 256-bit working precision";

BigInt q_of(const GroupCtx& ctx) { return BigInt(2 * ctx.rank() - 1); }

BigInt ipow(const BigInt& base, int e) { return boost::multiprecision::pow(base, static_cast<unsigned>(e)); }

void require_rank2(const GroupCtx& ctx) {
    if (ctx.rank() < 2) throw Error(ErrorCode::BadParameter, "bound needs rank >= 2");
}

// Lower bound on (2n-1)^(1/3)·((2n-1)^(2/3) - 1).
void constant_denominator_down(const GroupCtx& ctx, Real& out) {
    const BigInt q = q_of(ctx);
    Real q1, q2, tmp;
    set_exact(tmp, q);
    mpfr_cbrt(q1.get(), tmp.get(), MPFR_RNDD);
    set_exact(tmp, q * q);
    mpfr_cbrt(q2.get(), tmp.get(), MPFR_RNDD);
    mpfr_sub_ui(q2.get(), q2.get(), 1, MPFR_RNDD);
    mpfr_mul(out.get(), q1.get(), q2.get(), MPFR_RNDD);
}

BigInt constant_numerator(const GroupCtx& ctx) {
    const BigInt n = ctx.rank();
    return 2 * n * (4 * n * n - 3 * n + 1);
}

}  // namespace

BigInt elementary_bound(const GroupCtx& ctx, int d) {
    if (d < 0) throw Error(ErrorCode::BadDiameter, "d must be >= 0");
    const BigInt ball = ball_size(ctx, static_cast<std::size_t>(d));
    BigInt m = (1 + boost::multiprecision::sqrt(BigInt(1 + 4 * ball))) / 2;
    while (m * (m - 1) > ball) --m;
    while ((m + 1) * m <= ball) ++m;
    return m;
}

BigInt max_subset_size(const GroupCtx& ctx, int d) {
    if (d < 0) throw Error(ErrorCode::BadDiameter, "d must be >= 0");
    const auto rho = static_cast<std::size_t>(d / 2);
    if (d % 2 == 0) return ball_size(ctx, rho);
    // B_ρ(e) ∪ B_ρ(x_1): the second ball adds the elements x_1·z, |z| = ρ,
    // with z not starting in x_1⁻¹.
    return ball_size(ctx, rho) + ipow(q_of(ctx), static_cast<int>(rho));
}

BoundValue thm_constant(const GroupCtx& ctx) {
    require_rank2(ctx);
    Real num, den, out;
    set_exact(num, constant_numerator(ctx));
    constant_denominator_down(ctx, den);
    mpfr_div(out.get(), num.get(), den.get(), MPFR_RNDU);
    return finish(out, Direction::Upper, kDirected);
}

BoundValue thm_upper_bound(const GroupCtx& ctx, int d) {
    require_rank2(ctx);
    if (d < 1) throw Error(ErrorCode::BadDiameter, "upper bound needs d >= 1");
    Real num, den, c, growth, tmp, out;
    set_exact(num, constant_numerator(ctx));
    constant_denominator_down(ctx, den);
    mpfr_div(c.get(), num.get(), den.get(), MPFR_RNDU);
    set_exact(tmp, ipow(q_of(ctx), d));
    mpfr_cbrt(growth.get(), tmp.get(), MPFR_RNDU);
    mpfr_mul(out.get(), c.get(), growth.get(), MPFR_RNDU);
    return finish(out, Direction::Upper, kDirected);
}

std::string thm_upper_expression(const GroupCtx& ctx, int d) {
    const std::string q = q_of(ctx).str();
    return constant_numerator(ctx).str() + " * " + q + "^(" + std::to_string(d) + "/3) / (" + q + "^(1/3) * (" +
           q + "^(2/3) - 1))";
}

BigRational eta_bound_exact(const GroupCtx& ctx, int d, int gamma) {
    require_rank2(ctx);
    if (d < 6 || d % 6 != 0) throw Error(ErrorCode::BadDiameter, "eta bound needs d divisible by 6");
    if (gamma < 1) throw Error(ErrorCode::BadParameter, "eta bound needs gamma >= 1");
    const int e = d / 3 - 4 * gamma - 1;
    const BigInt q = q_of(ctx);
    BigRational value = BigRational(BigInt(d / 3 - 1) * 2 * ctx.rank());
    if (e >= 0) {
        value *= BigRational(ipow(q, e));
    } else {
        value /= BigRational(ipow(q, -e));
    }
    return value;
}

BoundValue eta_bound(const GroupCtx& ctx, int d, int gamma) {
    const BigRational exact = eta_bound_exact(ctx, d, gamma);
    Real num, den, out;
    set_exact(num, boost::multiprecision::numerator(exact));
    set_exact(den, boost::multiprecision::denominator(exact));
    mpfr_div(out.get(), num.get(), den.get(), MPFR_RNDU);
    BoundValue b = finish(out, Direction::Upper, "exact rational; decimal rounded up");
    if (boost::multiprecision::denominator(exact) == 1) b.decimal = boost::multiprecision::numerator(exact).str();
    return b;
}

BoundValue lower_bound_formula(const GroupCtx& ctx, int d) {
    require_rank2(ctx);
    if (d < 6) throw Error(ErrorCode::BadDiameter, "lower bound formula needs d >= 6");
    const int de = d % 2 == 0 ? d : d - 1;
    // 2n · cbrt( 81·q^d / (q^15 · d^4) )
    const BigInt q = q_of(ctx);
    Real num, den, ratio, root, out;
    set_exact(num, 81 * ipow(q, de));
    set_exact(den, ipow(q, 15) * ipow(BigInt(de), 4));
    mpfr_div(ratio.get(), num.get(), den.get(), MPFR_RNDD);
    mpfr_cbrt(root.get(), ratio.get(), MPFR_RNDD);
    mpfr_mul_ui(out.get(), root.get(), static_cast<unsigned long>(2 * ctx.rank()), MPFR_RNDD);
    BoundValue b = finish(out, Direction::Lower, kDirected);
    b.vacuous = mpfr_cmp_ui(out.get(), 1) < 0;
    return b;
}

BigInt mirror_size(const GroupCtx& ctx, int d) {
    if (d < 4 || d % 4 != 0) throw Error(ErrorCode::BadDiameter, "mirror needs d divisible by 4");
    return BigInt(2 * ctx.rank()) * ipow(q_of(ctx), d / 4 - 1);
}

BoundsReport bounds_report(const GroupCtx& ctx, int d, std::optional<int> gamma) {
    if (d < 0) throw Error(ErrorCode::BadDiameter, "d must be >= 0");
    BoundsReport r;
    r.n = ctx.rank();
    r.d = d;
    r.ball = ball_size(ctx, static_cast<std::size_t>(d));
    r.elementary = elementary_bound(ctx, d);
    r.subset_max = max_subset_size(ctx, d);
    if (ctx.rank() >= 2) {
        r.thm_constant = thm_constant(ctx);
        if (d >= 1) {
            r.thm_upper = thm_upper_bound(ctx, d);
            r.thm_expression = thm_upper_expression(ctx, d);
        }
        if (d >= 6) r.lower_formula = lower_bound_formula(ctx, d);
        if (d >= 6 && d % 6 == 0) {
            r.gamma = gamma ? *gamma : choose_gamma(ctx, d);
            if (*r.gamma >= 1) r.eta = eta_bound(ctx, d, *r.gamma);
        }
        if (d >= 4 && d % 4 == 0) r.mirror_size = mirror_size(ctx, d);
    }
    return r;
}

nlohmann::json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

nlohmann::json to_json(const BoundValue& b) {
    return {{"value", b.value},
            {"decimal", b.decimal},
            {"direction", std::string(to_string(b.direction))},
            {"rounding", b.rounding},
            {"vacuous", b.vacuous}};
}

nlohmann::json to_json(const BoundsReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["ball"] = big_to_json(r.ball);
    j["elementary"] = {{"value", big_to_json(r.elementary)}, {"direction", "upper"}, {"rounding", "exact"}};
    j["subset_max"] = {{"value", big_to_json(r.subset_max)}, {"direction", "upper"}, {"rounding", "exact"}};
    if (r.thm_constant) j["thm_constant"] = to_json(*r.thm_constant);
    if (r.thm_upper) {
        j["thm_upper"] = to_json(*r.thm_upper);
        j["thm_upper"]["expression"] = *r.thm_expression;
        j["thm_upper"]["status"] = "asserted bound";
    }
    if (r.lower_formula) j["lower_formula"] = to_json(*r.lower_formula);
    if (r.gamma) j["gamma"] = *r.gamma;
    if (r.eta) j["eta"] = to_json(*r.eta);
    if (r.mirror_size) {
        j["mirror_size"] = {{"value", big_to_json(*r.mirror_size)}, {"direction", "lower"}, {"rounding", "exact"}};
    }
    return j;
}

}  // namespace ddc
