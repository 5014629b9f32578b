#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ddc/bounds.hpp"
#include "ddc/check.hpp"
#include "ddc/construct.hpp"
#include "ddc/enumerate.hpp"
#include "ddc/io.hpp"
#include "ddc/quotient.hpp"
#include "ddc/search.hpp"
#include "json.hpp"

namespace ddc::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

json guards_json(const Guards& g) {
    return {{"max_elements", g.max_elements}, {"max_pairs", g.max_pairs}, {"threads", g.threads}};
}

json run_report(const std::string& command, json parameters, json results, double seconds, const Guards& g,
                std::optional<std::uint64_t> seed = std::nullopt) {
    json r{{"command", command},
           {"parameters", std::move(parameters)},
           {"results", std::move(results)},
           {"timings", {{"seconds", seconds}}},
           {"guards", guards_json(g)}};
    if (seed) {
        r["seed"] = *seed;
        r["generator"] = kGeneratorName;
    }
    return r;
}

json collision_json(const CollisionClass& c) {
    json pairs = json::array();
    for (const auto& p : c.pairs) pairs.push_back({to_string(p.g), to_string(p.h)});
    return {{"difference", to_string(c.difference)}, {"pairs", pairs}};
}

void print_collisions(std::ostream& out, const std::vector<CollisionClass>& classes) {
    for (const auto& c : classes) {
        out << "repeated difference " << to_string(c.difference) << ":";
        for (const auto& p : c.pairs) out << " (" << to_string(p.g) << ", " << to_string(p.h) << ")";
        out << '\n';
    }
}

void print_bound(std::ostream& out, const std::string& name, const BoundValue& b) {
    out << name << " = " << b.decimal << " (" << to_string(b.direction) << ", " << b.rounding
        << (b.vacuous ? ", vacuous" : "") << ")\n";
}

struct Common {
    bool json = false;
    Guards guards;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distinct difference configurations in free groups"};
    app.require_subcommand(1);
    // Global options may also follow the subcommand.
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Expand all help");
    app.footer(
        "Environment: DDC_MAX_ELEMENTS and DDC_MAX_PAIRS override the guard defaults.\n"
        "Exit codes: 0 success, 1 check failed, 2 usage error, 3 resource or budget exceeded.");

    Common common;
    app.add_flag("--json", common.json, "Machine-readable run report on stdout");
    app.add_option("--threads", common.guards.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--max-elements", common.guards.max_elements, "Element materialization guard")
        ->envname("DDC_MAX_ELEMENTS");
    app.add_option("--max-pairs", common.guards.max_pairs, "Ordered pair budget")->envname("DDC_MAX_PAIRS");

    // enumerate
    int en_n = 2;
    std::size_t en_r = 0;
    bool en_ball = false;
    std::optional<std::uint64_t> en_limit;
    auto* enumerate = app.add_subcommand("enumerate", "Print the sphere (or ball) of a given radius");
    enumerate->add_option("--n", en_n, "Rank")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--radius", en_r, "Radius")->required();
    enumerate->add_flag("--ball", en_ball, "Whole ball instead of the sphere");
    enumerate->add_option("--limit", en_limit, "Stop after K words");

    // check
    std::string ck_in;
    bool ck_left = false;
    bool ck_sphere = false;
    bool ck_cross = false;
    std::optional<int> ck_n;
    auto* check = app.add_subcommand("check", "Decide whether a DDC file has distinct differences");
    check->add_option("--in", ck_in, "DDC file")->required();
    check->add_flag("--left", ck_left, "Use left differences g h^-1");
    check->add_flag("--sphere-fast", ck_sphere, "Suffix-set condition for sets inside one sphere");
    check->add_flag("--cross-check", ck_cross, "With --sphere-fast, also run the full check and compare");
    check->add_option("--n", ck_n, "Rank (overrides the file header)");

    // construct
    auto* construct = app.add_subcommand("construct", "Build a DDC");
    construct->require_subcommand(1);
    int cm_n = 2, cm_d = 4;
    std::string cm_out;
    auto* cmirror = construct->add_subcommand("mirror", "D = { w rev(w) : |w| = d/4 }");
    cmirror->add_option("--n", cm_n, "Rank")->required();
    cmirror->add_option("--d", cm_d, "Diameter, divisible by 4")->required();
    cmirror->add_option("--out", cm_out, "Output DDC file")->required();

    int cr_n = 2, cr_d = 6;
    std::uint64_t cr_seed = 0;
    std::string cr_out, cr_report;
    auto* crandom = construct->add_subcommand("random", "Randomized construction with deletion repair");
    crandom->add_option("--n", cr_n, "Rank")->required();
    crandom->add_option("--d", cr_d, "Diameter, >= 6")->required();
    crandom->add_option("--seed", cr_seed, "PRNG seed")->required();
    crandom->add_option("--out", cr_out, "Output DDC file")->required();
    crandom->add_option("--report", cr_report, "Write a JSON report to this file");

    // bounds
    int bd_n = 2, bd_d = 0;
    std::optional<int> bd_gamma;
    auto* bounds = app.add_subcommand("bounds", "Evaluate every closed-form bound at (n, d)");
    bounds->add_option("--n", bd_n, "Rank")->required();
    bounds->add_option("--d", bd_d, "Diameter")->required();
    bounds->add_option("--gamma", bd_gamma, "Gamma for the eta bound");

    // search
    SearchConfig sc;
    int sc_n = 2;
    bool sc_nosym = false;
    std::string sc_witness;
    auto* search = app.add_subcommand("search", "Exact maximum DDC size by branch and bound");
    search->add_option("--n", sc_n, "Rank")->required();
    search->add_option("--d", sc.d, "Diameter")->required();
    search->add_flag("--no-symmetry", sc_nosym, "Disable signed-permutation pruning at the root");
    search->add_option("--nodes", sc.node_budget, "Node budget");
    search->add_option("--time", sc.time_budget_seconds, "Time budget in seconds");
    search->add_option("--witness-out", sc_witness, "Write the witness as a DDC file");

    // lift
    std::string lf_group, lf_set, lf_out;
    std::size_t lf_d = 0;
    auto* liftc = app.add_subcommand("lift", "Lift a DDC of a finite group into the free group");
    liftc->add_option("--group", lf_group, "Table file or 'zmod M gens=a,b'")->required();
    liftc->add_option("--set", lf_set, "Comma-separated element ids, h1 first")->required();
    liftc->add_option("--d", lf_d, "Diameter bound in the group")->required();
    liftc->add_option("--out", lf_out, "Output DDC file");

    // bench
    int bn_n = 2, bn_d = 24;
    std::uint64_t bn_seed = 0;
    auto* bench = app.add_subcommand("bench", "Time enumeration, checking and the randomized pipeline");
    bench->add_option("--n", bn_n, "Rank");
    bench->add_option("--d", bn_d, "Diameter, divisible by 12 for the mirror stage");
    bench->add_option("--seed", bn_seed, "PRNG seed");

    std::vector<std::string> argv_store{"ddc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    const Guards& guards = common.guards;
    const auto t0 = Clock::now();
    try {
        if (*enumerate) {
            const GroupCtx ctx(en_n);
            std::uint64_t emitted = 0;
            json words = json::array();
            auto emit = [&](std::span<const Letter> letters) {
                if (en_limit && emitted >= *en_limit) return;
                const std::string text = to_string(Word::from_reduced({letters.begin(), letters.end()}));
                if (common.json) {
                    words.push_back(text);
                } else {
                    out << text << '\n';
                }
                ++emitted;
            };
            if (en_ball) {
                for_each_ball_word(ctx, en_r, emit);
            } else {
                for_each_sphere_word(ctx, en_r, emit);
            }
            if (common.json) {
                json params{{"n", en_n}, {"radius", en_r}, {"ball", en_ball}};
                if (en_limit) params["limit"] = *en_limit;
                out << run_report("enumerate", params, {{"count", emitted}, {"words", words}}, seconds_since(t0),
                                  guards)
                           .dump(2)
                    << '\n';
            }
            return kSuccess;
        }

        if (*check) {
            const DdcSet raw = read_ddc_file(ck_in, ck_n);
            const DdcSet set = ck_left ? inv_set(raw) : raw;
            json results{{"size", set.size()}, {"left", ck_left}};
            bool ok = true;
            std::vector<CollisionClass> classes;
            std::optional<SphereViolation> violation;
            if (ck_sphere) {
                violation = sphere_condition_violation(set);
                ok = !violation;
                results["method"] = "sphere-condition";
                if (ck_cross) {
                    const bool full = is_ddc(set, guards);
                    results["full_check"] = full;
                    if (full != ok) {
                        results["discrepancy"] = true;
                        err << "DISCREPANCY: suffix-set condition says " << (ok ? "DDC" : "not a DDC")
                            << " but the full check says " << (full ? "DDC" : "not a DDC") << '\n';
                        ok = false;
                    }
                }
            } else {
                classes = find_repeats(set, guards);
                ok = classes.empty();
                results["method"] = "difference-hash";
            }
            results["is_ddc"] = ok;
            if (!set.empty()) results[ck_left ? "left_diameter" : "diameter"] = diameter(set);
            json cls = json::array();
            for (const auto& c : classes) cls.push_back(collision_json(c));
            results["collisions"] = cls;
            if (violation) {
                results["violation"] = {{"level", violation->level},      {"x", to_string(violation->x)},
                                        {"y", to_string(violation->y)},   {"z", to_string(violation->z)},
                                        {"w", to_string(violation->w)}};
            }
            if (common.json) {
                out << run_report("check", {{"in", ck_in}, {"left", ck_left}, {"sphere_fast", ck_sphere}}, results,
                                  seconds_since(t0), guards)
                           .dump(2)
                    << '\n';
            } else if (ok) {
                out << (ck_left ? "left DDC" : "DDC") << ": " << set.size() << " elements\n";
            } else {
                out << "not a " << (ck_left ? "left " : "") << "DDC\n";
                print_collisions(out, classes);
                if (violation) {
                    out << "prefixes " << to_string(violation->x) << " and " << to_string(violation->y)
                        << " share suffixes " << to_string(violation->z) << " and " << to_string(violation->w)
                        << '\n';
                }
            }
            return ok ? kSuccess : kCheckFailed;
        }

        if (*cmirror) {
            const GroupCtx ctx(cm_n);
            const DdcSet set = mirror(ctx, cm_d, guards);
            write_ddc_file(cm_out, set);
            const json results{{"size", set.size()}, {"diameter", set.empty() ? 0 : diameter(set)}};
            if (common.json) {
                out << run_report("construct mirror", {{"n", cm_n}, {"d", cm_d}, {"out", cm_out}}, results,
                                  seconds_since(t0), guards)
                           .dump(2)
                    << '\n';
            } else {
                out << "mirror DDC: " << set.size() << " elements, diameter " << results["diameter"] << '\n';
            }
            return kSuccess;
        }

        if (*crandom) {
            const GroupCtx ctx(cr_n);
            const LowerResult res = construct_lower(ctx, cr_d, cr_seed, guards);
            write_ddc_file(cr_out, res.set);
            json report{{"n", cr_n},
                        {"d", cr_d},
                        {"d_effective", res.d_effective},
                        {"gamma", res.gamma},
                        {"v_size", res.v_size},
                        {"events_detected", res.events},
                        {"removed", res.removed},
                        {"final_size", res.set.size()},
                        {"diameter", res.diameter},
                        {"eta_bound", to_json(eta_bound(ctx, res.d_effective, res.gamma))},
                        {"lower_formula", to_json(lower_bound_formula(ctx, cr_d))},
                        {"verified", res.verified},
                        {"seed", cr_seed},
                        {"generator", kGeneratorName}};
            if (!cr_report.empty()) {
                std::ofstream rf(cr_report);
                if (!rf) throw Error(ErrorCode::ParseError, "cannot write '" + cr_report + "'");
                rf << report.dump(2) << '\n';
            }
            if (common.json) {
                out << run_report("construct random", {{"n", cr_n}, {"d", cr_d}, {"out", cr_out}}, report,
                                  seconds_since(t0), guards, cr_seed)
                           .dump(2)
                    << '\n';
            } else {
                out << "random DDC: " << res.set.size() << " elements (|V| = " << res.v_size << ", "
                    << res.events << " bad events, " << res.removed << " removed, gamma " << res.gamma
                    << ", d' = " << res.d_effective << "), verified " << (res.verified ? "yes" : "NO") << '\n';
            }
            return res.verified ? kSuccess : kCheckFailed;
        }

        if (*bounds) {
            const GroupCtx ctx(bd_n);
            const BoundsReport r = bounds_report(ctx, bd_d, bd_gamma);
            if (common.json) {
                json params{{"n", bd_n}, {"d", bd_d}};
                if (bd_gamma) params["gamma"] = *bd_gamma;
                json results = to_json(r);
                out << run_report("bounds", params, results, seconds_since(t0), guards).dump(2) << '\n';
                return kSuccess;
            }
            out << "n = " << r.n << ", d = " << r.d << '\n';
            out << "|B_d(e)| = " << r.ball.str() << '\n';
            out << "elementary bound = " << r.elementary.str() << " (upper, exact)\n";
            out << "largest diameter-d subset = " << r.subset_max.str() << " (upper, exact)\n";
            if (r.thm_constant) print_bound(out, "upper-bound constant", *r.thm_constant);
            if (r.thm_upper) {
                print_bound(out, "asserted upper bound", *r.thm_upper);
                out << "  = " << *r.thm_expression << '\n';
            }
            if (r.lower_formula) print_bound(out, "lower bound formula", *r.lower_formula);
            if (r.eta) print_bound(out, "eta bound (gamma = " + std::to_string(*r.gamma) + ")", *r.eta);
            if (r.mirror_size) out << "mirror construction size = " << r.mirror_size->str() << " (lower, exact)\n";
            return kSuccess;
        }

        if (*search) {
            sc.ctx = GroupCtx(sc_n);
            sc.symmetry_pruning = !sc_nosym;
            sc.threads = guards.threads;
            const SearchResult res = max_ddc_exact(sc, guards);
            if (!sc_witness.empty()) write_ddc_file(sc_witness, res.witness);
            json witness = json::array();
            for (const auto& w : res.witness.elements()) witness.push_back(to_string(w));
            const json results{{"size", res.size},       {"proven_optimal", res.proven_optimal},
                               {"nodes", res.nodes},     {"witness", witness},
                               {"witness_verified", verify_witness(res.witness, sc.d, guards)}};
            if (common.json) {
                out << run_report("search",
                                  {{"n", sc_n},
                                   {"d", sc.d},
                                   {"symmetry_pruning", sc.symmetry_pruning},
                                   {"nodes", sc.node_budget},
                                   {"time", sc.time_budget_seconds}},
                                  results, seconds_since(t0), guards)
                           .dump(2)
                    << '\n';
            } else {
                out << "m(" << sc_n << "," << sc.d << ") " << (res.proven_optimal ? "= " : ">= ") << res.size
                    << (res.proven_optimal ? "" : " (budget exhausted)") << '\n';
                for (const auto& w : res.witness.elements()) out << "  " << to_string(w) << '\n';
            }
            return res.proven_optimal ? kSuccess : kResource;
        }

        if (*liftc) {
            const GroupOracle oracle = load_group(lf_group);
            std::vector<ElementId> set;
            std::istringstream list(lf_set);
            for (std::string tok; std::getline(list, tok, ',');) {
                if (tok.find_first_not_of(" \t") == std::string::npos) continue;
                try {
                    set.push_back(static_cast<ElementId>(std::stoul(tok)));
                } catch (const std::logic_error&) {
                    throw Error(ErrorCode::ParseError, "bad element id '" + tok + "'");
                }
            }
            const LiftResult res = lift(oracle, set, lf_d, guards);
            if (!lf_out.empty()) write_ddc_file(lf_out, res.set);
            json lifted = json::array();
            for (const auto& w : res.lifted) lifted.push_back(to_string(w));
            const bool verified = is_ddc(res.set, guards) && res.free_diameter <= 2 * lf_d;
            const json results{{"size", res.set.size()},           {"group_diameter", res.group_diameter},
                               {"d", res.requested_d},             {"free_diameter", res.free_diameter},
                               {"free_diameter_bound", 2 * lf_d},  {"lifted", lifted},
                               {"verified", verified}};
            if (common.json) {
                out << run_report("lift", {{"group", lf_group}, {"set", lf_set}, {"d", lf_d}}, results,
                                  seconds_since(t0), guards)
                           .dump(2)
                    << '\n';
            } else {
                out << "lifted " << res.set.size() << " elements; group diameter " << res.group_diameter
                    << ", requested d " << res.requested_d << ", free diameter " << res.free_diameter
                    << " (bound " << 2 * lf_d << ")\n";
                for (const auto& w : res.lifted) out << "  " << to_string(w) << '\n';
            }
            return verified ? kSuccess : kCheckFailed;
        }

        if (*bench) {
            const GroupCtx ctx(bn_n);
            json timings;
            auto t = Clock::now();
            const auto radius = static_cast<std::size_t>(bn_d / 2);
            std::uint64_t count = 0;
            for_each_sphere_word(ctx, radius, [&](std::span<const Letter>) { ++count; });
            timings["enumerate_sphere"] = {{"radius", radius}, {"count", count}, {"seconds", seconds_since(t)}};
            if (bn_d % 4 == 0) {
                t = Clock::now();
                const DdcSet m = mirror(ctx, bn_d, guards);
                const bool ok = is_ddc(m, guards);
                timings["mirror_check"] = {{"size", m.size()}, {"is_ddc", ok}, {"seconds", seconds_since(t)}};
            }
            if (bn_d >= 6) {
                t = Clock::now();
                const LowerResult res = construct_lower(ctx, bn_d, bn_seed, guards);
                timings["random_pipeline"] = {{"v_size", res.v_size},
                                              {"events", res.events},
                                              {"final_size", res.set.size()},
                                              {"verified", res.verified},
                                              {"seconds", seconds_since(t)}};
            }
            const json report =
                run_report("bench", {{"n", bn_n}, {"d", bn_d}}, timings, seconds_since(t0), guards, bn_seed);
            out << report.dump(2) << '\n';
            return kSuccess;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::ResourceLimit: return kResource;
            case ErrorCode::NotADdc: return kCheckFailed;
            default: return kUsage;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ddc::cli
