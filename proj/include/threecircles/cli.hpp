#pragma once

// The `threecircles` command line, callable in-process.
//
// Exit codes: 0 success, 1 usage or parse error, 2 isolation depth
// exhausted, 3 instance generator exhausted, 4 a check campaign recorded
// failures.

#include "threecircles/threecircles.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace threecircles::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kDepthExhausted = 2, kGeneratorExhausted = 3, kCheckFailed = 4 };

struct CommonFlags {
    std::string format = "text";
};

inline Json envelope(const std::string& command, Json inputs, Json result, std::optional<std::uint64_t> seed) {
    return Json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"seed", seed ? Json(*seed) : Json(nullptr)},
                {"version", kVersion}};
}

inline std::string join_intervals(const std::vector<OpenInterval>& ivs) {
    if (ivs.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        if (i) s += ", ";
        s += "(" + to_string(ivs[i].lo) + "," + to_string(ivs[i].hi) + ")";
    }
    return s;
}

inline std::string join_rationals(const std::vector<Rational>& xs) {
    if (xs.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
    return s;
}

/// Divides out every factor (X - x); returns the multiplicity removed.
inline unsigned strip_root(Polynomial& p, const Rational& x) {
    unsigned m = 0;
    while (p.degree() > 0 && is_root(p, x)) {
        p = poly_divmod(p, Polynomial::linear_root(x)).first;
        ++m;
    }
    return m;
}

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact real root isolation and three-circles validation", "threecircles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CommonFlags common;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string poly_text, l_text, r_text;
    std::size_t basis_n = 0;
    bool have_n = false;

    // isolate
    std::size_t max_depth = 64;
    bool squarefree_auto = false;
    auto* isolate_cmd = app.add_subcommand("isolate", "Isolate the real roots of p in (l, r)");
    isolate_cmd->add_option("-p,--poly", poly_text, "Coefficients low-to-high, e.g. 2/9,-1,1")->required();
    isolate_cmd->add_option("-l", l_text, "Left endpoint")->required();
    isolate_cmd->add_option("-r", r_text, "Right endpoint")->required();
    isolate_cmd->add_option("--max-depth", max_depth, "Bisection depth bound")->check(CLI::PositiveNumber);
    isolate_cmd->add_flag("--squarefree-auto", squarefree_auto, "Reduce p to its squarefree part first");
    add_format(isolate_cmd);

    auto* mobius_cmd = app.add_subcommand("mobius", "Coefficients of the Moebius transform of p to (l, r)");
    mobius_cmd->add_option("-p,--poly", poly_text)->required();
    mobius_cmd->add_option("-l", l_text)->required();
    mobius_cmd->add_option("-r", r_text)->required();
    mobius_cmd->add_option("-n", basis_n, "Degree bound (defaults to deg p)");
    add_format(mobius_cmd);

    auto* bern_cmd = app.add_subcommand("bernstein", "Bernstein coefficients of p on (l, r) in degree n");
    bern_cmd->add_option("-p,--poly", poly_text)->required();
    bern_cmd->add_option("-l", l_text)->required();
    bern_cmd->add_option("-r", r_text)->required();
    bern_cmd->add_option("-n", basis_n, "Basis degree (defaults to deg p)");
    add_format(bern_cmd);

    auto* normal_cmd = app.add_subcommand("check-normal", "Decide whether p is a normal polynomial");
    normal_cmd->add_option("-p,--poly", poly_text)->required();
    add_format(normal_cmd);

    // check
    std::string kind_text;
    std::optional<std::uint64_t> seed_flag;
    std::size_t trials = 100, degree_bound = 8, jobs = 1;
    unsigned precision_bits = kDefaultPrecisionBits;
    std::optional<std::size_t> p_count, q_count;
    std::string path_text = "any";
    auto* check_cmd = app.add_subcommand("check", "Run a seeded validation campaign");
    check_cmd->add_option("kind", kind_text, "three-circles-1 | three-circles-2 | obreshkoff | normal-closure | bernq-oracle")
        ->required();
    check_cmd->add_option("--seed", seed_flag, "Campaign seed (falls back to THREECIRCLES_SEED, then 0)");
    check_cmd->add_option("--trials", trials);
    check_cmd->add_option("--degree-bound", degree_bound)->check(CLI::PositiveNumber);
    check_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    check_cmd->add_option("--precision-bits", precision_bits)->check(CLI::Range(2u, 1u << 20));
    check_cmd->add_option("--p-count", p_count, "Obreshkoff: roots required in the lens L_{n-p}");
    check_cmd->add_option("--q-count", q_count, "Obreshkoff: roots allowed in the area A_q");
    check_cmd->add_option("--path", path_text, "Obreshkoff index table: exact | adaptive | any")
        ->check(CLI::IsMember({"exact", "adaptive", "any"}));
    add_format(check_cmd);

    // plot
    std::optional<unsigned> k_flag;
    std::string roots_file, out_path;
    auto* plot_cmd = app.add_subcommand("plot", "Write an SVG of the discs for (l, r) and optional roots");
    plot_cmd->add_option("-l", l_text)->required();
    plot_cmd->add_option("-r", r_text)->required();
    plot_cmd->add_option("-k", k_flag, "Draw the Obreshkoff discs for this k instead of C0, C1, C2");
    plot_cmd->add_option("--roots-file", roots_file, "Root spec file (real/pair/leading lines)");
    plot_cmd->add_option("--out", out_path, "Output SVG path")->required();

    // CLI11 wants argv[0] first and the rest reversed-consumable; use the vector overload.
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    have_n = (mobius_cmd->parsed() && mobius_cmd->count("-n") > 0) || (bern_cmd->parsed() && bern_cmd->count("-n") > 0);
    const bool json = common.format == "json";

    try {
        if (isolate_cmd->parsed()) {
            Polynomial p = parse_polynomial(poly_text);
            const IntervalLR iv(parse_rational(l_text), parse_rational(r_text));
            if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no isolated roots");
            Json inputs{{"poly", to_string(p)}, {"l", to_string(iv.l())}, {"r", to_string(iv.r())},
                        {"max_depth", max_depth}, {"squarefree_auto", squarefree_auto}};
            Json structure = nullptr;
            if (squarefree_auto) {
                Json factors = Json::array();
                for (const auto& f : squarefree_decomposition(p))
                    factors.push_back({{"multiplicity", f.multiplicity}, {"factor", to_string(f.factor)}});
                p = squarefree_part(p);
                structure = Json{{"squarefree_part", to_string(p)}, {"factors", factors}};
            } else if (!is_squarefree(p)) {
                throw std::invalid_argument("polynomial is not squarefree (use --squarefree-auto)");
            }
            Json endpoint_roots = Json::array();
            for (const auto* x : {&iv.l(), &iv.r()})
                if (strip_root(p, *x) > 0) endpoint_roots.push_back(to_string(*x));

            int code = kOk;
            IsolationResult res;
            try {
                res = isolate(p, iv, IsolatorConfig{max_depth});
            } catch (const DepthExhausted& e) {
                res = e.partial();
                code = kDepthExhausted;
                err << "error: " << e.what() << "; partial result follows\n";
            }
            if (json) {
                Json result = to_json(res);
                result["endpoint_roots"] = endpoint_roots;
                result["multiplicity_structure"] = structure;
                result["complete"] = code == kOk;
                out << envelope("isolate", inputs, result, std::nullopt).dump(2) << "\n";
            } else {
                if (!structure.is_null()) {
                    out << "squarefree part: " << structure["squarefree_part"].get<std::string>() << "\n";
                    for (const auto& f : structure["factors"])
                        out << "  multiplicity " << f["multiplicity"].get<unsigned>() << ": "
                            << f["factor"].get<std::string>() << "\n";
                }
                if (!endpoint_roots.empty()) {
                    out << "endpoint roots (excluded):";
                    for (const auto& x : endpoint_roots) out << " " << x.get<std::string>();
                    out << "\n";
                }
                if (res.intervals.empty() && res.exact_roots.empty()) out << "no roots\n";
                out << "intervals: " << join_intervals(res.intervals) << "\n";
                out << "exact roots: " << join_rationals(res.exact_roots) << "\n";
                out << "nodes: " << res.node_count << ", depth: " << res.depth_reached << "\n";
            }
            return code;
        }

        if (mobius_cmd->parsed() || bern_cmd->parsed()) {
            const bool is_mobius = mobius_cmd->parsed();
            const Polynomial p = parse_polynomial(poly_text);
            const Rational l = parse_rational(l_text), r = parse_rational(r_text);
            if (!(l < r)) throw std::invalid_argument("need l < r");
            if (p.is_zero()) throw std::invalid_argument("zero polynomial");
            const std::size_t n = have_n ? basis_n : static_cast<std::size_t>(p.degree());
            std::string coeffs;
            Json arr;
            if (is_mobius) {
                Polynomial m = mobius(p, l, r, n);
                coeffs = to_string(m);
                arr = to_json(m);
            } else {
                auto bc = bernstein_coeffs(p, l, r, n);
                arr = Json::array();
                for (std::size_t i = 0; i < bc.b.size(); ++i) {
                    coeffs += (i ? "," : "") + to_string(bc.b[i]);
                    arr.push_back(to_string(bc.b[i]));
                }
            }
            if (json) {
                Json inputs{{"poly", to_string(p)}, {"l", to_string(l)}, {"r", to_string(r)}, {"n", n}};
                out << envelope(is_mobius ? "mobius" : "bernstein", inputs, Json{{"coefficients", arr}}, std::nullopt)
                           .dump(2)
                    << "\n";
            } else {
                out << coeffs << "\n";
            }
            return kOk;
        }

        if (normal_cmd->parsed()) {
            const Polynomial p = parse_polynomial(poly_text);
            const bool normal = is_normal(p);
            const NormalVerdict oracle = normal_via_properties(p);
            if (json) {
                Json result{{"normal", normal},
                            {"oracle_normal", oracle.is_normal},
                            {"failing_index", oracle.failing_index ? Json(*oracle.failing_index) : Json(nullptr)},
                            {"failed_condition", oracle.failed_condition}};
                out << envelope("check-normal", Json{{"poly", to_string(p)}}, result, std::nullopt).dump(2) << "\n";
            } else {
                out << "normal: " << (normal ? "true" : "false") << "\n";
                if (oracle.failing_index)
                    out << "violated condition " << oracle.failed_condition << " at index " << *oracle.failing_index
                        << "\n";
            }
            return kOk;
        }

        if (check_cmd->parsed()) {
            CampaignConfig cfg;
            cfg.kind = campaign_kind_from_string(kind_text);
            if (seed_flag) {
                cfg.seed = *seed_flag;
            } else if (const char* env = std::getenv("THREECIRCLES_SEED"); env && *env) {
                cfg.seed = std::stoull(env);
            }
            cfg.trials = trials;
            cfg.degree_bound = degree_bound;
            cfg.jobs = jobs;
            cfg.precision_bits = precision_bits;
            cfg.p_count = p_count;
            cfg.q_count = q_count;
            cfg.path = path_text == "exact" ? ObreshkoffPath::Exact
                       : path_text == "adaptive" ? ObreshkoffPath::Adaptive
                                                 : ObreshkoffPath::Any;
            CheckReport report;
            try {
                report = run_campaign(cfg);
            } catch (const GeneratorExhausted& e) {
                err << "error: " << e.what() << "\n";
                return kGeneratorExhausted;
            }
            // jobs is deliberately left out of inputs: reports must not depend on it.
            Json inputs{{"kind", kind_text},       {"trials", trials},
                        {"degree_bound", degree_bound}, {"precision_bits", precision_bits},
                        {"p_count", p_count ? Json(*p_count) : Json(nullptr)},
                        {"q_count", q_count ? Json(*q_count) : Json(nullptr)},
                        {"path", path_text}};
            if (json) {
                out << envelope("check", inputs, to_json(report), cfg.seed).dump(2) << "\n";
            } else {
                out << "check " << kind_text << " seed " << cfg.seed << ": trials " << report.trials << ", passed "
                    << report.passed << ", failures " << report.failures.size() << ", skipped (boundary) "
                    << report.skipped_boundary << ", rejected " << report.rejected << "\n";
                for (const auto& f : report.failures)
                    out << "  FAIL seed " << f.seed << ": observed v = " << f.observed_v << ", expected "
                        << f.expected << "\n    " << f.instance.dump() << "\n";
            }
            return report.ok() ? kOk : kCheckFailed;
        }

        if (plot_cmd->parsed()) {
            const IntervalLR iv(parse_rational(l_text), parse_rational(r_text));
            std::vector<ComplexRational> points;
            if (!roots_file.empty()) {
                std::ifstream in(roots_file);
                if (!in) throw std::invalid_argument("cannot read roots file '" + roots_file + "'");
                std::stringstream buf;
                buf << in.rdbuf();
                for (const auto& [z, m] : parse_root_spec(buf.str()).points()) points.push_back(z);
            }
            const std::string svg = render_svg(iv, k_flag, points);
            std::ofstream file(out_path);
            if (!file || !(file << svg)) {
                err << "error: cannot write '" << out_path << "'\n";
                return kUsage;
            }
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

/// Entry point for main(); argv[0] is the program name.
inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace threecircles::cli
