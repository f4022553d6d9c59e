#pragma once

// Seeded validation campaigns over many generated instances.
//
// Trial i of a campaign seeded with s uses trial_seed(s, i) and nothing
// else, so any trial can be replayed on its own. With jobs > 1 trials are
// dealt round-robin to worker threads and the per-trial results are merged
// back in index order; the report is identical to a serial run.

#include "threecircles/certcheck.hpp"
#include "threecircles/normal.hpp"
#include "threecircles/serialization.hpp"
#include "threecircles/signs.hpp"

#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace threecircles {

enum class CampaignKind { ThreeCircles1, ThreeCircles2, Obreshkoff, NormalClosure, BernqOracle };

inline const char* to_string(CampaignKind k) {
    switch (k) {
        case CampaignKind::ThreeCircles1: return "three-circles-1";
        case CampaignKind::ThreeCircles2: return "three-circles-2";
        case CampaignKind::Obreshkoff: return "obreshkoff";
        case CampaignKind::NormalClosure: return "normal-closure";
        case CampaignKind::BernqOracle: return "bernq-oracle";
    }
    return "?";
}

inline CampaignKind campaign_kind_from_string(const std::string& s) {
    for (auto k : {CampaignKind::ThreeCircles1, CampaignKind::ThreeCircles2, CampaignKind::Obreshkoff,
                   CampaignKind::NormalClosure, CampaignKind::BernqOracle})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown check kind '" + s + "'");
}

/// Which Obreshkoff indices the default configuration table may use.
enum class ObreshkoffPath { Exact, Adaptive, Any };

struct ObreshkoffConfig {
    std::size_t degree = 1;
    std::size_t p_count = 0;
    std::size_t q_count = 0;
};

struct CampaignConfig {
    CampaignKind kind = CampaignKind::ThreeCircles1;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t degree_bound = 8;
    std::size_t jobs = 1;
    unsigned precision_bits = kDefaultPrecisionBits;
    std::optional<std::size_t> p_count;  // Obreshkoff: both or neither
    std::optional<std::size_t> q_count;
    ObreshkoffPath path = ObreshkoffPath::Any;
    GeneratorOptions generator;
};

struct CheckFailure {
    std::uint64_t seed = 0;
    Json instance;  // spec / interval / polynomial, whatever the campaign needs to replay it
    std::size_t observed_v = 0;
    std::string expected;
};

struct CheckReport {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<CheckFailure> failures;
    std::size_t skipped_boundary = 0;
    std::size_t rejected = 0;
    std::size_t generator_rejections = 0;
    std::map<std::size_t, std::size_t> v_histogram;
    std::vector<std::uint64_t> trial_seeds;

    bool ok() const { return failures.empty(); }
};

namespace detail {

struct TrialResult {
    std::uint64_t seed = 0;
    CheckStatus status = CheckStatus::Passed;
    std::size_t observed_v = 0;
    bool has_v = false;
    std::string expected;
    Json instance;
    std::size_t generator_rejections = 0;
};

inline IntervalLR random_interval(Rng& rng) {
    Rational l = sample_rational(rng, -4, 4, 8);
    Rational w = sample_rational(rng, Rational(1, 8), 4, 8);
    if (sgn(w) <= 0) w = 1;
    return IntervalLR(l, l + w);
}

inline Polynomial random_polynomial(Rng& rng, std::size_t degree, unsigned max_den) {
    std::vector<Rational> cs(degree + 1);
    for (auto& c : cs) c = sample_rational(rng, -8, 8, max_den);
    if (sgn(cs.back()) == 0) cs.back() = 1;
    return Polynomial(std::move(cs));
}

inline TrialResult from_outcome(std::uint64_t seed, const CheckOutcome& out, Json instance, std::size_t rejections) {
    TrialResult t;
    t.seed = seed;
    t.status = out.status;
    t.observed_v = out.observed_v;
    t.has_v = out.status == CheckStatus::Passed || out.status == CheckStatus::Failed;
    t.expected = out.expected;
    t.instance = std::move(instance);
    t.generator_rejections = rejections;
    return t;
}

inline TrialResult run_case1_trial(const CampaignConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    IntervalLR iv = random_interval(rng);
    auto gen = generate_case1(splitmix64(seed), cfg.degree_bound, iv, cfg.generator);
    Json inst{{"spec", to_json(gen.value)}, {"interval", to_json(iv)}};
    return from_outcome(seed, check_case1(gen.value, iv), std::move(inst), gen.rejections);
}

inline TrialResult run_case2_trial(const CampaignConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    IntervalLR iv = random_interval(rng);
    auto gen = generate_case2(splitmix64(seed), cfg.degree_bound, iv, cfg.generator);
    Json inst{{"spec", to_json(gen.value.spec)}, {"interval", to_json(iv)}, {"a", to_string(gen.value.a)}};
    return from_outcome(seed, check_case2(gen.value.spec, iv, gen.value.a), std::move(inst), gen.rejections);
}

inline bool exact_index(std::size_t k) { return has_exact_cotangent({static_cast<unsigned>(k)}); }
inline bool adaptive_test_index(std::size_t k) { return k == 3 || k == 5 || k == 6; }

}  // namespace detail

/// Configurations with p <= q <= 3 and degree <= degree_bound whose Obreshkoff
/// indices (lens n - p when p > 0, area q) fit the requested path.
inline std::vector<ObreshkoffConfig> obreshkoff_table(std::size_t degree_bound, ObreshkoffPath path) {
    std::vector<ObreshkoffConfig> out;
    for (std::size_t q = 0; q <= 3; ++q)
        for (std::size_t p = 0; p <= q; ++p)
            for (std::size_t n = std::max<std::size_t>(p, 1); n <= degree_bound; ++n) {
                std::vector<std::size_t> used{q};
                if (p > 0) used.push_back(n - p);
                bool all_exact = true, any_adaptive = false, adaptive_ok = true;
                for (auto k : used) {
                    all_exact = all_exact && detail::exact_index(k);
                    if (!detail::exact_index(k)) {
                        any_adaptive = true;
                        adaptive_ok = adaptive_ok && detail::adaptive_test_index(k);
                    }
                }
                if (path == ObreshkoffPath::Exact && !all_exact) continue;
                if (path == ObreshkoffPath::Adaptive && !(any_adaptive && adaptive_ok)) continue;
                out.push_back({n, p, q});
            }
    return out;
}

namespace detail {

inline TrialResult run_obreshkoff_trial(const CampaignConfig& cfg, std::uint64_t index, std::uint64_t seed,
                                        const std::vector<ObreshkoffConfig>& table) {
    Rng rng(seed);
    IntervalLR iv = random_interval(rng);
    std::size_t p, q;
    std::optional<std::size_t> degree;
    if (cfg.p_count && cfg.q_count) {
        p = *cfg.p_count;
        q = *cfg.q_count;
    } else {
        const auto& c = table[index % table.size()];
        p = c.p_count;
        q = c.q_count;
        degree = c.degree;
    }
    auto gen = generate_obreshkoff(splitmix64(seed), cfg.degree_bound, iv, p, q, cfg.generator, cfg.precision_bits,
                                   degree);
    Json inst{{"spec", to_json(gen.value.spec)}, {"interval", to_json(iv)}, {"p", p}, {"q", q}};
    return from_outcome(seed, check_obreshkoff(gen.value.spec, iv, p, q, cfg.precision_bits), std::move(inst),
                        gen.rejections);
}

/// Product closure, the recursive/four-property agreement on the product,
/// and one sign variation after multiplying by X - a.
inline TrialResult run_normal_trial(const CampaignConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t half = std::max<std::size_t>(cfg.degree_bound / 2, 1);
    RootSpec sp = random_normal_spec(rng, half, cfg.generator.max_denominator);
    RootSpec sq = random_normal_spec(rng, half, cfg.generator.max_denominator);
    const Polynomial p = poly_from_roots(sp), q = poly_from_roots(sq), pq = p * q;
    Rational a = sample_rational(rng, Rational(1, 64), 8, cfg.generator.max_denominator);
    if (sgn(a) <= 0) a = 1;
    // Strip the X^m factor so that 0 is not a root.
    std::size_t shift = 0;
    while (sgn(pq[shift]) == 0) ++shift;
    const Polynomial stripped(std::vector<Rational>(pq.coeffs().begin() + static_cast<long>(shift), pq.coeffs().end()));

    TrialResult t;
    t.seed = seed;
    t.instance = Json{{"p", to_json(sp)}, {"q", to_json(sq)}, {"a", to_string(a)}};
    t.expected = "normal(p), normal(q), normal(pq), oracle agrees, v = 1";
    const bool closure = is_normal(p) && is_normal(q) && is_normal(pq);
    const bool oracle = normal_via_properties(pq).is_normal == is_normal(pq);
    const std::size_t v = closure ? normal_changes_value(stripped, a) : 0;
    t.observed_v = v;
    t.has_v = closure;
    t.status = closure && oracle && v == 1 ? CheckStatus::Passed : CheckStatus::Failed;
    return t;
}

/// bernstein_expand(bernstein_coeffs(p)) == p, plus sign-variation transfer.
inline TrialResult run_bernq_trial(const CampaignConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    IntervalLR iv = random_interval(rng);
    const auto deg = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(cfg.degree_bound)));
    const auto n = static_cast<std::size_t>(uniform_int(rng, static_cast<long>(deg), static_cast<long>(cfg.degree_bound)));
    const Polynomial p = random_polynomial(rng, deg, cfg.generator.max_denominator);
    const BernsteinCoeffs bc = bernstein_coeffs(p, iv.l(), iv.r(), n);
    const std::size_t vb = sign_changes(bc.b);
    const std::size_t vm = sign_changes(mobius(p, iv.l(), iv.r(), n));

    TrialResult t;
    t.seed = seed;
    t.instance = Json{{"poly", to_string(p)}, {"interval", to_json(iv)}, {"n", n}};
    t.expected = "expand(coeffs(p)) = p, equal variation counts";
    t.observed_v = vb;
    t.has_v = true;
    t.status = bernstein_expand(bc) == p && vb == vm ? CheckStatus::Passed : CheckStatus::Failed;
    return t;
}

}  // namespace detail

inline CheckReport run_campaign(const CampaignConfig& cfg) {
    if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (cfg.degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
    if (cfg.p_count.has_value() != cfg.q_count.has_value())
        throw std::invalid_argument("p and q counts must be given together");
    std::vector<ObreshkoffConfig> table;
    if (cfg.kind == CampaignKind::Obreshkoff && !cfg.p_count) {
        table = obreshkoff_table(cfg.degree_bound, cfg.path);
        if (table.empty()) throw std::invalid_argument("no Obreshkoff configuration fits the degree bound");
    }

    std::vector<detail::TrialResult> results(cfg.trials);
    std::vector<std::exception_ptr> errors(cfg.trials);
    auto work = [&](std::size_t worker) {
        for (std::size_t i = worker; i < cfg.trials; i += cfg.jobs) {
            const std::uint64_t seed = trial_seed(cfg.seed, i);
            try {
                switch (cfg.kind) {
                    case CampaignKind::ThreeCircles1: results[i] = detail::run_case1_trial(cfg, seed); break;
                    case CampaignKind::ThreeCircles2: results[i] = detail::run_case2_trial(cfg, seed); break;
                    case CampaignKind::Obreshkoff: results[i] = detail::run_obreshkoff_trial(cfg, i, seed, table); break;
                    case CampaignKind::NormalClosure: results[i] = detail::run_normal_trial(cfg, seed); break;
                    case CampaignKind::BernqOracle: results[i] = detail::run_bernq_trial(cfg, seed); break;
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (cfg.jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < cfg.jobs; ++w) pool.emplace_back(work, w);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    CheckReport report;
    report.trials = cfg.trials;
    for (auto& t : results) {
        report.trial_seeds.push_back(t.seed);
        report.generator_rejections += t.generator_rejections;
        if (t.has_v) ++report.v_histogram[t.observed_v];
        switch (t.status) {
            case CheckStatus::Passed: ++report.passed; break;
            case CheckStatus::Skipped: ++report.skipped_boundary; break;
            case CheckStatus::Rejected: ++report.rejected; break;
            case CheckStatus::Failed:
                report.failures.push_back({t.seed, std::move(t.instance), t.observed_v, std::move(t.expected)});
                break;
        }
    }
    return report;
}

inline Json to_json(const CheckReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back(
            {{"seed", f.seed}, {"instance", f.instance}, {"observed_v", f.observed_v}, {"expected", f.expected}});
    Json hist = Json::object();
    for (const auto& [v, c] : r.v_histogram) hist[std::to_string(v)] = c;
    return Json{{"trials", r.trials},
                {"passed", r.passed},
                {"failures", failures},
                {"skipped_boundary", r.skipped_boundary},
                {"rejected", r.rejected},
                {"generator_rejections", r.generator_rejections},
                {"v_histogram", hist},
                {"trial_seeds", r.trial_seeds}};
}

}  // namespace threecircles
