#pragma once

// Real root isolation by bisection with Descartes' rule of signs.
//
// Each interval (lo, hi) gets v = sign_changes(mobius(p, lo, hi)). v = 0
// discards it, v = 1 emits it as isolating, anything larger splits at the
// exact midpoint. The theorem of three circles guarantees that small enough
// intervals land in one of the two terminating cases, so for squarefree p the
// recursion stops; max_depth only guards against misuse.

#include "threecircles/polynomial.hpp"
#include "threecircles/regions.hpp"
#include "threecircles/signs.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace threecircles {

struct OpenInterval {
    Rational lo;
    Rational hi;
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

struct IsolationResult {
    std::vector<Rational> exact_roots;    // ascending
    std::vector<OpenInterval> intervals;  // ascending, disjoint, each with v = 1
    std::size_t depth_reached = 0;
    std::size_t node_count = 0;
};

struct IsolatorConfig {
    std::size_t max_depth = 64;
};

class DepthExhausted : public std::runtime_error {
public:
    explicit DepthExhausted(IsolationResult partial)
        : std::runtime_error("isolation exceeded the maximum bisection depth"), partial_(std::move(partial)) {}
    const IsolationResult& partial() const { return partial_; }

private:
    IsolationResult partial_;
};

/// Number of sign variations of the Moebius transform of p to (l, r).
inline std::size_t descartes_count(const Polynomial& p, const IntervalLR& iv) {
    return sign_changes(mobius(p, iv.l(), iv.r()));
}

/// Called once per visited node with its interval, depth and variation count.
using NodeObserver = std::function<void(const IntervalLR&, std::size_t depth, std::size_t v)>;

inline IsolationResult isolate(const Polynomial& p, const IntervalLR& iv, const IsolatorConfig& cfg = {},
                               const NodeObserver& observer = {}) {
    if (p.is_zero()) throw std::invalid_argument("isolate: zero polynomial");
    if (cfg.max_depth < 1) throw std::invalid_argument("isolate: max_depth must be at least 1");
    if (!is_squarefree(p)) throw std::invalid_argument("isolate: polynomial is not squarefree");
    if (is_root(p, iv.l()) || is_root(p, iv.r())) throw std::invalid_argument("isolate: interval endpoint is a root");

    IsolationResult out;
    std::deque<std::pair<IntervalLR, std::size_t>> queue;
    queue.emplace_back(iv, 0);
    bool exhausted = false;
    while (!queue.empty()) {
        auto [cur, depth] = std::move(queue.front());
        queue.pop_front();
        ++out.node_count;
        out.depth_reached = std::max(out.depth_reached, depth);
        const std::size_t v = descartes_count(p, cur);
        if (observer) observer(cur, depth, v);
        if (v == 0) continue;
        if (v == 1) {
            out.intervals.push_back({cur.l(), cur.r()});
            continue;
        }
        if (depth >= cfg.max_depth) {
            exhausted = true;
            continue;
        }
        Rational m = cur.midpoint();
        if (is_root(p, m)) out.exact_roots.push_back(m);
        queue.emplace_back(IntervalLR(cur.l(), m), depth + 1);
        queue.emplace_back(IntervalLR(m, cur.r()), depth + 1);
    }
    std::sort(out.exact_roots.begin(), out.exact_roots.end());
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const OpenInterval& a, const OpenInterval& b) { return a.lo < b.lo; });
    if (exhausted) throw DepthExhausted(std::move(out));
    return out;
}

/// isolate() on the squarefree part of p.
inline IsolationResult isolate_squarefree(const Polynomial& p, const IntervalLR& iv, const IsolatorConfig& cfg = {}) {
    return isolate(squarefree_part(p), iv, cfg);
}

}  // namespace threecircles
