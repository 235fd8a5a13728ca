#pragma once
// Shared fixtures: tiny hand-built instances plus independent
// re-implementations used to cross-check the library.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "rfs2/dp.hpp"
#include "rfs2/instance.hpp"

namespace rfs2::testing {

// (g+2) x (g+2) all-zero distances: the networkless flow shop special case.
inline ReducedNetwork zero_network(int g) {
    ReducedNetwork net;
    net.g = g;
    net.rho.assign(g + 2, std::vector<Time>(g + 2, 0));
    return net;
}

struct JobSpec {
    int node;
    Time a;
    Time b;
};

inline Instance instance_of(ReducedNetwork net, const std::vector<JobSpec>& specs) {
    std::vector<Job> jobs;
    jobs.reserve(specs.size());
    for (const JobSpec& js : specs) {
        Job job;
        job.node = js.node;
        job.a = js.a;
        job.b = js.b;
        jobs.push_back(job);
    }
    return make_instance(std::move(net), std::move(jobs));
}

// Exhaustive two-machine flow shop optimum over all processing orders, with
// the completion recurrence written out again rather than calling f2_stats.
inline Time exhaustive_f2_min(const std::vector<Job>& jobs) {
    std::vector<std::size_t> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    Time best = kNoTime;
    do {
        Time done_a = 0;
        Time done_b = 0;
        for (std::size_t idx : order) {
            done_a += jobs[idx].a;
            done_b = std::max(done_b, done_a) + jobs[idx].b;
        }
        best = std::min(best, done_b);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Frontier shape: f1 strictly ascending, f2 strictly descending, head at 0.
inline bool frontier_ok(const ParetoList& list) {
    if (list.size() == 0 || list.front().f1 != 0) return false;
    for (std::size_t i = 1; i < list.size(); ++i) {
        if (list[i - 1].f1 >= list[i].f1) return false;
        if (list[i - 1].f2 <= list[i].f2) return false;
    }
    return true;
}

// The mathematical Pareto-minimal subset of the offered points plus the
// dummy head, computed from scratch: sort, then sweep keeping strict
// improvements in f2 and the best representative of each f1.
inline std::vector<std::pair<Time, Time>> reference_frontier(
    std::vector<std::pair<Time, Time>> points) {
    points.emplace_back(0, kNoTime);
    std::sort(points.begin(), points.end());
    std::vector<std::pair<Time, Time>> out;
    for (const auto& p : points) {
        if (!out.empty() && p.first == out.back().first) continue;
        if (out.empty() || p.second < out.back().second) out.push_back(p);
    }
    return out;
}

inline std::vector<std::pair<Time, Time>> live_values(const ParetoList& list) {
    std::vector<std::pair<Time, Time>> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        out.emplace_back(list[i].f1, list[i].f2);
    }
    return out;
}

}  // namespace rfs2::testing
