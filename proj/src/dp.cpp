#include "rfs2/dp.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace rfs2 {

std::vector<ConfigKey> enumerate_configs(const Instance& instance) {
    const int g = instance.g();
    const int n = instance.n();
    std::vector<ConfigKey> configs;
    std::vector<int> counts(g, 0);
    // Depth-first over the count vector, one pass per norm; choosing the
    // first positions' counts in ascending order yields lexicographic order.
    for (int norm = 1; norm <= n; ++norm) {
        auto fill = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == g) {
                if (remaining == 0) {
                    for (int i = 1; i <= g; ++i) {
                        if (counts[i - 1] > 0) {
                            configs.push_back({counts, i});
                        }
                    }
                }
                return;
            }
            const int cap = std::min(instance.n_per_node[pos], remaining);
            for (int c = 0; c <= cap; ++c) {
                counts[pos] = c;
                self(self, pos + 1, remaining - c);
            }
            counts[pos] = 0;
        };
        fill(fill, 0, norm);
    }
    return configs;
}

std::vector<ConfigKey> pre_configs(const ConfigKey& key, int d) {
    const int g = static_cast<int>(key.counts.size());
    const int star = key.last_node;
    if (star < 1 || star > g) {
        throw std::out_of_range("last_node out of range");
    }
    if (d < 1 || d > key.counts[star - 1]) {
        throw std::out_of_range("block size out of range");
    }
    ConfigKey base;
    base.counts = key.counts;
    base.counts[star - 1] -= d;

    std::vector<ConfigKey> result;
    if (std::all_of(base.counts.begin(), base.counts.end(), [](int c) { return c == 0; })) {
        base.last_node = 0;  // the initial configuration
        result.push_back(std::move(base));
        return result;
    }
    // The previous block ended at a different node (same-node blocks are
    // maximal, so i' = i* never occurs).
    for (int i = 1; i <= g; ++i) {
        if (i == star || base.counts[i - 1] == 0) continue;
        ConfigKey pre = base;
        pre.last_node = i;
        result.push_back(std::move(pre));
    }
    return result;
}

Extension extend(const ParetoPoint& from, Time travel, const BlockStats& stats) {
    Extension ext;
    ext.point.f1 = from.f1 + travel + stats.l1;
    if (from.f2 == kNoTime) {
        // Dummy source: infinite slack, type (a), still worthless.
        ext.point.f2 = kNoTime;
        return ext;
    }
    if (from.f2 - from.f1 >= stats.delta) {
        ext.point.f2 = from.f2 + travel + stats.l2;
    } else {
        ext.point.f2 = from.f1 + travel + stats.cmax;
        ext.type_b = true;
    }
    return ext;
}

ParetoList::ParetoList() {
    arena_.push_back(ParetoPoint{0, kNoTime, -1, -1, 0});
    live_.push_back(0);
}

void ParetoList::reset_control() { control_ = 0; }

bool ParetoList::merge(ParetoPoint candidate) {
    while (control_ + 1 < live_.size() && arena_[live_[control_ + 1]].f1 <= candidate.f1) {
        ++control_;
    }
    const ParetoPoint& control = arena_[live_[control_]];
    if (control.f2 <= candidate.f2) {
        return false;
    }
    // The control element falls into the removal range exactly when it ties
    // the candidate's f1; at a strictly smaller f1 it survives.
    std::size_t rs = control.f1 == candidate.f1 ? control_ : control_ + 1;
    std::size_t re = rs;
    while (re < live_.size() && arena_[live_[re]].f2 >= candidate.f2) {
        ++re;
    }
    removed_ += re - rs;
    auto arena_idx = static_cast<std::int32_t>(arena_.size());
    arena_.push_back(candidate);
    ++inserted_;
    live_.erase(live_.begin() + static_cast<std::ptrdiff_t>(rs),
                live_.begin() + static_cast<std::ptrdiff_t>(re));
    live_.insert(live_.begin() + static_cast<std::ptrdiff_t>(rs), arena_idx);
    control_ = rs;
    return true;
}

ScanOutcome scan_preconfig(const ParetoList& source, Time travel, const BlockStats& stats,
                           std::int32_t src_config, std::int32_t d, ParetoList& target) {
    ScanOutcome outcome;
    target.reset_control();
    for (std::size_t pos = 0; pos < source.size(); ++pos) {
        const ParetoPoint& from = source[pos];
        if (from.f2 == kNoTime) continue;  // dummy head anchors the list only
        ++outcome.consumed;
        Extension ext = extend(from, travel, stats);
        ext.point.src_config = src_config;
        ext.point.src_point = source.arena_index(pos);
        ext.point.block_size = d;
        target.merge(ext.point);
        if (ext.type_b) {
            // Later source points have larger f1 and no more slack, so their
            // extensions are dominated by this one.
            outcome.stopped_type_b = true;
            break;
        }
    }
    return outcome;
}

SolveResult solve(const Instance& instance) {
    {
        std::vector<std::string> issues = validate(instance);
        if (!issues.empty()) {
            std::string message = "invalid instance:";
            for (const std::string& issue : issues) {
                message += "\n  " + issue;
            }
            throw ValidationError(message);
        }
    }
    const int g = instance.g();
    const ReducedNetwork& net = instance.network;

    // Proper numbering of each node's jobs: blocks are always contiguous
    // ranges of this order.
    std::vector<std::vector<Job>> ordered(g);
    for (const Job& job : instance.jobs) {
        ordered[job.node - 1].push_back(job);
    }
    for (auto& jobs : ordered) {
        jobs = proper_order(std::move(jobs));
    }

    // blocks[v-1][lo][len-1] = stats of node v's properly ordered jobs [lo, lo+len).
    std::vector<std::vector<std::vector<BlockStats>>> blocks(g);
    for (int v = 1; v <= g; ++v) {
        const std::span<const Job> jobs(ordered[v - 1]);
        blocks[v - 1].resize(jobs.size());
        for (std::size_t lo = 0; lo < jobs.size(); ++lo) {
            for (std::size_t hi = lo + 1; hi <= jobs.size(); ++hi) {
                blocks[v - 1][lo].push_back(f2_stats(jobs.subspan(lo, hi - lo)));
            }
        }
    }

    std::vector<ConfigKey> configs = enumerate_configs(instance);

    // Mixed-radix code of (counts, last_node) for O(1) configuration lookup.
    std::vector<std::int64_t> radix(g);
    std::int64_t span = 1;
    for (int v = 0; v < g; ++v) {
        radix[v] = span;
        span *= instance.n_per_node[v] + 1;
    }
    auto code_of = [&](const ConfigKey& key) {
        std::int64_t code = 0;
        for (int v = 0; v < g; ++v) {
            code += radix[v] * key.counts[v];
        }
        return code * (g + 1) + key.last_node;
    };
    std::vector<std::int32_t> config_index(static_cast<std::size_t>(span) * (g + 1), -1);
    for (std::size_t idx = 0; idx < configs.size(); ++idx) {
        config_index[code_of(configs[idx])] = static_cast<std::int32_t>(idx);
    }

    // lists[idx] belongs to configs[idx]; the extra slot at the end is the
    // initial configuration with its single point (0, 0).
    std::vector<ParetoList> lists(configs.size() + 1);
    const auto initial_index = static_cast<std::int32_t>(configs.size());
    lists[initial_index].merge(ParetoPoint{0, 0, -1, -1, 0});

    SolveStats solve_stats;
    solve_stats.configs = configs.size();
    solve_stats.max_list_size = 1;

    // Norms ascend along configs, so every pre-configuration's list is
    // complete before it is scanned.
    for (std::size_t idx = 0; idx < configs.size(); ++idx) {
        const ConfigKey& key = configs[idx];
        const int star = key.last_node;
        const int have = key.counts[star - 1];
        ParetoList& target = lists[idx];
        for (int d = 1; d <= have; ++d) {
            const BlockStats& stats = blocks[star - 1][have - d][d - 1];
            for (const ConfigKey& pre : pre_configs(key, d)) {
                std::int32_t src = pre.last_node == 0 ? initial_index
                                                      : config_index[code_of(pre)];
                if (src < 0) {
                    throw std::logic_error("pre-configuration missing from the enumeration");
                }
                const Time travel = net.dist(pre.last_node, star);
                ScanOutcome outcome = scan_preconfig(lists[src], travel, stats, src,
                                                     d, target);
                if (outcome.stopped_type_b) {
                    ++solve_stats.type_b_extensions;
                }
            }
        }
        solve_stats.max_list_size = std::max(solve_stats.max_list_size, target.size());
    }

    // A full configuration's best completion is its last point (least f2);
    // the makespan adds the drive to the finish-depot.
    Time best = kNoTime;
    std::int32_t best_config = -1;
    for (std::size_t idx = 0; idx < configs.size(); ++idx) {
        const ConfigKey& key = configs[idx];
        if (key.counts != instance.n_per_node) continue;
        const ParetoPoint& last = lists[idx].back();
        if (last.f2 == kNoTime) continue;
        Time total = last.f2 + net.dist(key.last_node, net.finish());
        if (total < best) {
            best = total;
            best_config = static_cast<std::int32_t>(idx);
        }
    }
    if (best_config < 0) {
        throw std::logic_error("no full configuration was reached");
    }

    // Walk the provenance chain back to the seed, emitting blocks.
    MachineRoute route;
    std::int32_t cfg = best_config;
    const ParetoPoint* cur = &lists[best_config].back();
    while (cur->block_size > 0) {
        const ConfigKey& key = configs[cfg];
        const int star = key.last_node;
        const int have = key.counts[star - 1];
        for (int pos = have - 1; pos >= have - cur->block_size; --pos) {
            route.push_back(ordered[star - 1][pos].id);
        }
        cfg = cur->src_config;
        cur = &lists[cfg].arena_at(cur->src_point);
    }
    std::reverse(route.begin(), route.end());

    Schedule schedule = evaluate_permutation(instance, route);
    if (schedule.makespan != best) {
        throw std::logic_error("reconstructed schedule does not reproduce the optimum");
    }

    for (const ParetoList& list : lists) {
        solve_stats.points_inserted += list.inserted();
        solve_stats.points_removed += list.removed();
    }

    SolveResult result;
    result.makespan = best;
    result.route = std::move(route);
    result.schedule = std::move(schedule);
    result.stats = solve_stats;
    return result;
}

}  // namespace rfs2
