#pragma once
// Exact solver.
//
// The search space is restricted to permutation schedules in which every
// node's jobs are processed in the proper order. Such a schedule decomposes
// into steps: maximal blocks of consecutive jobs at one node. A partial
// schedule is summarized by a configuration (K, i*): K counts the completed
// jobs per node (always an initial segment of the node's proper numbering)
// and i* is the node of the last block. Per configuration the solver keeps
// the Pareto frontier of (F1, F2) pairs - the completion times of the
// partial schedule on machines A and B - as a list with strictly increasing
// F1 and strictly decreasing F2. Configurations are filled in non-decreasing
// order of the total completed-job count, each from its pre-configurations
// (remove a block of d jobs at i*, end at another node i'), and the optimum
// is read off the full configurations plus the travel to the finish-depot.

#include <cstdint>
#include <vector>

#include "rfs2/instance.hpp"
#include "rfs2/johnson.hpp"
#include "rfs2/schedule.hpp"

namespace rfs2 {

struct ConfigKey {
    std::vector<int> counts;  // counts[v-1] = completed jobs at node v, in [0, n_v]
    int last_node = 0;        // i* in [1..g]; 0 only for the two special configurations

    friend bool operator==(const ConfigKey&, const ConfigKey&) = default;
};

// Every basic configuration exactly once: grouped by ascending sum of counts,
// within a group counts lexicographically ascending, within one counts vector
// all last_node values with a positive count, ascending.
std::vector<ConfigKey> enumerate_configs(const Instance& instance);

// Predecessor configurations of key when the last step processed d jobs at
// key.last_node: counts drop by d at last_node; the previous block ended at
// some other node i' that already has completed jobs, or the step started
// from the initial configuration when nothing else was done.
// Throws std::out_of_range unless 1 <= d <= counts[last_node-1].
std::vector<ConfigKey> pre_configs(const ConfigKey& key, int d);

struct ParetoPoint {
    Time f1 = 0;
    Time f2 = 0;  // kNoTime marks the dummy list head (0, infinity)

    // Provenance of the extension that created the point, for reconstruction.
    std::int32_t src_config = -1;  // storage index of the pre-configuration
    std::int32_t src_point = -1;   // arena index of the source point there
    std::int32_t block_size = 0;   // d
};

struct Extension {
    ParetoPoint point;
    bool type_b = false;  // once true, later points of the same source list only get worse
};

// Appends a block (travel plus the block's flow shop stats) to a frontier
// point. When the source point's slack f2 - f1 covers the block's delta,
// machine B runs the block without waiting for A (type a); otherwise B is
// limited by A and the block's own makespan takes over (type b).
Extension extend(const ParetoPoint& from, Time travel, const BlockStats& stats);

// Pareto frontier of one configuration. Lives as an append-only arena of
// every point ever inserted plus the list of currently undominated ones
// sorted by ascending f1 (descending f2). A freshly constructed list holds
// the dummy head (0, kNoTime), so the first element always has f1 = 0.
// Merging scans from a control element that only moves forward, which makes
// a whole scan of candidates with non-decreasing f1 linear in the list size.
class ParetoList {
public:
    ParetoList();

    // Resets the control element to the list head. Call before each scan of
    // candidates with non-decreasing f1.
    void reset_control();

    // Inserts candidate unless its control element (the last live point with
    // f1 <= candidate.f1) is at least as good in f2; on insertion removes the
    // points the candidate majorizes. Returns whether it was inserted.
    bool merge(ParetoPoint candidate);

    std::size_t size() const { return live_.size(); }
    const ParetoPoint& operator[](std::size_t live_pos) const { return arena_[live_[live_pos]]; }
    const ParetoPoint& front() const { return (*this)[0]; }
    const ParetoPoint& back() const { return (*this)[live_.size() - 1]; }

    std::int32_t arena_index(std::size_t live_pos) const { return live_[live_pos]; }
    const ParetoPoint& arena_at(std::int32_t arena_idx) const { return arena_[arena_idx]; }

    std::size_t inserted() const { return inserted_; }
    std::size_t removed() const { return removed_; }

private:
    std::vector<ParetoPoint> arena_;     // never shrinks; arena indices stay valid
    std::vector<std::int32_t> live_;     // arena indices of the frontier, f1 ascending
    std::size_t control_ = 0;            // position in live_
    std::size_t inserted_ = 0;
    std::size_t removed_ = 0;
};

struct ScanOutcome {
    std::size_t consumed = 0;      // source points looked at
    bool stopped_type_b = false;   // scan ended early at a type (b) extension
};

// Extends every live point of source by (travel, stats) and merges the
// results into target, stopping right after the first type (b) extension.
// The dummy head is skipped, never extended. src_config/d are recorded as
// provenance on the merged points.
ScanOutcome scan_preconfig(const ParetoList& source, Time travel, const BlockStats& stats,
                           std::int32_t src_config, std::int32_t d, ParetoList& target);

struct SolveStats {
    std::size_t configs = 0;            // basic configurations enumerated
    std::size_t points_inserted = 0;    // frontier insertions over all lists
    std::size_t points_removed = 0;     // points dominated away after insertion
    std::size_t max_list_size = 0;      // largest live frontier
    std::size_t type_b_extensions = 0;  // scans cut short by a type (b) point
};

struct SolveResult {
    Time makespan = 0;
    MachineRoute route;    // optimal permutation, every node's jobs properly ordered
    Schedule schedule;     // dense schedule of route at its r_hat
    SolveStats stats;
};

// Optimal makespan over all schedules, with a witness schedule reconstructed
// from the frontier provenance. Throws ValidationError on invalid instances
// (including n = 0) and std::logic_error if the reconstruction does not
// reproduce the computed makespan.
SolveResult solve(const Instance& instance);

}  // namespace rfs2
