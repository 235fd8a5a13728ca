#pragma once
// Networkless two-machine flow shop core: job priority vectors, the proper
// (priority) order, and makespan statistics of job blocks.

#include <span>
#include <vector>

#include "rfs2/instance.hpp"

namespace rfs2 {

// Sort key of a job. Jobs with a <= b come first ordered by ascending a,
// then jobs with a > b ordered by descending b; the job id breaks ties, so
// comparing priority vectors is a strict total order on distinct jobs.
struct PriorityVector {
    int cls = 1;       // 1 if a <= b, else 2
    Time key = 0;      // a when cls == 1, -b when cls == 2
    int tiebreak = 0;  // job id

    friend auto operator<=>(const PriorityVector&, const PriorityVector&) = default;
};

PriorityVector priority_vector(const Job& job);

// True when x precedes y in the proper order.
bool proper_before(const Job& x, const Job& y);

// The input multiset sorted by ascending priority vector.
std::vector<Job> proper_order(std::vector<Job> jobs);

// Two-machine flow shop statistics of a job sequence processed in the given
// order: total workloads, makespan of the order, and the tail the second
// machine adds past its own workload.
struct BlockStats {
    Time l1 = 0;      // sum of a
    Time l2 = 0;      // sum of b
    Time cmax = 0;    // flow shop makespan of this order
    Time delta = 0;   // cmax - l2, always >= 0

    friend bool operator==(const BlockStats&, const BlockStats&) = default;
};

// Evaluates the sequence with the classic recurrence
//   C_A(t) = C_A(t-1) + a_t,  C_B(t) = max(C_B(t-1), C_A(t)) + b_t.
// Empty sequence yields all zeros.
BlockStats f2_stats(std::span<const Job> sequence);

// Stats of the properly ordered jobs; cmax is then the minimum over all
// processing orders.
BlockStats johnson_optimal(std::vector<Job> jobs);

}  // namespace rfs2
