#include "rfs2/johnson.hpp"

#include <algorithm>

namespace rfs2 {

PriorityVector priority_vector(const Job& job) {
    if (job.a <= job.b) {
        return {1, job.a, job.id};
    }
    return {2, -job.b, job.id};
}

bool proper_before(const Job& x, const Job& y) {
    return priority_vector(x) < priority_vector(y);
}

std::vector<Job> proper_order(std::vector<Job> jobs) {
    std::sort(jobs.begin(), jobs.end(), proper_before);
    return jobs;
}

BlockStats f2_stats(std::span<const Job> jobs) {
    BlockStats stats;
    Time done_a = 0;
    Time done_b = 0;
    for (const Job& job : jobs) {
        done_a += job.a;
        done_b = std::max(done_b, done_a) + job.b;
        stats.l1 += job.a;
        stats.l2 += job.b;
    }
    stats.cmax = done_b;
    stats.delta = stats.cmax - stats.l2;
    return stats;
}

BlockStats johnson_optimal(std::vector<Job> jobs) {
    jobs = proper_order(std::move(jobs));
    return f2_stats(jobs);
}

}  // namespace rfs2
