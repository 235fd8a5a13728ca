#include "rfs2/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rfs2/dp.hpp"
#include "rfs2/johnson.hpp"

namespace rfs2 {
namespace {

MachineRoute identity_route(const Instance& instance) {
    MachineRoute route(instance.jobs.size());
    std::iota(route.begin(), route.end(), 0);
    return route;
}

}  // namespace

PermutationOracleResult brute_force_permutation(const Instance& instance, int limit,
                                                bool johnson_local_only) {
    if (instance.n() > limit) {
        throw LimitError("permutation oracle is limited to " + std::to_string(limit) + " jobs");
    }
    PermutationOracleResult best;
    best.makespan = kNoTime;
    // Lexicographic enumeration plus strict improvement keeps the
    // lexicographically smallest optimal route.
    MachineRoute route = identity_route(instance);
    do {
        if (johnson_local_only && !is_johnson_local(instance, route)) continue;
        Time makespan = evaluate_permutation(instance, route).makespan;
        if (makespan < best.makespan) {
            best.makespan = makespan;
            best.route = route;
        }
    } while (std::next_permutation(route.begin(), route.end()));
    return best;
}

PairOracleResult brute_force_pairs(const Instance& instance, int limit) {
    if (instance.n() > limit) {
        throw LimitError("pair oracle is limited to " + std::to_string(limit) + " jobs");
    }
    PairOracleResult best;
    best.makespan = kNoTime;
    MachineRoute route_a = identity_route(instance);
    do {
        MachineRoute route_b = identity_route(instance);
        do {
            Time makespan = evaluate_pair(instance, route_a, route_b).makespan;
            if (makespan < best.makespan) {
                best.makespan = makespan;
                best.route_a = route_a;
                best.route_b = route_b;
            }
        } while (std::next_permutation(route_b.begin(), route_b.end()));
    } while (std::next_permutation(route_a.begin(), route_a.end()));
    return best;
}

bool is_johnson_local(const Instance& instance, const MachineRoute& route) {
    std::vector<int> last_seen(instance.g() + 1, -1);
    for (int id : route) {
        const Job& job = instance.jobs[id];
        int prev = last_seen[job.node];
        if (prev >= 0 && !proper_before(instance.jobs[prev], job)) {
            return false;
        }
        last_seen[job.node] = id;
    }
    return true;
}

bool verify_theorem1(const Instance& instance) {
    return brute_force_pairs(instance).makespan == brute_force_permutation(instance).makespan;
}

bool verify_theorem2(const Instance& instance) {
    if (instance.n() > kPermutationOracleLimit) {
        throw LimitError("permutation oracle is limited to " +
                         std::to_string(kPermutationOracleLimit) + " jobs");
    }
    MachineRoute route = identity_route(instance);
    Time best = kNoTime;
    bool local_optimum = false;
    do {
        Time makespan = evaluate_permutation(instance, route).makespan;
        if (makespan < best) {
            best = makespan;
            local_optimum = is_johnson_local(instance, route);
        } else if (makespan == best && !local_optimum) {
            local_optimum = is_johnson_local(instance, route);
        }
    } while (std::next_permutation(route.begin(), route.end()));
    return local_optimum;
}

bool verify_dp(const Instance& instance, Time rig_offset) {
    PermutationOracleResult oracle = brute_force_permutation(instance);
    SolveResult result = solve(instance);
    if (result.makespan + rig_offset != oracle.makespan) {
        return false;
    }
    if (!check_feasible(instance, result.schedule).empty()) {
        return false;
    }
    return result.schedule.makespan == result.makespan;
}

}  // namespace rfs2
