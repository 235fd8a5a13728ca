#pragma once
// Dense schedules for given machine routes.
//
// A route is an order of all jobs; it implies the node route start-depot ->
// job nodes -> finish-depot, where consecutive jobs at the same node cost
// rho[v][v] = 0 travel. In a dense schedule each machine departs the depot
// once (A at time 0, B at time r) and then travels and processes with no
// idle time. The offset r_hat is the least r making the dense schedule
// feasible; at that offset the dense schedule is as long as the earliest-
// start schedule for the same routes.

#include <string>
#include <vector>

#include "rfs2/instance.hpp"

namespace rfs2 {

// Job ids in processing order; must contain every job of the instance once.
using MachineRoute = std::vector<int>;

struct Schedule {
    MachineRoute route_a;
    MachineRoute route_b;
    Time r = 0;                  // machine B depot departure time
    std::vector<Time> start_a;   // indexed by job id
    std::vector<Time> start_b;   // indexed by job id
    Time makespan = 0;           // time machine B reaches the finish-depot
};

// Least feasible B departure offset, floored at 0: the maximum over jobs j of
//   (A's travel+work up to and including j) - (B's travel+work strictly before j).
Time r_hat(const Instance& instance, const MachineRoute& route_a, const MachineRoute& route_b);

// Dense schedule for an explicit offset r; infeasible for r < r_hat.
Schedule dense_schedule(const Instance& instance, const MachineRoute& route_a,
                        const MachineRoute& route_b, Time r);

// Dense schedule at r_hat (the shortest feasible one for these routes).
Schedule evaluate_pair(const Instance& instance, const MachineRoute& route_a,
                       const MachineRoute& route_b);

// Both machines follow the same route pi.
Schedule evaluate_permutation(const Instance& instance, const MachineRoute& pi);

// Checks every schedule invariant against the instance: routes are
// permutations of the jobs, machine A departs at time >= 0 and B at >= r,
// consecutive operations are separated by the required travel, B starts each
// job only after A finished it, and makespan equals B's last completion plus
// the travel to the finish-depot. Returns one line per violation.
std::vector<std::string> check_feasible(const Instance& instance, const Schedule& schedule);

// Schedule document (JSON):
//   {"makespan":M,"r":R,"route":[jobIds],"ops":[{"job":j,"startA":s1,"startB":s2},...]}
// "route" is the common route of a permutation schedule (machine B's order).
std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const Instance& instance, const std::string& text);

}  // namespace rfs2
