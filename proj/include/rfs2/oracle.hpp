#pragma once
// Brute-force reference solvers and the cross-checks built on them. All of
// them enumerate factorially many schedules, so they carry hard size limits
// and exist to validate the solver on small instances, not to be fast.

#include <stdexcept>

#include "rfs2/instance.hpp"
#include "rfs2/schedule.hpp"

namespace rfs2 {

// An oracle was asked for more jobs than its enumeration can afford.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kPermutationOracleLimit = 8;  // n! permutations
inline constexpr int kPairOracleLimit = 5;         // (n!)^2 route pairs

struct PermutationOracleResult {
    Time makespan = 0;
    MachineRoute route;  // lexicographically smallest optimal permutation
};

struct PairOracleResult {
    Time makespan = 0;
    MachineRoute route_a;
    MachineRoute route_b;
};

// Best schedule in which both machines follow the same job permutation:
// evaluates all n! permutations at their earliest feasible B departure.
// Throws LimitError when n exceeds limit.
PermutationOracleResult brute_force_permutation(const Instance& instance,
                                                int limit = kPermutationOracleLimit,
                                                bool johnson_local_only = false);

// Best schedule over all pairs of machine routes, (n!)^2 dense schedules.
// Throws LimitError when n exceeds limit.
PairOracleResult brute_force_pairs(const Instance& instance, int limit = kPairOracleLimit);

// Whether each node's jobs appear in route in proper order (as a
// subsequence of the whole permutation).
bool is_johnson_local(const Instance& instance, const MachineRoute& route);

// Permutation schedules are dominant: the pair oracle finds nothing better
// than the permutation oracle.
bool verify_theorem1(const Instance& instance);

// Among all optimal permutations, at least one has every node's jobs in
// proper order. Checked by exhaustive enumeration.
bool verify_theorem2(const Instance& instance);

// Solver against the permutation oracle, plus feasibility of the solver's
// witness schedule. rig_offset shifts the solver's makespan before the
// comparison; nonzero values exist to prove the check can fail.
bool verify_dp(const Instance& instance, Time rig_offset = 0);

}  // namespace rfs2
