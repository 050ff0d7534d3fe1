#pragma once

#include <string>
#include <vector>

#include "crossflow/model.hpp"

namespace crossflow {

struct ControllerParams {
    double alpha = 0.25;      // green seconds granted per unit of weight
    int g_min = 10;           // shortest green, seconds
    int g_max = 60;           // longest green, seconds
    int t_starve = 100;       // continuous red beyond this forces service
    int emergency_green = 30; // fixed green for preempted phases
    int lane_reference = 2;   // lane count at which the lane factor is 1

    std::vector<Violation> validate() const;
};

enum class Cause { MaxWeight, StarvationOverride, Emergency, StaticSchedule };

const char* to_string(Cause cause);

// One controller decision: which approach gets full green, which neighbor
// gets a left-turn green alongside it, and for how long.
struct PhasePlan {
    int chosen = 0;
    int companion = 0;  // 0 when the junction is too small to pair
    int duration = 0;   // seconds
    Cause cause = Cause::MaxWeight;
};

// Fixed-cycle baseline: a repeating order of approaches with fixed splits.
struct StaticSchedule {
    std::vector<int> order;   // permutation of 1..N
    std::vector<int> splits;  // green seconds per position in `order`
    int cycle = 0;            // seconds; checked against splits (+ clearance)

    static StaticSchedule defaults_for(int n);
    std::vector<Violation> validate(int n, const ControllerParams& params,
                                    int clearance) const;
};

// Priority score: density x popularity x (lanes / lane_reference). With the
// default popularity and reference lane count the weight equals the density.
double effective_weight(const ApproachState& state, const ApproachSpec& spec,
                        const ControllerParams& params);

struct WeightedApproach {
    int id = 0;
    double weight = 0.0;
};

struct Selection {
    int id = 0;
    Cause cause = Cause::MaxWeight;
};

// Starved approaches (red_duration >= t_starve) take priority, longest red
// first; otherwise the largest weight wins. Ties go to the lowest id.
// Throws std::invalid_argument on an empty list.
Selection select_approach(const std::vector<WeightedApproach>& weights,
                          const std::vector<ApproachState>& states,
                          const ControllerParams& params);

// The approach granted left-turn green next to `chosen`: its predecessor,
// wrapping around to n for approach 1. Throws on out-of-range ids.
int companion_of(int chosen, int n);

// Green duration proportional to the winning weight, clamped to [g_min, g_max].
int green_time(double max_weight, const ControllerParams& params);

// Full dynamic decision for the next phase. Emergencies preempt everything;
// otherwise starvation is checked, then max weight. The returned duration is
// additionally capped so that every waiting approach can still be served
// within t_starve + g_max + clearance of continuous red (see fairness_cap).
PhasePlan plan_next_phase(const std::vector<ApproachState>& states,
                          const JunctionSpec& junction,
                          const ControllerParams& params,
                          const std::vector<int>& active_emergencies);

// Baseline decision: position phase_index mod N of the schedule.
PhasePlan static_next_phase(const StaticSchedule& schedule, long phase_index,
                            const ControllerParams& params);

// Largest green duration that keeps the continuous-red bound satisfiable for
// every non-chosen approach, assuming later service in longest-red-first
// order at minimal phase lengths. Large (never binding) while reds are low.
int fairness_cap(const std::vector<ApproachState>& states, int chosen,
                 const ControllerParams& params, int clearance);

// The bound the dynamic controller guarantees on continuous red time in the
// absence of emergencies, provided the junction satisfies
// t_starve + g_max + clearance >= N * (g_min + clearance).
inline int starvation_bound(const ControllerParams& params, int clearance) {
    return params.t_starve + params.g_max + 2 * clearance;
}

}  // namespace crossflow
