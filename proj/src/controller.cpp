#include "crossflow/controller.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crossflow {

const char* to_string(Cause cause) {
    switch (cause) {
        case Cause::MaxWeight: return "MaxWeight";
        case Cause::StarvationOverride: return "StarvationOverride";
        case Cause::Emergency: return "Emergency";
        case Cause::StaticSchedule: return "StaticSchedule";
    }
    return "?";
}

std::vector<Violation> ControllerParams::validate() const {
    std::vector<Violation> out;
    if (alpha <= 0.0) out.push_back({0, "alpha", "must be > 0"});
    if (g_min <= 0) out.push_back({0, "g_min", "must be > 0"});
    if (g_min > g_max) out.push_back({0, "g_min", "must be <= g_max"});
    if (t_starve <= g_max) out.push_back({0, "t_starve", "must be > g_max"});
    if (emergency_green < g_min || emergency_green > g_max) {
        out.push_back({0, "emergency_green", "must be within [g_min, g_max]"});
    }
    if (lane_reference < 1) out.push_back({0, "lane_reference", "must be >= 1"});
    return out;
}

StaticSchedule StaticSchedule::defaults_for(int n) {
    StaticSchedule s;
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 1);
    s.splits.assign(n, 30);
    s.cycle = 30 * n;
    return s;
}

std::vector<Violation> StaticSchedule::validate(int n, const ControllerParams& params,
                                                int clearance) const {
    std::vector<Violation> out;
    if (static_cast<int>(order.size()) != n) {
        out.push_back({0, "order", "must list every approach exactly once"});
    } else {
        std::set<int> ids(order.begin(), order.end());
        bool perm = static_cast<int>(ids.size()) == n && *ids.begin() == 1 && *ids.rbegin() == n;
        if (!perm) out.push_back({0, "order", "must be a permutation of 1..N"});
    }
    if (splits.size() != order.size()) {
        out.push_back({0, "splits", "must match order length"});
    }
    for (size_t i = 0; i < splits.size(); ++i) {
        if (splits[i] < params.g_min) {
            std::ostringstream msg;
            msg << "split " << splits[i] << " at position " << i + 1 << " below g_min";
            out.push_back({0, "splits", msg.str()});
        }
    }
    const int sum = std::accumulate(splits.begin(), splits.end(), 0);
    if (cycle != sum && cycle != sum + n * clearance) {
        std::ostringstream msg;
        msg << "cycle " << cycle << " matches neither sum of splits (" << sum
            << ") nor sum plus clearance (" << sum + n * clearance << ")";
        out.push_back({0, "cycle", msg.str()});
    }
    return out;
}

double effective_weight(const ApproachState& state, const ApproachSpec& spec,
                        const ControllerParams& params) {
    return state.density() * spec.popularity *
           (static_cast<double>(spec.lanes) / params.lane_reference);
}

Selection select_approach(const std::vector<WeightedApproach>& weights,
                          const std::vector<ApproachState>& states,
                          const ControllerParams& params) {
    if (weights.empty()) throw std::invalid_argument("no approaches");
    if (weights.size() != states.size()) {
        throw std::invalid_argument("weights and states length mismatch");
    }

    int starved = -1;
    for (size_t i = 0; i < states.size(); ++i) {
        if (states[i].red_duration < params.t_starve) continue;
        if (starved < 0 ||
            states[i].red_duration > states[starved].red_duration ||
            (states[i].red_duration == states[starved].red_duration &&
             weights[i].id < weights[starved].id)) {
            starved = static_cast<int>(i);
        }
    }
    if (starved >= 0) {
        return {weights[starved].id, Cause::StarvationOverride};
    }

    size_t best = 0;
    for (size_t i = 1; i < weights.size(); ++i) {
        if (weights[i].weight > weights[best].weight ||
            (weights[i].weight == weights[best].weight && weights[i].id < weights[best].id)) {
            best = i;
        }
    }
    return {weights[best].id, Cause::MaxWeight};
}

int companion_of(int chosen, int n) {
    if (n < kMinApproaches) throw std::invalid_argument("junction too small for a companion");
    if (chosen < 1 || chosen > n) throw std::invalid_argument("approach id out of range");
    return chosen == 1 ? n : chosen - 1;
}

int green_time(double max_weight, const ControllerParams& params) {
    const long long raw = std::llround(params.alpha * max_weight);
    return static_cast<int>(std::clamp<long long>(raw, params.g_min, params.g_max));
}

int fairness_cap(const std::vector<ApproachState>& states, int chosen,
                 const ControllerParams& params, int clearance) {
    // Budget for approach j, ranked pos_j among the waiting approaches by red
    // time: it can still be served within L = t_starve + g_max + clearance of
    // accumulated red if this phase lasts no longer than
    //   L - red_j - clearance - pos_j * (g_min + clearance).
    // Reserving a minimal slot per approach ranked at or above j keeps that
    // budget invariant from phase to phase.
    const int slot = params.g_min + clearance;
    const int limit = params.t_starve + params.g_max + clearance;

    std::vector<int> waiting;
    for (size_t i = 0; i < states.size(); ++i) {
        if (static_cast<int>(i) + 1 != chosen) waiting.push_back(static_cast<int>(i));
    }
    std::sort(waiting.begin(), waiting.end(), [&](int a, int b) {
        if (states[a].red_duration != states[b].red_duration) {
            return states[a].red_duration > states[b].red_duration;
        }
        return a < b;
    });

    int cap = params.g_max;
    for (size_t pos = 0; pos < waiting.size(); ++pos) {
        const int red = static_cast<int>(states[waiting[pos]].red_duration);
        const int budget = limit - red - clearance - static_cast<int>(pos + 1) * slot;
        cap = std::min(cap, budget);
    }
    return cap;
}

namespace {

int longest_red(const std::vector<ApproachState>& states) {
    int best = 0;
    for (size_t i = 1; i < states.size(); ++i) {
        if (states[i].red_duration > states[best].red_duration) best = static_cast<int>(i);
    }
    return best + 1;
}

}  // namespace

PhasePlan plan_next_phase(const std::vector<ApproachState>& states,
                          const JunctionSpec& junction,
                          const ControllerParams& params,
                          const std::vector<int>& active_emergencies) {
    const int n = junction.approach_count();
    if (static_cast<int>(states.size()) != n) {
        throw std::invalid_argument("states and junction approach count mismatch");
    }

    PhasePlan plan;
    if (!active_emergencies.empty()) {
        plan.chosen = *std::min_element(active_emergencies.begin(), active_emergencies.end());
        plan.duration = params.emergency_green;
        plan.cause = Cause::Emergency;
        plan.companion = n >= kMinApproaches ? companion_of(plan.chosen, n) : 0;
        return plan;
    }

    std::vector<WeightedApproach> weights(n);
    for (int i = 0; i < n; ++i) {
        weights[i] = {junction.approaches[i].id,
                      effective_weight(states[i], junction.approaches[i], params)};
    }

    Selection sel = select_approach(weights, states, params);
    int cap = fairness_cap(states, sel.id, params, junction.clearance);
    if (cap < params.g_min && sel.cause == Cause::MaxWeight) {
        // A max-weight phase here would push some waiting approach past the
        // red-time budget; serve the longest-waiting approach instead.
        sel = {longest_red(states), Cause::StarvationOverride};
        cap = fairness_cap(states, sel.id, params, junction.clearance);
    }

    plan.chosen = sel.id;
    plan.cause = sel.cause;
    const double w = weights[sel.id - 1].weight;
    plan.duration = std::max(params.g_min, std::min(green_time(w, params), cap));
    plan.companion = n >= kMinApproaches ? companion_of(plan.chosen, n) : 0;
    return plan;
}

PhasePlan static_next_phase(const StaticSchedule& schedule, long phase_index) {
    if (phase_index < 0) throw std::invalid_argument("phase index must be >= 0");
    const int n = static_cast<int>(schedule.order.size());
    if (n == 0) throw std::invalid_argument("empty schedule");
    const int idx = static_cast<int>(phase_index % n);
    PhasePlan plan;
    plan.chosen = schedule.order[idx];
    plan.duration = schedule.splits[idx];
    plan.cause = Cause::StaticSchedule;
    plan.companion = n >= kMinApproaches ? companion_of(plan.chosen, n) : 0;
    return plan;
}

}  // namespace crossflow
