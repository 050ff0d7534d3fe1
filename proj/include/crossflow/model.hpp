#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace crossflow {

// Coarse traffic-volume classification used to pick flow-range presets.
enum class TrafficLevel { Low = 0, Medium = 1, High = 2 };

const char* to_string(TrafficLevel level);

// [min, max] vehicles per reference interval.
struct FlowRange {
    int min = 0;
    int max = 0;

    bool operator==(const FlowRange&) const = default;
};

// Static description of one incoming road at the junction.
struct ApproachSpec {
    int id = 0;             // 1-based index within the junction
    int lanes = 2;
    double popularity = 1.0;
    FlowRange inflow;       // arrivals, independent of signal state
    FlowRange outflow_red;  // discharge while the signal is red (permitted turns)
    FlowRange outflow_green;

    bool operator==(const ApproachSpec&) const = default;
};

struct JunctionSpec {
    std::vector<ApproachSpec> approaches;  // ids must be exactly 1..N in order
    int reference_interval = 30;           // seconds; basis of all flow ranges
    int clearance = 4;                     // all-red seconds between phases

    int approach_count() const { return static_cast<int>(approaches.size()); }

    bool operator==(const JunctionSpec&) const = default;
};

inline constexpr int kMinApproaches = 3;
inline constexpr int kMaxApproaches = 8;

// Live per-approach state advanced by the simulator.
struct ApproachState {
    std::vector<double> queue;  // FIFO arrival timestamps, seconds, non-decreasing
    double red_duration = 0.0;  // continuous seconds since this approach last had full green
    int cycles_waited = 0;      // phases since last full green

    int density() const { return static_cast<int>(queue.size()); }
};

// Signal heads for one approach during one phase.
struct MovementIndication {
    bool left = false;
    bool straight = false;
    bool right = false;

    bool full_green() const { return left && straight && right; }
    bool left_only() const { return left && !straight && !right; }
    bool all_red() const { return !left && !straight && !right; }

    static MovementIndication full() { return {true, true, true}; }
    static MovementIndication left_turn() { return {true, false, false}; }
    static MovementIndication red() { return {false, false, false}; }

    bool operator==(const MovementIndication&) const = default;
};

// One invariant breach found by validate(); approach_id 0 means junction-level.
struct Violation {
    int approach_id = 0;
    std::string field;
    std::string message;
};

// Density thresholds: below 50 is Low, 50..150 Medium, above 150 High.
TrafficLevel classify_traffic_level(int density);

// Per-approach flow ranges for one traffic level, indexed from signal 1.
struct FlowPreset {
    FlowRange inflow;
    FlowRange outflow_red;
    FlowRange outflow_green;
};

// The four-signal range tables for a level. Medium is the reference table;
// Low and High are scaled copies (0.5x / 1.5x, rounded half-up).
std::array<FlowPreset, 4> preset_ranges(TrafficLevel level);

// Returns every violated invariant; empty result means the spec is well-formed.
std::vector<Violation> validate(const JunctionSpec& junction);

// Fresh states for a junction: `densities[i]` vehicles queued at time 0.
std::vector<ApproachState> initial_states(const std::vector<int>& densities);

}  // namespace crossflow
