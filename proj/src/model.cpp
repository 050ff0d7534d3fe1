#include "crossflow/model.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace crossflow {

const char* to_string(TrafficLevel level) {
    switch (level) {
        case TrafficLevel::Low: return "Low";
        case TrafficLevel::Medium: return "Medium";
        case TrafficLevel::High: return "High";
    }
    return "?";
}

TrafficLevel classify_traffic_level(int density) {
    if (density < 50) return TrafficLevel::Low;
    if (density <= 150) return TrafficLevel::Medium;
    return TrafficLevel::High;
}

namespace {

// Moderate-volume table for the four signals. Signals 3 and 4 have no
// published inflow row; they reuse signal 1's range.
constexpr std::array<FlowPreset, 4> kMediumPreset = {{
    {{3, 15}, {9, 15}, {10, 15}},
    {{11, 15}, {11, 15}, {20, 33}},
    {{3, 15}, {5, 13}, {22, 39}},
    {{3, 15}, {7, 14}, {24, 44}},
}};

int scale_round(int value, double factor) {
    return static_cast<int>(std::llround(value * factor));
}

FlowRange scale_range(FlowRange r, double factor) {
    FlowRange out{scale_round(r.min, factor), scale_round(r.max, factor)};
    if (out.min > out.max) out.max = out.min;
    return out;
}

}  // namespace

std::array<FlowPreset, 4> preset_ranges(TrafficLevel level) {
    if (level == TrafficLevel::Medium) return kMediumPreset;
    const double factor = level == TrafficLevel::Low ? 0.5 : 1.5;
    std::array<FlowPreset, 4> out = kMediumPreset;
    for (auto& p : out) {
        p.inflow = scale_range(p.inflow, factor);
        p.outflow_red = scale_range(p.outflow_red, factor);
        p.outflow_green = scale_range(p.outflow_green, factor);
    }
    return out;
}

namespace {

void check_range(const FlowRange& r, int approach_id, const char* field,
                 std::vector<Violation>& out) {
    if (r.min < 0 || r.max < 0) {
        out.push_back({approach_id, field, "flow range must be non-negative"});
    }
    if (r.min > r.max) {
        std::ostringstream msg;
        msg << "min > max (" << r.min << " > " << r.max << ")";
        out.push_back({approach_id, field, msg.str()});
    }
}

}  // namespace

std::vector<Violation> validate(const JunctionSpec& junction) {
    std::vector<Violation> out;
    const int n = junction.approach_count();
    if (n < kMinApproaches || n > kMaxApproaches) {
        std::ostringstream msg;
        msg << "approach count " << n << " outside [" << kMinApproaches << ", "
            << kMaxApproaches << "]";
        out.push_back({0, "approaches", msg.str()});
    }
    if (junction.reference_interval <= 0) {
        out.push_back({0, "reference_interval", "must be > 0"});
    }
    if (junction.clearance < 0) {
        out.push_back({0, "clearance", "must be >= 0"});
    }

    std::set<int> seen;
    for (int i = 0; i < n; ++i) {
        const ApproachSpec& a = junction.approaches[i];
        if (!seen.insert(a.id).second) {
            std::ostringstream msg;
            msg << "duplicate id " << a.id;
            out.push_back({a.id, "id", msg.str()});
        } else if (a.id != i + 1) {
            std::ostringstream msg;
            msg << "id " << a.id << " at position " << i + 1 << "; ids must be 1..N in order";
            out.push_back({a.id, "id", msg.str()});
        }
        if (a.lanes < 1) {
            out.push_back({a.id, "lanes", "must be >= 1"});
        }
        if (a.popularity <= 0.0) {
            out.push_back({a.id, "popularity", "must be > 0"});
        }
        check_range(a.inflow, a.id, "inflow", out);
        check_range(a.outflow_red, a.id, "outflow_red", out);
        check_range(a.outflow_green, a.id, "outflow_green", out);
    }
    return out;
}

std::vector<ApproachState> initial_states(const std::vector<int>& densities) {
    std::vector<ApproachState> states(densities.size());
    for (size_t i = 0; i < densities.size(); ++i) {
        states[i].queue.assign(static_cast<size_t>(std::max(0, densities[i])), 0.0);
    }
    return states;
}

}  // namespace crossflow
