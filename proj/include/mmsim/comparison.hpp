#pragma once

#include <mmsim/scenario.hpp>

#include <limits>
#include <string>
#include <vector>

namespace mmsim {

struct ChannelDifference {
    std::string name;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double peak_abs_a = 0.0;
    double peak_abs_b = 0.0;
    std::size_t sign_changes_a = 0;
    std::size_t sign_changes_b = 0;
};

struct ComparisonWindow {
    double t_begin = -std::numeric_limits<double>::infinity();
    double t_end = std::numeric_limits<double>::infinity();
};

struct ComparisonReport {
    std::vector<ChannelDifference> channels;
    std::size_t samples = 0;
    /// Largest absolute difference over every state channel.
    double max_state_difference = 0.0;

    const ChannelDifference &channel(const std::string &name) const;
};

/// Channel names in comparison order: x y z phi theta psi u v w p q r x_p y_p z_p vpx vpy vpz.
const std::vector<std::string> &state_channel_names();

/// Per-channel differences over samples with t in the window.
/// Throws GridMismatch unless both runs share the time grid inside the window.
ComparisonReport compare_trajectories(const std::vector<TrajectoryRecord> &a, const std::vector<TrajectoryRecord> &b,
                                      const ComparisonWindow &window = {});

} // namespace mmsim
