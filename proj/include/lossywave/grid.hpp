#pragma once

#include <optional>
#include <vector>

namespace lossywave {

/// Result of sampling max |G_num| over theta in [0, pi].
struct StabilityCertificate {
    bool stable;
    double max_gain;
    double worst_theta;
};

/// Uniform periodic grid plus timestep. A certificate from
/// gsa::stability_check must be attached before the grid may be stepped.
struct GridSpec {
    double length = 0.0;
    int n_points = 0;
    double dt = 0.0;
    std::optional<StabilityCertificate> certificate;

    double dx() const { return length / n_points; }
};

/// Two consecutive time levels of pressure samples; p_curr is level
/// step_index, p_prev is level step_index - 1.
struct GridState {
    std::vector<double> p_prev;
    std::vector<double> p_curr;
    long step_index = 0;
    GridSpec spec;
};

}  // namespace lossywave
