#pragma once

namespace pdm {

/// Uniform 1D grid with Dirichlet conditions at both ends. Interior nodes
/// x_i = x_min + (i+1) h, i = 0 .. n_points-1, h = (x_max - x_min)/(n_points + 1).
struct Discretization {
    Discretization(double x_min, double x_max, int n_points);

    double x_min;
    double x_max;
    int n_points; // >= 16

    double step() const { return (x_max - x_min) / static_cast<double>(n_points + 1); }
    double node(int i) const { return x_min + static_cast<double>(i + 1) * step(); }

    /// Same interval with exactly halved step (2 n_points + 1 interior nodes).
    Discretization refined() const { return {x_min, x_max, 2 * n_points + 1}; }
};

} // namespace pdm
