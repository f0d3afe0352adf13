#pragma once

#include <functional>
#include <vector>

#include "dpi/errors.hpp"

namespace dpi {

using OdeRhs = std::function<std::vector<double>(double, const std::vector<double>&)>;

struct OdeStep {
    double t0, t1;
    std::vector<double> y0, y1;
    std::vector<std::vector<double>> k; // stage derivatives for dense output
};

// Dormand-Prince 5(4) trajectory with dense output.
class Trajectory {
  public:
    double t_begin() const { return steps_.front().t0; }
    double t_end() const { return steps_.back().t1; }
    const std::vector<double>& y_end() const { return steps_.back().y1; }
    size_t step_count() const { return steps_.size(); }

    // Quartic dense-output interpolant, valid on [t_begin, t_end] (either direction).
    std::vector<double> eval(double t) const;

    std::vector<OdeStep> steps_;
};

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double initial_step = 0.0; // 0: choose automatically
    long max_steps = 2000000;
    // Optional singularity guard: called at accepted points, throws to abort.
    std::function<void(double, const std::vector<double>&)> guard;
};

// Integrate from t0 to t1 (backwards allowed). Zero-length intervals return a
// single degenerate step.
Trajectory integrate(const OdeRhs& rhs, double t0, std::vector<double> y0, double t1,
                     const OdeOptions& opt = {});

} // namespace dpi
