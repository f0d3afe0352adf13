#include "dpi/ode.hpp"

#include <algorithm>
#include <cmath>

namespace dpi {

namespace {

// Dormand-Prince coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense output weights (Hairer-Norsett-Wanner).
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

std::vector<double> axpy(const std::vector<double>& y, double h,
                         std::initializer_list<std::pair<double, const std::vector<double>*>> terms) {
    std::vector<double> r = y;
    for (auto& [coef, v] : terms)
        for (size_t i = 0; i < r.size(); ++i) r[i] += h * coef * (*v)[i];
    return r;
}

} // namespace

std::vector<double> Trajectory::eval(double t) const {
    const OdeStep* s = &steps_.back();
    for (const auto& st : steps_) {
        double lo = std::min(st.t0, st.t1), hi = std::max(st.t0, st.t1);
        if (t >= lo - 1e-14 && t <= hi + 1e-14) {
            s = &st;
            break;
        }
    }
    double h = s->t1 - s->t0;
    if (h == 0) return s->y0;
    double th = (t - s->t0) / h;
    double th1 = 1.0 - th;
    size_t dim = s->y0.size();
    std::vector<double> r(dim);
    for (size_t i = 0; i < dim; ++i) {
        double ydiff = s->y1[i] - s->y0[i];
        double bspl = h * s->k[0][i] - ydiff;
        double rcont1 = s->y0[i];
        double rcont2 = ydiff;
        double rcont3 = bspl;
        double rcont4 = ydiff - h * s->k[6][i] - bspl;
        double rcont5 = h * (d1 * s->k[0][i] + d3 * s->k[2][i] + d4 * s->k[3][i] +
                             d5 * s->k[4][i] + d6 * s->k[5][i] + d7 * s->k[6][i]);
        r[i] = rcont1 + th * (rcont2 + th1 * (rcont3 + th * (rcont4 + th1 * rcont5)));
    }
    return r;
}

Trajectory integrate(const OdeRhs& rhs, double t0, std::vector<double> y0, double t1,
                     const OdeOptions& opt) {
    Trajectory traj;
    size_t dim = y0.size();
    if (t0 == t1) {
        OdeStep s{t0, t1, y0, y0, std::vector<std::vector<double>>(7, rhs(t0, y0))};
        traj.steps_.push_back(std::move(s));
        return traj;
    }
    double dir = (t1 > t0) ? 1.0 : -1.0;
    double h = opt.initial_step != 0 ? std::abs(opt.initial_step) : std::abs(t1 - t0) / 100.0;
    h = std::min(h, std::abs(t1 - t0));
    double t = t0;
    std::vector<double> y = std::move(y0);
    std::vector<double> k1 = rhs(t, y);
    for (long step = 0; step < opt.max_steps; ++step) {
        if ((t - t1) * dir >= 0) return traj;
        h = std::min(h, std::abs(t1 - t));
        double hs = dir * h;
        auto y2 = axpy(y, hs, {{a21, &k1}});
        auto k2 = rhs(t + c2 * hs, y2);
        auto y3 = axpy(y, hs, {{a31, &k1}, {a32, &k2}});
        auto k3 = rhs(t + c3 * hs, y3);
        auto y4 = axpy(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
        auto k4 = rhs(t + c4 * hs, y4);
        auto y5 = axpy(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
        auto k5 = rhs(t + c5 * hs, y5);
        auto y6 = axpy(y, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
        auto k6 = rhs(t + hs, y6);
        auto ynew = axpy(y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        auto k7 = rhs(t + hs, ynew);

        double err = 0;
        bool finite = true;
        for (size_t i = 0; i < dim; ++i) {
            double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
            double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (e / sc) * (e / sc);
            if (!std::isfinite(ynew[i])) finite = false;
        }
        err = std::sqrt(err / dim);
        if (finite && err <= 1.0) {
            OdeStep s{t, t + hs, y, ynew, {k1, k2, k3, k4, k5, k6, k7}};
            traj.steps_.push_back(std::move(s));
            t += hs;
            y = std::move(ynew);
            k1 = std::move(k7);
            if (opt.guard) opt.guard(t, y);
        }
        double fac = finite ? 0.9 * std::pow(std::max(err, 1e-10), -0.2) : 0.1;
        h *= std::clamp(fac, 0.2, 5.0);
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw SingularPointError("step size underflow at t = " + std::to_string(t));
    }
    throw NoConvergenceError(opt.max_steps, std::abs(t1 - t));
}

} // namespace dpi
