#include "dpi/recurrence.hpp"

#include <cmath>

namespace dpi {

double approx_sqrt(double eps, int n) {
    if (n < -1) throw DomainError("approx_sqrt needs n >= -1");
    double rad = 1.0 + 8.0 * (n + 1) * eps;
    if (rad < 0) throw DomainError("approx_sqrt radicand negative");
    if (n == -1) return 0.0;
    return (std::sqrt(rad) - 1.0) / 4.0;
}

HPReal approx_sqrt(const HPReal& eps, int n) {
    if (n < -1) throw DomainError("approx_sqrt needs n >= -1");
    if (n == -1) return HPReal(0L, eps.digits());
    HPReal rad = HPReal(1L, eps.digits()) + eps * (8L * (n + 1));
    if (rad.sign() < 0) throw DomainError("approx_sqrt radicand negative");
    return (sqrt(rad) - 1L) / 4L;
}

std::vector<double> residual_general(const Sequence<double>& seq, const GeneralDPIParams& p) {
    if (seq.values.size() < 3) throw DomainError("residual_general needs at least 3 entries");
    std::vector<double> out;
    out.reserve(seq.values.size() - 2);
    for (int n = 0; n <= seq.n_max() - 1; ++n) {
        double xn = seq.at(n);
        if (xn == 0) throw ZeroDivisionError(n);
        out.push_back(seq.at(n + 1) + seq.at(n - 1) - (p.alpha_t * n + p.beta_t) / xn - p.gamma_t);
    }
    return out;
}

Sequence<double> iterate_general(const GeneralDPIParams& p, double x_minus1, double x0, int n_target) {
    Sequence<double> s{0.0, {x_minus1, x0}, BoundaryPolicy::free};
    for (int n = 0; n < n_target; ++n) {
        double xn = s.at(n);
        if (xn == 0) throw ZeroDivisionError(n);
        s.values.push_back((p.alpha_t * n + p.beta_t) / xn + p.gamma_t - s.at(n - 1));
    }
    return s;
}

} // namespace dpi
