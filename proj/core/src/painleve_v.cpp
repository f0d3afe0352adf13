#include "dpi/painleve_v.hpp"
#include "dpi/rational.hpp"

#include <cmath>

namespace dpi {

double pv_residual(double y, double yp, double ypp, double t, const PVParams& p) {
    if (y == 0 || y == 1) throw SingularPointError("pv_residual at y in {0, 1}");
    if (t == 0) throw SingularPointError("pv_residual at t = 0");
    double ym1 = y - 1;
    return ypp - (1 / (2 * y) + 1 / ym1) * yp * yp + yp / t -
           ym1 * ym1 * (p.alpha * y * y + p.beta) / (t * t * y) - p.gamma * y / t -
           p.delta * y * (y + 1) / ym1;
}

HPReal pv_residual(const HPReal& y, const HPReal& yp, const HPReal& ypp, const HPReal& t,
                   const PVParamsT<HPReal>& p) {
    int d = y.digits();
    HPReal one(1L, d);
    if (y.is_zero() || y == one) throw SingularPointError("pv_residual at y in {0, 1}");
    if (t.is_zero()) throw SingularPointError("pv_residual at t = 0");
    HPReal ym1 = y - one;
    return ypp - (one / (2L * y) + one / ym1) * yp * yp + yp / t -
           ym1 * ym1 * (p.alpha * y * y + p.beta) / (t * t * y) - p.gamma * y / t -
           p.delta * y * (y + one) / ym1;
}

std::pair<double, double> ham_rhs(const HamState& s) {
    if (s.t == 0) throw SingularPointError("ham_rhs at t = 0");
    double dq = (s.q * (s.q - 1) * (2 * s.p + s.t) - s.a[1] * (s.q - 1) - s.a[3] * s.q) / s.t;
    double dp = (s.p * (s.p + s.t) * (1 - 2 * s.q) + (s.a[1] + s.a[3]) * s.p - s.a[2] * s.t) / s.t;
    return {dq, dp};
}

double ham_value(const HamState& s) {
    if (s.t == 0) throw SingularPointError("ham_value at t = 0");
    return (s.q * (s.q - 1) * s.p * (s.p + s.t) - (s.a[1] + s.a[3]) * s.q * s.p + s.a[1] * s.p +
            s.a[2] * s.t * s.q) / s.t;
}

std::pair<HPReal, HPReal> ham_rhs(const HPReal& q, const HPReal& p, const HPReal& t,
                                  const std::array<HPReal, 4>& a) {
    if (t.is_zero()) throw SingularPointError("ham_rhs at t = 0");
    int d = t.digits();
    HPReal one(1L, d);
    HPReal dq = (q * (q - one) * (2L * p + t) - a[1] * (q - one) - a[3] * q) / t;
    HPReal dp = (p * (p + t) * (one - 2L * q) + (a[1] + a[3]) * p - a[2] * t) / t;
    return {dq, dp};
}

HPReal ham_value(const HPReal& q, const HPReal& p, const HPReal& t,
                 const std::array<HPReal, 4>& a) {
    if (t.is_zero()) throw SingularPointError("ham_value at t = 0");
    int d = t.digits();
    HPReal one(1L, d);
    return (q * (q - one) * p * (p + t) - (a[1] + a[3]) * q * p + a[1] * p + a[2] * t * q) / t;
}

RootTriple bt_params(const RootTriple& t, const BTSigns& s) {
    double u = 1 - s.e3 * t.b - s.e2 * t.a;
    return {0.5 * (t.c + s.e1 * u), 0.5 * (t.c - s.e1 * u), s.e1 * (s.e3 * t.b - s.e2 * t.a)};
}

std::pair<double, RootTriple> bt_apply(double y, double yp, double t, const RootTriple& triple,
                                       const BTSigns& s) {
    double den = t * yp - s.e2 * triple.a * y * y +
                 (s.e2 * triple.a - s.e3 * triple.b + s.e1 * t) * y + s.e3 * triple.b;
    if (den == 0) throw PoleError(0, t);
    return {1 - 2 * s.e1 * t * y / den, bt_params(triple, s)};
}

RootTriple bt_R(const RootTriple& t) { return bt_params(t, BTSigns{-1, 1, 1}); }

RootTriple bt_R_inverse(const RootTriple& t) {
    return {0.5 * (t.a - t.b + t.c + 1), 0.5 * (t.a - t.b - t.c + 1), t.a + t.b};
}

RootTriple param_evolution(long n, double mu, double kappa, double lambda_const) {
    double ang = 2.0 * M_PI * n / 3.0;
    double cs = std::cos(ang), sn = std::sin(ang);
    double r3 = std::sqrt(3.0);
    return {mu * cs + kappa * sn + lambda_const - n / 3.0,
            r3 * kappa * cs - r3 * mu * sn + 1.0 / 3.0,
            -2 * mu * cs - 2 * kappa * sn + lambda_const - n / 3.0};
}

std::pair<HPReal, HPReal> dd_residuals(const HPReal& t, const HPReal& v_n, const HPReal& v_n_prime,
                                       const HPReal& v_np1, const HPReal& v_nm1,
                                       const std::array<HPReal, 3>& triple_n) {
    int d = t.digits();
    HPReal one(1L, d), half(BigRat(1, 2), d);
    if (v_n.is_zero() || v_n == -one) throw SingularPointError("dd_residuals at v_n in {0, -1}");
    if (t.is_zero()) throw SingularPointError("dd_residuals at t = 0");
    const HPReal& a = triple_n[0];
    const HPReal& b = triple_n[1];
    HPReal denom = 2L * t * v_n * (v_n + one);
    HPReal dv = v_n_prime / (2L * v_n * (v_n + one));
    HPReal r_plus = v_np1 + dv + ((a + b) * v_n + a) / denom + half;
    HPReal r_minus = v_nm1 - dv + ((a - b) * v_n + a) / denom + half;
    return {r_plus, r_minus};
}

HPReal vn_second_order_residual(const HPReal& t, const HPReal& v, const HPReal& vp,
                                const HPReal& vpp, const std::array<HPReal, 3>& triple_n) {
    int d = t.digits();
    HPReal one(1L, d), half(BigRat(1, 2), d);
    const HPReal& a = triple_n[0];
    const HPReal& b = triple_n[1];
    const HPReal& c = triple_n[2];
    HPReal vv1 = v * (v + one);
    // Middle coefficient from substituting y = 1 + 1/v into the PV equation
    // with (alpha, beta) = (a^2/2, -b^2/2): a^2 (v+1)^2 - b^2 v^2.
    return vpp - half * (one / v + one / (v + one)) * vp * vp + vp / t +
           (a * a * (v + one) * (v + one) - b * b * v * v) / (2L * vv1 * t * t) + c * vv1 / t -
           vv1 * (2L * v + one) * half;
}

HPReal riccati_chain_residual(int n, const HPReal& t, const HPReal& value,
                              const HPReal& derivative) {
    int d = t.digits();
    HPReal one(1L, d);
    if (n == 0)
        return t * derivative - (t * value * value + (t - HPReal(BigRat(2, 3), d)) * value -
                                 one / 3L);
    if (n == 1)
        return t * derivative - (t * value * value + (t - HPReal(BigRat(1, 3), d)) * value -
                                 HPReal(BigRat(2, 3), d));
    throw DomainError("riccati_chain_residual is defined for n in {0, 1}");
}

HPReal riccati_v2_residual(const HPReal& eps, const HPReal& v2, const HPReal& v2_prime,
                           const HPReal& v0) {
    int d = eps.digits();
    HPReal one(1L, d);
    return 3L * eps * eps * v2_prime + v2 * v2 + (one - 2L * eps + 2L * v0) * v2 - 3L * eps;
}

Trajectory integrate_pv(double y0, double yp0, double t0, double t1, const PVParams& params,
                        double tol) {
    OdeRhs rhs = [params](double t, const std::vector<double>& s) {
        double y = s[0], yp = s[1];
        double ym1 = y - 1;
        double ypp = (1 / (2 * y) + 1 / ym1) * yp * yp - yp / t +
                     ym1 * ym1 * (params.alpha * y * y + params.beta) / (t * t * y) +
                     params.gamma * y / t + params.delta * y * (y + 1) / ym1;
        return std::vector<double>{yp, ypp};
    };
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol * 1e-2;
    opt.guard = [](double t, const std::vector<double>& s) {
        if (std::abs(s[0]) < 1e-8 || std::abs(s[0] - 1) < 1e-8)
            throw SingularPointError("PV trajectory hit y in {0,1} near t = " + std::to_string(t));
    };
    return integrate(rhs, t0, {y0, yp0}, t1, opt);
}

Trajectory integrate_ham(const HamState& initial, double t1, double tol) {
    auto a = initial.a;
    OdeRhs rhs = [a](double t, const std::vector<double>& s) {
        HamState st{s[0], s[1], t, a};
        auto [dq, dp] = ham_rhs(st);
        return std::vector<double>{dq, dp};
    };
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol * 1e-2;
    return integrate(rhs, initial.t, {initial.q, initial.p}, t1, opt);
}

} // namespace dpi
