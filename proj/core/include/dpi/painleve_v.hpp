#pragma once

#include <array>
#include <utility>

#include "dpi/hpreal.hpp"
#include "dpi/ode.hpp"

namespace dpi {

// Backlund parameter triple; maps to PV coefficients via
// (alpha, beta, gamma) = (a^2/2, -b^2/2, c), delta = -1/2.
struct RootTriple {
    double a, b, c;
};

struct PVParams {
    double alpha, beta, gamma;
    double delta = -0.5;
    static PVParams from_triple(const RootTriple& t) {
        return {0.5 * t.a * t.a, -0.5 * t.b * t.b, t.c, -0.5};
    }
};

template <typename T>
struct PVParamsT {
    T alpha, beta, gamma, delta;
};

// Residual of the PV ODE (delta = -1/2 unless set otherwise):
// y'' - (1/(2y)+1/(y-1)) y'^2 + y'/t - (y-1)^2(alpha y^2+beta)/(t^2 y)
//     - gamma y/t - delta y(y+1)/(y-1).
double pv_residual(double y, double yp, double ypp, double t, const PVParams& p);
HPReal pv_residual(const HPReal& y, const HPReal& yp, const HPReal& ypp, const HPReal& t,
                   const PVParamsT<HPReal>& p);

struct HamState {
    double q, p, t;
    std::array<double, 4> a; // root variables, a0+a1+a2+a3 = 1
};

// Right-hand side of the Hamiltonian system and the Hamiltonian value.
std::pair<double, double> ham_rhs(const HamState& s);
double ham_value(const HamState& s);
std::pair<HPReal, HPReal> ham_rhs(const HPReal& q, const HPReal& p, const HPReal& t,
                                  const std::array<HPReal, 4>& a);
HPReal ham_value(const HPReal& q, const HPReal& p, const HPReal& t,
                 const std::array<HPReal, 4>& a);

// Backlund transformation T_{e1,e2,e3}: transformed solution value and triple.
struct BTSigns {
    int e1, e2, e3;
};
std::pair<double, RootTriple> bt_apply(double y, double yp, double t, const RootTriple& triple,
                                       const BTSigns& signs);
// Parameter map alone (exact in the inputs).
RootTriple bt_params(const RootTriple& triple, const BTSigns& signs);
// R = T_{-1,1,1} and its inverse chain R^{-1} = T_{-1,1,-1} o T_{1,-1,-1} o T_{1,-1,1}.
RootTriple bt_R(const RootTriple& t);
RootTriple bt_R_inverse(const RootTriple& t);

// Closed-form parameter evolution under the R-chain with constants (mu, kappa, lambda).
RootTriple param_evolution(long n, double mu, double kappa, double lambda_const);

// Differential-difference residuals at step n (both relations of the pair).
std::pair<HPReal, HPReal> dd_residuals(const HPReal& t, const HPReal& v_n, const HPReal& v_n_prime,
                                       const HPReal& v_np1, const HPReal& v_nm1,
                                       const std::array<HPReal, 3>& triple_n);

// Residual of the second-order ODE satisfied by v_n along the chain.
HPReal vn_second_order_residual(const HPReal& t, const HPReal& v, const HPReal& vp,
                                const HPReal& vpp, const std::array<HPReal, 3>& triple_n);

// t-variable Riccati residuals for v_0 (n=0) and v_1 (n=1).
HPReal riccati_chain_residual(int n, const HPReal& t, const HPReal& value,
                              const HPReal& derivative);

// Riccati residual for v_2, with v_0 entering the coefficients:
// 3 eps^2 v2' + v2^2 + (1 - 2 eps + 2 v0) v2 - 3 eps (in the eps variable).
HPReal riccati_v2_residual(const HPReal& eps, const HPReal& v2, const HPReal& v2_prime,
                           const HPReal& v0);

// Adaptive integration of the PV ODE as a first-order system in (y, y').
// Guards against the y = 0, 1 singular points.
Trajectory integrate_pv(double y0, double yp0, double t0, double t1, const PVParams& params,
                        double tol);

// Hamiltonian trajectory (q, p) from t0 to t1.
Trajectory integrate_ham(const HamState& initial, double t1, double tol);

} // namespace dpi
