#pragma once

#include "dpi/bessel.hpp"
#include "dpi/hpreal.hpp"
#include "dpi/rational.hpp"

namespace dpi {

// Combination constants for Z_nu = d1 I_nu + d2 I_{-nu} (non-integer nu) resp.
// d1 I_j + d2 (-1)^j K_j (integer nu).
struct BesselCoeffs {
    HPReal d1, d2;
    BesselCoeffs(HPReal d1, HPReal d2);

    // Positive-branch constants d1 = 1, d2 = -1 (the d-side of lambda = 0).
    static BesselCoeffs positive_branch(int digits);
    // Dictionary from the (C1, C2) convention of the Riccati solutions:
    // d1 = pi C2, d2 = C1 - pi C2.
    static BesselCoeffs from_C(const HPReal& C1, const HPReal& C2);
};

// Z_nu evaluated at t_half (callers pass t/2 per the ladder convention).
HPReal Z(const BigRat& nu, const HPReal& t_half, const BesselCoeffs& c);
// d/dt Z_nu(t/2) given t (not t/2).
HPReal Z_dt(const BigRat& nu, const HPReal& t, const BesselCoeffs& c);

// The finite Bessel sums f_{m,nu}(t) and the closed derivative rule.
HPReal f_bessel(long m, const BigRat& nu, const HPReal& t, const BesselCoeffs& c);
HPReal f_bessel_prime(long m, const BigRat& nu, const HPReal& t, const BesselCoeffs& c);

// Exact rational coefficient of Z_{nu +/- j} inside f_{m,nu}; exposed for the
// Wronskian row construction. Throws SingularCoefficient on a vanishing
// Pochhammer factor.
std::vector<BigRat> f_bessel_coeffs(long m, const BigRat& nu);

// Closed forms of the unique positive solution (lambda = 0 branch), as
// functions of eps with t = 1/(3 eps).
HPReal v0_closed(const HPReal& eps, bool* precision_loss = nullptr);
HPReal v1_closed(const HPReal& eps, bool* precision_loss = nullptr);
HPReal v2_closed(const HPReal& eps, bool* precision_loss = nullptr);

// Same functions of t directly, plus analytic t-derivatives for n = 0, 1.
HPReal v0_of_t(const HPReal& t);
HPReal v1_of_t(const HPReal& t);
HPReal v2_of_t(const HPReal& t);
HPReal v0_of_t_prime(const HPReal& t);
HPReal v1_of_t_prime(const HPReal& t);

// One-parameter family 2 v0 + 1 = (K_{5/6} - lambda I_{-5/6})/(K_{1/6} + lambda I_{1/6}),
// arguments at t/2, t = 1/(3 eps); and the inverse Moebius map.
HPReal v0_lambda(const HPReal& eps, const HPReal& lambda);
HPReal lambda_from_v0(const HPReal& eps, const HPReal& v0);

// Residual of t y' - y^2/3 + t y + 1/3 on the general Riccati solution
// y_0(t; C1, C2), with analytic Bessel derivatives.
HPReal y0_riccati_residual(const HPReal& t, const HPReal& C1, const HPReal& C2);

// Residual of t^2 phi'' + t(t+1) phi' - phi/9 on phi_0(t; C1, C2).
HPReal phi0_ode_residual(const HPReal& t, const HPReal& C1, const HPReal& C2);

} // namespace dpi
