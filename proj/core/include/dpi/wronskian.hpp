#pragma once

#include <array>
#include <vector>

#include "dpi/closed_form.hpp"
#include "dpi/hpreal.hpp"
#include "dpi/rational.hpp"

namespace dpi {

// Value of a Wronskian determinant B_{m,n,nu}[t], kept in sign/log-magnitude
// form alongside the rounded high-precision value.
struct DetValue {
    LogScaled value;
    HPReal hp;
    int size = 0;
    long m = 0;
    int n = 0;
    BigRat nu;
    bool precision_loss = false; // elimination lost more than half the digit budget
};

// Wronskian of {f_{m-l, nu+l}}_{l=0..n-1}; rows are generated by the closed
// derivative rule for f (no numerical differentiation), the determinant by
// pivoted elimination. Precision auto-scales with the matrix size.
DetValue wronskian_B(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                     int digits = 50);

// Closed-form v_n for n >= -1 via the n mod 3 case formula. The n = 1 (mod 3)
// branch uses the same-(d1,d2) form obtained from the determinant symmetry;
// set swapped_branch to evaluate the equivalent swapped-(d2,d1) form instead.
HPReal v_closed(int n, const HPReal& t, const BesselCoeffs& c, int digits = 50,
                bool swapped_branch = false);

// Relative residuals of the bilinear determinant identities.
HPReal check_bilinear_A(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                        int digits = 50); // m < 0, n >= 1
HPReal check_bilinear_B(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                        int digits = 50); // m <= 0

// Relative residual of the (d1,d2) <-> (d2,d1) determinant symmetry.
HPReal check_det_symmetry(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                          int digits = 50);

// Relative residuals of the three trilinear equations at chain index k.
std::array<HPReal, 3> check_trilinear(int k, const HPReal& t, const BesselCoeffs& c,
                                      int digits = 50);

// Ratio of the tau-quotient built from gauge-fixed Wronskian slots to
// v_closed(n); equals 1 for every n >= 3 when the tau assignment is right.
std::vector<HPReal> tau_ratios(int n_max, const HPReal& t, const BesselCoeffs& c, int digits = 50);

// Parameter maps and normalization constants of the two-parameter Bessel
// solution families (used only through the Painleve V residual tests).
struct PVAbg {
    BigRat alpha, beta, gamma;
};
PVAbg bessel_sol_params_1(long m, int n, const BigRat& nu);
PVAbg bessel_sol_params_2(long m, int n, const BigRat& nu);
BigRat bessel_sol_C1(long m, int n, const BigRat& nu);
BigRat bessel_sol_C2(long m, int n, const BigRat& nu);

// y^[1], y^[2] solution values at t.
HPReal bessel_sol_y1(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                     int digits = 50);
HPReal bessel_sol_y2(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                     int digits = 50);

} // namespace dpi
