#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dpi/hpreal.hpp"
#include "dpi/rational.hpp"
#include "dpi/recurrence.hpp"

namespace dpi {

enum class EvalMode { exact_rational, floating };

// One application of T: T(u)_0 = eps/(u_1+1), T(u)_n = eps(n+1)/(u_{n+1}+u_{n-1}+1).
// The value used at the right edge n = N+1 follows seq.boundary.
template <typename T>
Sequence<T> apply_T(const Sequence<T>& seq);

Sequence<double> apply_T(const Sequence<double>& seq);
Sequence<HPReal> apply_T(const Sequence<HPReal>& seq);

// Orbit of T applied to the zero sequence on the infinite lattice, tabulated
// for k = 0..k_max, n = 0..n_max. Entries are exact for the infinite-lattice
// orbit (computed on a window that shrinks by one per level).
struct BoundTableQ {
    BigRat eps;
    int k_max = 0, n_max = 0;
    std::vector<std::vector<BigRat>> b;   // b[k][n]
    std::vector<std::vector<BigRat>> rho; // rho[k][n]
};

struct BoundTableF {
    HPReal eps;
    int k_max = 0, n_max = 0;
    std::vector<std::vector<HPReal>> b;
    std::vector<std::vector<HPReal>> rho;
};

BoundTableQ bound_table_exact(const BigRat& eps, int k_max, int n_max);
BoundTableF bound_table(const HPReal& eps, int k_max, int n_max);

// b_n^(k) at exact rational eps (k = -1 gives 0).
BigRat bound(int k, int n, const BigRat& eps);

// b_n^(k) as an exact rational function of eps. Degrees roughly double per
// level; k is capped (ResourceLimit) because of that growth.
RationalFunc bound_rational(int k, int n, int k_cap = 12);

// R^(k)(z,eps) of the rescaled-bound recursion; exact or floating point.
// Memoizes on the z + m*eps lattice reached by the recursion tree.
BigRat R_eval(int k, const BigRat& z, const BigRat& eps);
HPReal R_eval(int k, const HPReal& z, const HPReal& eps);

// Differences Delta_n^(k) = (-1)^k (rho_n^(k) - rho_n^(k-1)) from a table.
BigRat delta(const BoundTableQ& t, int k, int n);
HPReal delta(const BoundTableF& t, int k, int n);

// Delta^(k)(z,eps) as a function of z (for scans across the lattice).
HPReal delta_fn(int k, const HPReal& z, const HPReal& eps);

// Leading Taylor coefficients c_n^(k): c_n^(0)=1, c_n^(k+1) = n c_{n-1}^(k) + (n+2) c_{n+1}^(k).
BigInt taylor_c(int k, int n);

// Asymptotic series coefficients s_{n,i} (closed forms for i <= 2; n = 0 is
// delegated to the continued-fraction recursion for higher orders).
std::vector<BigInt> series_s(int n, int i_max);

struct SolveResult {
    Sequence<HPReal> seq;        // midpoint of the final even/odd bracket
    std::vector<HPReal> widths;  // |even - odd|/(eps(n+1)) per n
    double sup_width = 0;
    int iterations = 0; // total T applications
};

// Positive-solution solver: iterate T from b^(0) on [0, N] with the right edge
// clamped to approx_sqrt(eps, N+1), until the weighted sup-norm gap between
// consecutive even/odd iterates drops below tol.
SolveResult solve_positive(const HPReal& eps, int n_max, double tol, int k_cap = 600);

struct ConjectureViolation {
    int j, n;
    int which; // 1 = odd-even product bound, 2 = even-odd product bound
};

struct ConjectureReport {
    bool all_pass = true;
    long checks = 0;
    std::optional<ConjectureViolation> first_violation;
    bool inside_eps_star = false; // eps < (sqrt(2)+1)/2
};

// Analytic boundary for the j=1, n=0 instance of the conjectured bounds.
double eps_star();

ConjectureReport conjecture_check(const BigRat& eps, int j_max, int n_max);
ConjectureReport conjecture_check(const HPReal& eps, int j_max, int n_max);

struct DeltaScanPoint {
    double z;
    double value;
    bool pole = false; // evaluation hit a pole at/near this sample
};

struct DeltaScan {
    std::vector<DeltaScanPoint> points;
    std::vector<std::pair<double, double>> pole_brackets; // consecutive samples straddling a pole
    std::vector<double> local_minima;                     // interior strict minima (z values)
};

DeltaScan scan_delta(int k, const HPReal& eps, double z_lo, double z_hi, int samples);

} // namespace dpi
