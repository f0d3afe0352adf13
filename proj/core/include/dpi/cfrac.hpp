#pragma once

#include <utility>
#include <vector>

#include "dpi/hpreal.hpp"
#include "dpi/rational.hpp"

namespace dpi {

// Coefficients of the S-fraction for v_0: xi_{2m} = 3m+1, xi_{2m+1} = 3m+2,
// zeta_{2m} = 2, zeta_{2m+1} = 1.
std::pair<long, long> xi_zeta(long n);

// Convergent data of the fraction v_0 = xi_0 eps/(1 + xi_1 eps/(1 + ...)).
// P, Q follow the three-term relation P^(k+1) = P^(k) + xi_{k+1} eps P^(k-1)
// from P^(-2)=1, P^(-1)=0, Q^(-2)=0, Q^(-1)=1.
struct SFraction {
    std::vector<long> xi;
    std::vector<long> zeta;
    std::vector<Poly> P; // P[k] = P^(k), polynomials in eps
    std::vector<Poly> Q;

    static SFraction build(int k_max);
};

// eta_bar_0^(k) = P^(k)/Q^(k) at exact rational eps.
BigRat convergent(int k, const BigRat& eps);

// Exact gap eta_bar^(k) - eta_bar^(k-1) = (-1)^k xi_0...xi_k eps^(k+1)/(Q^(k-1)Q^(k)).
BigRat convergent_gap(int k, const BigRat& eps);

struct CFracResult {
    HPReal value;
    HPReal error_bound; // |last convergent - previous|: certified for the alternating fraction
    long terms = 0;
};

// Evaluate the fraction by the modified Lentz scheme until the certified
// alternating bound drops below tol (absolute). eps > 0 strictly; the
// fraction is formally divergent at eps = 0.
CFracResult eval_cfrac(const HPReal& eps, double tol, long max_terms = 10000);

// Tail eta_n = xi_n eps/(1 + xi_{n+1} eps/(1 + ...)); eta_0 = v_0, eta_1 = v_1,
// eta_2 = v_0 + v_2.
CFracResult eval_eta(long n, const HPReal& eps, double tol, long max_terms = 10000);

// s_{0,0..i_max} via s_{0,i+1} = (3i+1) s_{0,i} + sum_j s_{0,i-j} s_{0,j}.
std::vector<BigInt> series_s0(int i_max);

// Residual of 3 eps^2 eta' + eta^2 + (1 - zeta_n eps) eta - xi_n eps.
HPReal riccati_residual_eta(long n, const HPReal& eps, const HPReal& eta, const HPReal& eta_prime);

struct InterlaceReport {
    bool all_pass = true;
    int j_max = 0;
    long comparisons = 0;
    std::string first_failure; // empty when all pass
};

// Prop-interlace chain b^(2j-1) < etabar^(2j+1) <= b^(2j+1) < b^(2j+2) <= etabar^(2j+2) < b^(2j)
// at n = 0, exact rational arithmetic; equalities only allowed at k <= 2.
InterlaceReport interlace_check(const BigRat& eps, int j_max);

} // namespace dpi
