#include "dpi/cfrac.hpp"
#include "dpi/errors.hpp"
#include "dpi/fixed_point.hpp"

#include <sstream>

namespace dpi {

std::pair<long, long> xi_zeta(long n) {
    if (n < 0) throw DomainError("xi_zeta needs n >= 0");
    long m = n / 2;
    if (n % 2 == 0) return {3 * m + 1, 2};
    return {3 * m + 2, 1};
}

SFraction SFraction::build(int k_max) {
    SFraction f;
    f.xi.reserve(k_max + 1);
    f.zeta.reserve(k_max + 1);
    for (long n = 0; n <= k_max; ++n) {
        auto [xi, ze] = xi_zeta(n);
        f.xi.push_back(xi);
        f.zeta.push_back(ze);
    }
    // Slots shifted by 2: P[0] = P^(-2), P[1] = P^(-1), P[k+2] = P^(k).
    std::vector<Poly> P{Poly(BigInt(1)), Poly()};
    std::vector<Poly> Q{Poly(), Poly(BigInt(1))};
    for (int k = 0; k <= k_max; ++k) {
        Poly xieps = Poly::monomial(BigInt(f.xi[k]), 1);
        P.push_back(P[k + 1] + xieps * P[k]);
        Q.push_back(Q[k + 1] + xieps * Q[k]);
    }
    f.P.assign(P.begin() + 2, P.end());
    f.Q.assign(Q.begin() + 2, Q.end());
    return f;
}

BigRat convergent(int k, const BigRat& eps) {
    if (k < 0) throw DomainError("convergent needs k >= 0");
    auto f = SFraction::build(k);
    return BigRat(f.P[k].eval(eps)) / f.Q[k].eval(eps);
}

BigRat convergent_gap(int k, const BigRat& eps) {
    if (k < 1) throw DomainError("convergent_gap needs k >= 1");
    auto f = SFraction::build(k);
    BigRat prod(1);
    for (int j = 0; j <= k; ++j) prod *= BigRat(f.xi[j]);
    BigRat epspow(1);
    for (int j = 0; j <= k; ++j) epspow *= eps;
    BigRat gap = prod * epspow / (f.Q[k - 1].eval(eps) * f.Q[k].eval(eps));
    return (k % 2 == 0) ? gap : -gap;
}

CFracResult eval_cfrac(const HPReal& eps, double tol, long max_terms) {
    return eval_eta(0, eps, tol, max_terms);
}

CFracResult eval_eta(long n, const HPReal& eps, double tol, long max_terms) {
    if (n < 0) throw DomainError("eval_eta needs n >= 0");
    if (!(eps.sign() > 0)) throw DomainError("eval_cfrac needs eps > 0 (divergent at eps = 0)");
    if (!(tol > 0)) throw DomainError("eval_cfrac needs tol > 0");
    int digits = eps.digits();
    auto mk = [digits](long v) { return HPReal(v, digits); };
    const HPReal tiny = HPReal::parse("1e-300", digits);
    const HPReal tolv(tol, digits);

    // Modified Lentz on b_0 = 0, a_j = xi_{n+j-1} eps, b_j = 1 (j >= 1).
    HPReal f = tiny, C = f, D = mk(0);
    HPReal prev = mk(0);
    CFracResult out{mk(0), mk(0), 0};
    for (long j = 1; j <= max_terms; ++j) {
        HPReal a = mk(xi_zeta(n + j - 1).first) * eps;
        D = mk(1) + a * D;
        if (D.is_zero()) D = tiny;
        C = mk(1) + a / C;
        if (C.is_zero()) C = tiny;
        D = mk(1) / D;
        HPReal delta = C * D;
        prev = f;
        f = f * delta;
        out.terms = j;
        // f now equals the convergent etabar^(j-1); adjacent convergents
        // bracket the limit, so |f - prev| certifies the error.
        if (j >= 2) {
            out.error_bound = abs(f - prev);
            if (out.error_bound < tolv) {
                out.value = f;
                return out;
            }
        }
    }
    throw NoConvergenceError(max_terms, abs(f - prev).to_double());
}

std::vector<BigInt> series_s0(int i_max) {
    if (i_max < 0) throw DomainError("series_s0 needs i_max >= 0");
    std::vector<BigInt> s;
    s.reserve(i_max + 1);
    s.push_back(BigInt(1));
    for (int i = 0; i < i_max; ++i) {
        BigInt next = BigInt(3 * i + 1) * s[i];
        for (int j = 0; j <= i; ++j) next += s[i - j] * s[j];
        s.push_back(next);
    }
    return s;
}

HPReal riccati_residual_eta(long n, const HPReal& eps, const HPReal& eta, const HPReal& eta_prime) {
    auto [xi, ze] = xi_zeta(n);
    int digits = eps.digits();
    HPReal one(1L, digits);
    return 3L * eps * eps * eta_prime + eta * eta + (one - HPReal(ze, digits) * eps) * eta -
           HPReal(xi, digits) * eps;
}

InterlaceReport interlace_check(const BigRat& eps, int j_max) {
    InterlaceReport rep;
    rep.j_max = j_max;
    int k_top = 2 * j_max + 2;
    auto table = bound_table_exact(eps, k_top, 0);
    auto frac = SFraction::build(k_top);
    auto b0 = [&](int k) -> BigRat { return (k < 0) ? BigRat(0) : table.b[k][0]; };
    auto eta = [&](int k) -> BigRat { return BigRat(frac.P[k].eval(eps)) / frac.Q[k].eval(eps); };
    auto fail = [&](int j, const char* what) {
        rep.all_pass = false;
        if (rep.first_failure.empty()) {
            std::ostringstream os;
            os << "j=" << j << ": " << what;
            rep.first_failure = os.str();
        }
    };
    for (int j = 0; j <= j_max; ++j) {
        // b^(2j-1) < etabar^(2j+1) <= b^(2j+1) < b^(2j+2) <= etabar^(2j+2) < b^(2j),
        // with the inner <= strict for k >= 3.
        BigRat e_odd = eta(2 * j + 1), e_even = eta(2 * j + 2);
        rep.comparisons += 5;
        if (!(b0(2 * j - 1) < e_odd)) fail(j, "b(2j-1) < eta(2j+1)");
        if (2 * j + 1 >= 3 ? !(e_odd < b0(2 * j + 1)) : !(e_odd <= b0(2 * j + 1)))
            fail(j, "eta(2j+1) <= b(2j+1)");
        if (!(b0(2 * j + 1) < b0(2 * j + 2))) fail(j, "b(2j+1) < b(2j+2)");
        if (2 * j + 2 >= 3 ? !(b0(2 * j + 2) < e_even) : !(b0(2 * j + 2) <= e_even))
            fail(j, "b(2j+2) <= eta(2j+2)");
        if (!(e_even < b0(2 * j))) fail(j, "eta(2j+2) < b(2j)");
    }
    return rep;
}

} // namespace dpi
