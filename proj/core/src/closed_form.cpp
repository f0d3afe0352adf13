#include "dpi/closed_form.hpp"
#include "dpi/errors.hpp"

#include <cmath>

namespace dpi {

namespace {
const BigRat kSixth(1, 6);
const BigRat kFiveSixths(5, 6);

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

BigRat binom(long n, long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return BigRat(b);
}

// Rising factorial (q)_len; throws when a factor vanishes.
BigRat pochhammer_checked(const BigRat& q, long len, const char* who) {
    BigRat acc(1);
    for (long i = 0; i < len; ++i) {
        BigRat f = q + i;
        if (f == 0)
            throw SingularCoefficientError(std::string(who) + ": Pochhammer factor (" +
                                           q.get_str() + ")_" + std::to_string(len) +
                                           " vanishes at offset " + std::to_string(i));
        acc *= f;
    }
    return acc;
}
} // namespace

BesselCoeffs::BesselCoeffs(HPReal d1_, HPReal d2_) : d1(std::move(d1_)), d2(std::move(d2_)) {
    if (d1.is_zero() && d2.is_zero()) throw DomainError("BesselCoeffs needs (d1, d2) != (0, 0)");
}

BesselCoeffs BesselCoeffs::positive_branch(int digits) {
    return BesselCoeffs(HPReal(1L, digits), HPReal(-1L, digits));
}

BesselCoeffs BesselCoeffs::from_C(const HPReal& C1, const HPReal& C2) {
    int digits = std::max(C1.digits(), C2.digits());
    HPReal pi = HPReal::pi(digits);
    return BesselCoeffs(pi * C2, C1 - pi * C2);
}

HPReal Z(const BigRat& nu, const HPReal& t_half, const BesselCoeffs& c) {
    if (is_integer(nu)) {
        long j = nu.get_num().get_si();
        HPReal kj = bessel_k(nu, t_half);
        HPReal ij = bessel_i(nu, t_half);
        HPReal r = c.d1 * ij;
        return (j % 2 == 0) ? r + c.d2 * kj : r - c.d2 * kj;
    }
    return c.d1 * bessel_i(nu, t_half) + c.d2 * bessel_i(-nu, t_half);
}

HPReal Z_dt(const BigRat& nu, const HPReal& t, const BesselCoeffs& c) {
    HPReal th = t / 2L;
    if (is_integer(nu)) {
        long j = nu.get_num().get_si();
        HPReal r = c.d1 * bessel_i_dx(nu, th);
        HPReal kd = bessel_k_dx(nu, th);
        r = (j % 2 == 0) ? r + c.d2 * kd : r - c.d2 * kd;
        return r / 2L;
    }
    return (c.d1 * bessel_i_dx(nu, th) + c.d2 * bessel_i_dx(-nu, th)) / 2L;
}

std::vector<BigRat> f_bessel_coeffs(long m, const BigRat& nu) {
    std::vector<BigRat> coeffs;
    if (m >= 0) {
        coeffs.reserve(m + 1);
        for (long j = 0; j <= m; ++j) {
            BigRat c = binom(m, j) * (nu + j) / pochhammer_checked(nu * 2 + j, m + 1, "f_bessel");
            if (j % 2 == 1) c = -c;
            coeffs.push_back(c);
        }
    } else {
        long M = -m;
        coeffs.reserve(M + 1);
        for (long j = 0; j <= M; ++j)
            coeffs.push_back(binom(M, j) * (BigRat(j) - nu) /
                             pochhammer_checked(BigRat(j) - nu * 2, M + 1, "f_bessel"));
    }
    return coeffs;
}

HPReal f_bessel(long m, const BigRat& nu, const HPReal& t, const BesselCoeffs& c) {
    if (!(t.sign() > 0)) throw DomainError("f_bessel needs t > 0");
    int digits = t.digits();
    auto coeffs = f_bessel_coeffs(m, nu);
    HPReal th = t / 2L;
    HPReal acc(0L, digits);
    if (m >= 0) {
        for (long j = 0; j <= m; ++j) acc += HPReal(coeffs[j], digits) * Z(nu + j, th, c);
        return pow(t, HPReal(-nu, digits)) * acc;
    }
    long M = -m;
    for (long j = 0; j <= M; ++j) acc += HPReal(coeffs[j], digits) * Z(nu - j, th, c);
    return pow(t, HPReal(BigRat(M) - nu, digits)) * acc;
}

HPReal f_bessel_prime(long m, const BigRat& nu, const HPReal& t, const BesselCoeffs& c) {
    HPReal fm = f_bessel(m, nu, t, c);
    HPReal fm1 = f_bessel(m + 1, nu, t, c);
    if (m >= 0) return fm / 2L - HPReal(nu + m, t.digits()) * fm1 - fm1 / 2L;
    return fm / 2L + fm1;
}

namespace {

// K_{1/6}, K_{5/6}, I_{1/6}, I_{-5/6} at t/2 plus t-derivatives, shared by the
// closed forms below.
struct Ladder {
    HPReal K16, K56, I16, Im56;
    HPReal dK16, dK56, dI16, dIm56; // d/dt of the (t/2)-argument functions
};

Ladder ladder(const HPReal& t) {
    HPReal th = t / 2L;
    Ladder l{bessel_k(kSixth, th),      bessel_k(kFiveSixths, th),
             bessel_i(kSixth, th),      bessel_i(-kFiveSixths, th),
             bessel_k_dx(kSixth, th) / 2L, bessel_k_dx(kFiveSixths, th) / 2L,
             bessel_i_dx(kSixth, th) / 2L, bessel_i_dx(-kFiveSixths, th) / 2L};
    return l;
}

HPReal t_from_eps(const HPReal& eps) {
    if (!(eps.sign() > 0)) throw DomainError("closed forms need eps > 0");
    return HPReal(1L, eps.digits()) / (3L * eps);
}

} // namespace

HPReal v0_of_t(const HPReal& t) {
    auto l = ladder(t);
    return (l.K56 / l.K16 - 1L) / 2L;
}

HPReal v0_of_t_prime(const HPReal& t) {
    auto l = ladder(t);
    return (l.dK56 * l.K16 - l.K56 * l.dK16) / (2L * l.K16 * l.K16);
}

HPReal v1_of_t(const HPReal& t) {
    // v_1 = -1 - 2 D/(3t(D+N)) with D = K_{1/6}(t/2), N = -K_{5/6}(t/2);
    // equivalently -1 + 2K_{1/6}/(3t(K_{5/6}-K_{1/6})).
    auto l = ladder(t);
    return HPReal(-1L, t.digits()) + 2L * l.K16 / (3L * t * (l.K56 - l.K16));
}

HPReal v1_of_t_prime(const HPReal& t) {
    auto l = ladder(t);
    HPReal g = l.K56 - l.K16;
    HPReal dg = l.dK56 - l.dK16;
    // d/dt [ (2/3) K16 / (t g) ]
    return (2L * l.dK16 * t * g - 2L * l.K16 * (g + t * dg)) / (3L * t * t * g * g);
}

HPReal v2_of_t(const HPReal& t) {
    // -3(t+2)/(2(3t+2)) + N/(2D) - 4N/((3t+2)((3t+2)D + 3tN)), D = K16, N = -K56.
    auto l = ladder(t);
    HPReal D = l.K16, N = -l.K56;
    HPReal tt = 3L * t + 2L;
    return -3L * (t + 2L) / (2L * tt) + N / (2L * D) - 4L * N / (tt * (tt * D + 3L * t * N));
}

HPReal v0_closed(const HPReal& eps, bool* precision_loss) {
    HPReal t = t_from_eps(eps);
    bool loss = false;
    HPReal th = t / 2L;
    HPReal k56 = bessel_k(kFiveSixths, th, &loss);
    HPReal k16 = bessel_k(kSixth, th, &loss);
    if (precision_loss) *precision_loss = loss;
    return (k56 / k16 - 1L) / 2L;
}

HPReal v1_closed(const HPReal& eps, bool* precision_loss) {
    // K_{5/6}-K_{1/6} cancels ~log10(t) digits as eps -> 0; elevate and round back.
    HPReal t = t_from_eps(eps);
    int digits = eps.digits();
    int extra = std::max(0, static_cast<int>(std::log10(std::max(1.0, t.to_double())))) + 8;
    HPReal v = v1_of_t(t.to_digits(digits + extra));
    if (precision_loss) *precision_loss = false;
    return v.to_digits(digits);
}

HPReal v2_closed(const HPReal& eps, bool* precision_loss) {
    HPReal t = t_from_eps(eps);
    int digits = eps.digits();
    int extra = std::max(0, static_cast<int>(std::log10(std::max(1.0, t.to_double())))) + 8;
    HPReal v = v2_of_t(t.to_digits(digits + extra));
    if (precision_loss) *precision_loss = false;
    return v.to_digits(digits);
}

HPReal v0_lambda(const HPReal& eps, const HPReal& lambda) {
    HPReal t = t_from_eps(eps);
    auto l = ladder(t);
    HPReal den = l.K16 + lambda * l.I16;
    if (den.is_zero()) throw PoleError(0, t.to_double());
    return ((l.K56 - lambda * l.Im56) / den - 1L) / 2L;
}

HPReal lambda_from_v0(const HPReal& eps, const HPReal& v0) {
    HPReal t = t_from_eps(eps);
    auto l = ladder(t);
    HPReal w = 2L * v0 + 1L;
    HPReal den = w * l.I16 + l.Im56;
    if (den.is_zero()) throw PoleError(0, t.to_double());
    return (l.K56 - w * l.K16) / den;
}

HPReal y0_riccati_residual(const HPReal& t, const HPReal& C1, const HPReal& C2) {
    auto l = ladder(t);
    HPReal N = C1 * (l.I16 - l.Im56) + C2 * (l.K16 + l.K56);
    HPReal D = C1 * (l.I16 + l.Im56) + C2 * (l.K16 - l.K56);
    HPReal dN = C1 * (l.dI16 - l.dIm56) + C2 * (l.dK16 + l.dK56);
    HPReal dD = C1 * (l.dI16 + l.dIm56) + C2 * (l.dK16 - l.dK56);
    HPReal y = -N / D;
    HPReal yp = -(dN * D - N * dD) / (D * D);
    return t * yp - y * y / 3L + t * y + HPReal(1L, t.digits()) / 3L;
}

HPReal phi0_ode_residual(const HPReal& t, const HPReal& C1, const HPReal& C2) {
    int digits = t.digits();
    HPReal th = t / 2L;
    // g(t) = C1(I_{1/6}+I_{-5/6}) + C2(K_{1/6}-K_{5/6}) at t/2; second
    // derivatives via the modified Bessel ODE B'' = ((x^2+nu^2) B - x B')/x^2.
    auto dd = [&](const BigRat& nu, const HPReal& b, const HPReal& bp) {
        HPReal nu2(nu * nu, digits);
        return ((th * th + nu2) * b - th * bp) / (th * th);
    };
    HPReal i16 = bessel_i(kSixth, th), im56 = bessel_i(-kFiveSixths, th);
    HPReal k16 = bessel_k(kSixth, th), k56 = bessel_k(kFiveSixths, th);
    HPReal di16 = bessel_i_dx(kSixth, th), dim56 = bessel_i_dx(-kFiveSixths, th);
    HPReal dk16 = bessel_k_dx(kSixth, th), dk56 = bessel_k_dx(kFiveSixths, th);
    HPReal g = C1 * (i16 + im56) + C2 * (k16 - k56);
    HPReal g1 = (C1 * (di16 + dim56) + C2 * (dk16 - dk56)) / 2L;
    HPReal g2 = (C1 * (dd(kSixth, i16, di16) + dd(kFiveSixths, im56, dim56)) +
                 C2 * (dd(kSixth, k16, dk16) - dd(kFiveSixths, k56, dk56))) / 4L;
    HPReal rt = sqrt(t);
    HPReal h = rt * g;
    HPReal h1 = g / (2L * rt) + rt * g1;
    HPReal h2 = -g / (4L * rt * t) + g1 / rt + rt * g2;
    HPReal e = exp(-t / 2L);
    HPReal phi = h * e;
    HPReal phi1 = (h1 - h / 2L) * e;
    HPReal phi2 = (h2 - h1 + h / 4L) * e;
    return t * t * phi2 + t * (t + 1L) * phi1 - phi / 9L;
}

} // namespace dpi
