#include "dpi/bessel.hpp"
#include "dpi/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dpi {

namespace {

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

// Ascending series I_nu(x) = (x/2)^nu sum_k (x^2/4)^k / (k! Gamma(nu+k+1)).
// All terms positive for x > 0, so the working precision only needs guard
// digits for accumulation length, not cancellation.
HPReal bessel_i_series(const BigRat& nu, const HPReal& x, int out_digits) {
    int work = out_digits + 15;
    HPReal xw = x.to_digits(work);
    HPReal q = xw * xw / 4L;
    HPReal nuw(nu, work);
    // t_0 = (x/2)^nu / Gamma(nu+1); for negative integer nu the caller maps to |nu|.
    HPReal t = pow(xw / 2L, nuw) / gamma(nuw + 1L);
    HPReal acc = t;
    double xd = xw.to_double();
    double nu_abs = std::fabs(nu.get_d());
    const HPReal thresh = HPReal::parse("1e-" + std::to_string(work + 5), work);
    for (long k = 1; k < 1000000; ++k) {
        t = t * q / (HPReal(k, work) * (nuw + k));
        acc += t;
        // Early terms can alternate in sign when nu < -1; only stop once the
        // term magnitudes are in steady decay.
        if (k > xd / 2 && k > nu_abs + 2 && abs(t) < abs(acc) * thresh) break;
    }
    return acc.to_digits(out_digits);
}

// Poch product a_k(nu) = prod_{j=1..k} (4nu^2 - (2j-1)^2) / (8^k k!), accumulated
// incrementally by the caller.
struct AsymptoticSum {
    HPReal sum;         // sum of kept terms
    HPReal last_mag;    // magnitude of first omitted term (error scale)
};

AsymptoticSum asymptotic_series(const BigRat& nu, const HPReal& x, int work, bool alternating) {
    HPReal fournu2(nu * nu * 4, work);
    HPReal term(1L, work);
    HPReal sum = term;
    HPReal prev_mag = abs(term);
    for (long k = 1; k < 100000; ++k) {
        HPReal factor = (fournu2 - HPReal((2 * k - 1) * (2 * k - 1), work)) /
                        (HPReal(8L * k, work) * x);
        term = term * factor;
        if (alternating) term = -term;
        HPReal mag = abs(term);
        if (mag > prev_mag) return {sum, mag};  // divergent tail reached
        sum += term;
        if (mag < HPReal::parse("1e-" + std::to_string(work + 5), work)) return {sum, mag};
        prev_mag = mag;
    }
    return {sum, prev_mag};
}

// Threshold above which the large-x asymptotic expansions certify the target
// accuracy (min term ~ e^{-2x} must be below 10^{-digits}).
double asym_threshold(int digits) { return 1.1513 * digits + 20.0; }

HPReal bessel_i_large(const BigRat& nu, const HPReal& x, int out_digits, bool* precision_loss) {
    int work = out_digits + 15;
    HPReal xw = x.to_digits(work);
    auto [sum, last] = asymptotic_series(nu, xw, work, /*alternating=*/true);
    // Error: first omitted term plus the e^{-x} reflection series, both
    // relative to e^x/sqrt(2 pi x). Flag if above target.
    double err_log10 = std::max(last.log10_abs(), -2.0 * xw.to_double() / 2.302585092994046);
    if (precision_loss && err_log10 > -out_digits) *precision_loss = true;
    HPReal pref = exp(xw) / sqrt(2L * HPReal::pi(work) * xw);
    return (pref * sum).to_digits(out_digits);
}

HPReal bessel_k_large(const BigRat& nu, const HPReal& x, int out_digits, bool* precision_loss) {
    int work = out_digits + 15;
    HPReal xw = x.to_digits(work);
    auto [sum, last] = asymptotic_series(nu, xw, work, /*alternating=*/false);
    if (precision_loss && last.log10_abs() > -out_digits) *precision_loss = true;
    HPReal pref = sqrt(HPReal::pi(work) / (2L * xw)) * exp(-xw);
    return (pref * sum).to_digits(out_digits);
}

// K_j at integer order j >= 0 by the standard logarithmic series.
HPReal bessel_k_int_series(long j, const HPReal& x, int out_digits) {
    // Everything here is ~e^{x}-sized while K_j ~ e^{-x}: elevate by the
    // cancellation budget 2x/ln10.
    int work = out_digits + 10 + static_cast<int>(0.87 * x.to_double()) + 10;
    HPReal xw = x.to_digits(work);
    HPReal half_x = xw / 2L;
    HPReal q = half_x * half_x;
    HPReal lnhalf = log(half_x);
    HPReal g = HPReal::euler(work);

    // Finite part: (1/2) (x/2)^{-j} sum_{k=0}^{j-1} (j-k-1)!/k! (-x^2/4)^k.
    HPReal finite(0L, work);
    if (j > 0) {
        HPReal term = gamma(HPReal(j, work)); // (j-1)!
        for (long k = 0; k < j; ++k) {
            finite += term;
            if (k + 1 < j)
                term = term * (-q) / (HPReal(k + 1, work) * HPReal(j - k - 1, work));
        }
        finite = finite * pow_si(half_x, -j) / 2L;
    }

    // Log part: (-1)^{j+1} ln(x/2) I_j(x).
    HPReal ij = bessel_i_series(BigRat(j), xw, work);
    HPReal logpart = lnhalf * ij;
    if (j % 2 == 0) logpart = -logpart;

    // Psi part: (-1)^j (1/2)(x/2)^j sum_k (psi(k+1)+psi(j+k+1))/(k!(j+k)!) q^k.
    HPReal psi_k = -g;           // psi(1)
    HPReal psi_jk = -g;          // psi(j+1) built below
    for (long i = 1; i <= j; ++i) psi_jk += HPReal(1L, work) / i;
    HPReal term = HPReal(1L, work) / gamma(HPReal(j + 1, work)); // 1/(0! j!)
    HPReal psisum(0L, work);
    const HPReal thresh = HPReal::parse("1e-" + std::to_string(work + 5), work);
    for (long k = 0; k < 1000000; ++k) {
        HPReal add = (psi_k + psi_jk) * term;
        psisum += add;
        if (k > xw.to_double() / 2 && abs(add) < thresh * (abs(psisum) + HPReal(1L, work)))
            break;
        psi_k += HPReal(1L, work) / (k + 1);
        psi_jk += HPReal(1L, work) / (j + k + 1);
        term = term * q / (HPReal(k + 1, work) * HPReal(j + k + 1, work));
    }
    HPReal psipart = pow_si(half_x, j) * psisum / 2L;
    if (j % 2 == 1) psipart = -psipart;

    return (finite + logpart + psipart).to_digits(out_digits);
}

} // namespace

HPReal bessel_i(const BigRat& nu, const HPReal& x, bool* precision_loss) {
    if (!(x.sign() > 0)) throw DomainError("bessel_i needs x > 0");
    int digits = x.digits();
    BigRat n = nu;
    n.canonicalize();
    if (is_integer(n) && n < 0) n = -n; // I_{-m} = I_m
    if (x.to_double() > asym_threshold(digits)) return bessel_i_large(n, x, digits, precision_loss);
    return bessel_i_series(n, x, digits);
}

HPReal bessel_k(const BigRat& nu, const HPReal& x, bool* precision_loss) {
    if (!(x.sign() > 0)) throw DomainError("bessel_k needs x > 0");
    int digits = x.digits();
    BigRat n = abs(nu); // K_{-nu} = K_nu
    n.canonicalize();
    if (x.to_double() > asym_threshold(digits)) return bessel_k_large(n, x, digits, precision_loss);
    if (is_integer(n)) return bessel_k_int_series(n.get_num().get_si(), x, digits);
    // Reflection K_nu = pi (I_{-nu} - I_nu) / (2 sin(nu pi)): the difference
    // cancels ~2x/ln10 digits, so evaluate the series elevated by that budget.
    int budget = static_cast<int>(0.87 * x.to_double()) + 10;
    for (int attempt = 0; attempt < 4; ++attempt) {
        int work = digits + budget;
        HPReal xw = x.to_digits(work);
        HPReal im = bessel_i_series(-n, xw, work);
        HPReal ip = bessel_i_series(n, xw, work);
        HPReal diff = im - ip;
        double lost = im.log10_abs() - diff.log10_abs(); // digits cancelled
        if (!std::isfinite(lost)) lost = 2.0 * work;     // total cancellation
        if (lost <= budget - 5) {
            HPReal k = HPReal::pi(work) * diff / (2L * sin_pi_times(n, work));
            return k.to_digits(digits);
        }
        budget = static_cast<int>(lost) + 15;
    }
    if (precision_loss) *precision_loss = true;
    int work = digits + budget;
    HPReal xw = x.to_digits(work);
    HPReal diff = bessel_i_series(-n, xw, work) - bessel_i_series(n, xw, work);
    return (HPReal::pi(work) * diff / (2L * sin_pi_times(n, work))).to_digits(digits);
}

HPReal bessel_i_scaled(const BigRat& nu, const HPReal& x, bool* precision_loss) {
    return bessel_i(nu, x, precision_loss) * exp(-x);
}

HPReal bessel_k_scaled(const BigRat& nu, const HPReal& x, bool* precision_loss) {
    return bessel_k(nu, x, precision_loss) * exp(x);
}

HPReal bessel_i_dx(const BigRat& nu, const HPReal& x) {
    return bessel_i(nu + 1, x) + HPReal(nu, x.digits()) / x * bessel_i(nu, x);
}

HPReal bessel_k_dx(const BigRat& nu, const HPReal& x) {
    return -bessel_k(nu + 1, x) + HPReal(nu, x.digits()) / x * bessel_k(nu, x);
}

} // namespace dpi
