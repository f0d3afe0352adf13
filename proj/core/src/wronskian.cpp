#include "dpi/wronskian.hpp"
#include "dpi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dpi {

namespace {

const BigRat kNu56(5, 6);
const BigRat kNuM16(-1, 6);

int auto_digits(int requested, int size) { return std::max(requested, 50 + 6 * size) + 10; }

// f-value cache for one determinant evaluation, keyed by (column, m-index).
struct FCache {
    const HPReal& t;
    const BesselCoeffs& c;
    long base_m;
    BigRat base_nu;
    std::map<std::pair<int, long>, HPReal> vals;

    HPReal get(int col, long m) {
        auto key = std::make_pair(col, m);
        auto it = vals.find(key);
        if (it != vals.end()) return it->second;
        HPReal v = f_bessel(m, base_nu + col, t, c);
        vals.emplace(key, v);
        return v;
    }
};

// One d/dt application to a linear combination sum_m coeff_m f_{m,nu}.
std::map<long, BigRat> differentiate(const std::map<long, BigRat>& combo, const BigRat& nu) {
    std::map<long, BigRat> out;
    for (const auto& [m, coef] : combo) {
        out[m] += coef / 2;
        if (m >= 0) out[m + 1] -= coef * (nu + m + BigRat(1, 2));
        else out[m + 1] += coef;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

struct DetOutcome {
    HPReal det;
    bool loss;
};

DetOutcome determinant(std::vector<std::vector<HPReal>>& a, int work_digits) {
    int n = static_cast<int>(a.size());
    HPReal det(1L, work_digits);
    int sign = 1;
    double hadamard_log10 = 0;
    for (int i = 0; i < n; ++i) {
        double rmax = -1e300;
        for (int j = 0; j < n; ++j) rmax = std::max(rmax, a[i][j].log10_abs());
        hadamard_log10 += rmax + 0.5 * std::log10(static_cast<double>(n));
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
        if (a[piv][col].is_zero()) return {HPReal(0L, work_digits), false};
        if (piv != col) {
            std::swap(a[piv], a[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r) {
            HPReal factor = a[r][col] / a[col][col];
            for (int j = col; j < n; ++j) a[r][j] -= factor * a[col][j];
        }
        det *= a[col][col];
    }
    if (sign < 0) det = -det;
    bool loss = false;
    if (!det.is_zero()) {
        double lost = hadamard_log10 - det.log10_abs();
        loss = lost > work_digits / 2.0;
    }
    return {det, loss};
}

HPReal det_B(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
             int work_digits, bool* loss = nullptr) {
    if (n < 0) throw DomainError("wronskian_B needs n >= 0");
    HPReal tw = t.to_digits(work_digits);
    if (n == 0) return HPReal(1L, work_digits);
    FCache cache{tw, c, m, nu, {}};
    std::vector<std::vector<HPReal>> a(n, std::vector<HPReal>(n, HPReal(0L, work_digits)));
    for (int col = 0; col < n; ++col) {
        BigRat nul = nu + col;
        std::map<long, BigRat> combo{{m - col, BigRat(1)}};
        for (int row = 0; row < n; ++row) {
            HPReal entry(0L, work_digits);
            for (const auto& [mi, coef] : combo) entry += HPReal(coef, work_digits) * cache.get(col, mi);
            a[row][col] = entry;
            if (row + 1 < n) combo = differentiate(combo, nul);
        }
    }
    auto out = determinant(a, work_digits);
    if (loss) *loss = out.loss;
    return out.det;
}

HPReal rel_residual(std::initializer_list<HPReal> terms) {
    int digits = terms.begin()->digits();
    HPReal sum(0L, digits), scale(0L, digits);
    for (const auto& x : terms) {
        sum += x;
        scale = max(scale, abs(x));
    }
    if (scale.is_zero()) return abs(sum);
    return abs(sum) / scale;
}

} // namespace

DetValue wronskian_B(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                     int digits) {
    int work = auto_digits(digits, n);
    DetValue dv;
    dv.m = m;
    dv.n = n;
    dv.nu = nu;
    dv.size = n;
    dv.hp = det_B(m, n, nu, t, c, work, &dv.precision_loss).to_digits(std::max(digits, 50));
    dv.value = LogScaled::from(dv.hp);
    return dv;
}

HPReal v_closed(int n, const HPReal& t, const BesselCoeffs& c, int digits, bool swapped_branch) {
    if (n < -1) throw DomainError("v_closed needs n >= -1");
    if (n == -1) return HPReal(0L, digits);
    int k = n / 3;
    int work = auto_digits(digits, k + 2);
    HPReal tw = t.to_digits(work);
    auto B = [&](long m, int nn, const BigRat& nu, const BesselCoeffs& cc) {
        return det_B(m, nn, nu, tw, cc, work);
    };
    HPReal out(0L, work);
    switch (n % 3) {
        case 0:
            out = (HPReal(static_cast<long>(k), work) + HPReal(BigRat(1, 3), work)) * B(1 - k, k, kNuM16, c) *
                  B(-1 - k, k + 1, kNu56, c) /
                  (B(-k, k, kNu56, c) * B(-k, k + 1, kNuM16, c));
            break;
        case 1:
            if (swapped_branch) {
                BesselCoeffs swapped(c.d2, c.d1);
                out = (HPReal(static_cast<long>(k), work) + HPReal(BigRat(2, 3), work)) *
                      B(-k, k, BigRat(1, 6), swapped) * B(-2 - k, k + 1, BigRat(7, 6), swapped) /
                      (B(-k - 1, k, BigRat(7, 6), swapped) * B(-k - 1, k + 1, BigRat(1, 6), swapped));
            } else {
                out = -HPReal(static_cast<long>(3 * k + 2), work) / (3L * tw) * B(-k, k, kNu56, c) *
                      B(-k - 2, k + 1, kNu56, c) /
                      (B(-k - 1, k, kNu56, c) * B(-k - 1, k + 1, kNu56, c));
            }
            break;
        case 2:
            out = B(-1 - k, k, kNu56, c) * B(-1 - k, k + 2, kNuM16, c) /
                  (B(-k - 2, k + 1, kNu56, c) * B(-k, k + 1, kNuM16, c));
            break;
    }
    return out.to_digits(digits);
}

HPReal check_bilinear_A(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                        int digits) {
    if (m >= 0) throw DomainError("bilinear A needs m < 0");
    if (n < 1) throw DomainError("bilinear A needs n >= 1");
    int work = auto_digits(digits, n + 1);
    HPReal tw = t.to_digits(work);
    auto B = [&](long mm, int nn, const BigRat& nn_u) { return det_B(mm, nn, nn_u, tw, c, work); };
    HPReal t1 = B(m, n - 1, nu + 1) * B(m, n + 1, nu);
    HPReal t2 = B(m - 1, n, nu + 1) * B(m + 1, n, nu);
    HPReal t3 = -(B(m, n, nu + 1) * B(m, n, nu));
    return rel_residual({t1, t2, t3}).to_digits(digits);
}

HPReal check_bilinear_B(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                        int digits) {
    if (m > 0) throw DomainError("bilinear B needs m <= 0");
    int work = auto_digits(digits, n + 1);
    HPReal tw = t.to_digits(work);
    auto B = [&](long mm, int nn, const BigRat& nn_u) { return det_B(mm, nn, nn_u, tw, c, work); };
    HPReal t1 = B(m, n + 1, nu) * B(m - 2, n, nu + 1);
    HPReal t2 = HPReal(nu + n + BigRat(1, 2), work) * B(m - 2, n + 1, nu + 1) * B(m, n, nu);
    HPReal t3 = B(m - 1, n, nu + 1) * B(m - 1, n + 1, nu);
    return rel_residual({t1, t2, t3}).to_digits(digits);
}

HPReal check_det_symmetry(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                          int digits) {
    if (nu.get_den() == 1) throw DomainError("determinant symmetry needs non-integer nu");
    int work = auto_digits(digits, n);
    HPReal tw = t.to_digits(work);
    BigRat nu_r = BigRat(1) - m - n - nu;
    BesselCoeffs swapped(c.d2, c.d1);
    HPReal lhs = det_B(m, n, nu, tw, c, work);
    HPReal rhs = det_B(m, n, nu_r, tw, swapped, work);
    auto r_const = [&](const BigRat& v) {
        BigRat acc(1);
        if (m >= n - 1) {
            for (long l = 0; l < n; ++l)
                for (long i = 0; i < l; ++i) acc *= v + m + BigRat(1, 2) + i;
        } else if (m >= 1) {
            for (long l = 0; l <= m; ++l)
                for (long i = 0; i < l; ++i) acc *= v + n - BigRat(1, 2) + i;
        }
        return acc;
    };
    HPReal factor = pow(tw, HPReal(BigRat(n) * (BigRat(1) - m - n - nu * 2), work));
    if (m >= 1) factor = factor * HPReal(r_const(nu) / r_const(nu_r), work);
    if (m <= n - 2 && (m * n) % 2 != 0) factor = -factor;
    HPReal rhs_full = factor * rhs;
    return (abs(lhs - rhs_full) / max(abs(lhs), abs(rhs_full))).to_digits(digits);
}

std::array<HPReal, 3> check_trilinear(int k, const HPReal& t, const BesselCoeffs& c, int digits) {
    if (k < 0) throw DomainError("check_trilinear needs k >= 0");
    int work = auto_digits(digits, k + 2);
    HPReal tw = t.to_digits(work);
    auto S = [&](int j) { return det_B(-j, j, kNu56, tw, c, work); };
    auto T = [&](int j) {
        return (j < 0) ? HPReal(0L, work) : det_B(-j - 1, j, kNu56, tw, c, work);
    };
    auto U = [&](int j) { return det_B(-j, j + 1, kNuM16, tw, c, work); };
    auto frac = [&](int num, int den) { return HPReal(BigRat(num, den), work); };

    // n = 3k+1 step of dP_I: S_{k+1}(T_k U_k + (k+1/3) U_{k-1} T_{k+1})
    //                        + S_k(T_k U_{k+1} + U_k T_{k+1}) = 0.
    HPReal e1 = rel_residual({S(k + 1) * T(k) * U(k),
                              frac(3 * k + 1, 3) * S(k + 1) * U(k - 1) * T(k + 1),
                              S(k) * T(k) * U(k + 1), S(k) * U(k) * T(k + 1)});

    // n = 3k step: t(S_{k+1} T_{k-1} U_k + U_{k-1} S_{k+1} T_k)
    //              = S_k U_k T_k + (k+2/3) U_{k-1} S_k T_{k+1}.
    HPReal e2 = rel_residual({tw * S(k + 1) * T(k - 1) * U(k), tw * U(k - 1) * S(k + 1) * T(k),
                              -(S(k) * U(k) * T(k)), -(frac(3 * k + 2, 3) * U(k - 1) * S(k) * T(k + 1))});

    // n = 3k+2 step: t T_k(S_{k+1} U_{k+1} + (k+4/3) U_k S_{k+2})
    //                = T_{k+1}((k+2/3) U_{k+1} S_k + (k+1) U_k S_{k+1}).
    HPReal e3 = rel_residual({tw * T(k) * S(k + 1) * U(k + 1),
                              tw * frac(3 * k + 4, 3) * T(k) * U(k) * S(k + 2),
                              -(frac(3 * k + 2, 3) * T(k + 1) * U(k + 1) * S(k)),
                              -(HPReal(static_cast<long>(k + 1), work) * T(k + 1) * U(k) * S(k + 1))});
    return {e1.to_digits(digits), e2.to_digits(digits), e3.to_digits(digits)};
}

std::vector<HPReal> tau_ratios(int n_max, const HPReal& t, const BesselCoeffs& c, int digits) {
    if (n_max < 3) throw DomainError("tau_ratios needs n_max >= 3");
    int k_top = n_max / 3 + 1;
    int work = auto_digits(digits, k_top + 2);
    HPReal tw = t.to_digits(work);
    std::vector<HPReal> Sv, Tv, Uv;
    for (int j = 0; j <= k_top + 1; ++j) {
        Sv.push_back(det_B(-j, j, kNu56, tw, c, work));
        Tv.push_back(det_B(-j - 1, j, kNu56, tw, c, work));
        Uv.push_back(det_B(-j, j + 1, kNuM16, tw, c, work));
    }
    // Gauge factors absorbing the scalar prefactors of the v_n case formula.
    std::vector<HPReal> A{HPReal(1L, work)}, Bg{HPReal(1L, work)}, Cg;
    Cg.push_back(HPReal(1L, work)); // C_{-1}
    Cg.push_back(HPReal(1L, work)); // C_0
    for (int k = 1; k <= k_top; ++k) {
        A.push_back(A[k - 1] * HPReal(BigRat(3 * k + 1, 3), work) * Cg[k] / Cg[k - 1]);
        Bg.push_back(Bg[k - 1] * (-HPReal(BigRat(3 * k + 2, 3), work) / tw) * A[k] / A[k - 1]);
        Cg.push_back(Cg[k] * Bg[k] / Bg[k - 1]);
    }
    auto upsilon = [&](int n) -> HPReal {
        if (n == -1) return Cg[0] * Uv[0]; // C_{-1} slot
        int k = n / 3;
        switch (n % 3) {
            case 0: return A[k] * Sv[k + 1];
            case 1: return Bg[k] * Tv[k + 1];
            default: return Cg[k + 1] * Uv[k + 1];
        }
    };
    std::vector<HPReal> ratios;
    for (int n = 3; n <= n_max; ++n) {
        HPReal comb = upsilon(n) * upsilon(n - 4) / (upsilon(n - 1) * upsilon(n - 3));
        HPReal v = v_closed(n, tw, c, work);
        ratios.push_back((comb / v).to_digits(digits));
    }
    return ratios;
}

PVAbg bessel_sol_params_1(long m, int n, const BigRat& nu) {
    BigRat a = nu * 2 + 2 * n + 1;
    BigRat b = nu * 2 + 2 * m + 2 * n - 1;
    return {a * a / 8, -b * b / 8, nu * 2 + m - 1};
}

PVAbg bessel_sol_params_2(long m, int n, const BigRat& nu) {
    BigRat b = nu * 2 + m + n;
    return {BigRat(n) * n / 2, -b * b / 2, BigRat(m)};
}

BigRat bessel_sol_C1(long m, int n, const BigRat& nu) {
    if (m >= n + 2) return BigRat(1, 2) - m - nu;
    if (m == n + 1) return BigRat(1);
    return BigRat(-1) / (nu + n + BigRat(1, 2));
}

BigRat bessel_sol_C2(long m, int n, const BigRat& nu) {
    if (m >= n) return -(nu + m + BigRat(1, 2));
    return BigRat(1);
}

HPReal bessel_sol_y1(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                     int digits) {
    int work = auto_digits(digits, n + 1);
    HPReal tw = t.to_digits(work);
    HPReal y = HPReal(bessel_sol_C1(m, n, nu), work) * det_B(m, n + 1, nu, tw, c, work) *
               det_B(m - 2, n, nu + 1, tw, c, work) /
               (det_B(m, n, nu, tw, c, work) * det_B(m - 2, n + 1, nu + 1, tw, c, work));
    return y.to_digits(digits);
}

HPReal bessel_sol_y2(long m, int n, const BigRat& nu, const HPReal& t, const BesselCoeffs& c,
                     int digits) {
    int work = auto_digits(digits, n + 1);
    HPReal tw = t.to_digits(work);
    HPReal y = HPReal(bessel_sol_C2(m, n, nu), work) * det_B(m, n, nu + 1, tw, c, work) *
               det_B(m, n, nu, tw, c, work) /
               (det_B(m, n - 1, nu + 1, tw, c, work) * det_B(m, n + 1, nu, tw, c, work));
    return y.to_digits(digits);
}

} // namespace dpi
