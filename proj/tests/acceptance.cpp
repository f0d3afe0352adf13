// Acceptance suite: one numbered criterion per run (or "all"), one PASS/FAIL
// line per criterion on stdout, nonzero exit if any requested criterion fails.

#include "dpi/cfrac.hpp"
#include "dpi/closed_form.hpp"
#include "dpi/fixed_point.hpp"
#include "dpi/painleve_v.hpp"
#include "dpi/picard.hpp"
#include "dpi/recurrence.hpp"
#include "dpi/wronskian.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>

using namespace dpi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

// 1. Triple-pipeline agreement, pairwise relative 1e-10 across the eps set.
Outcome criterion1() {
    double worst = 0;
    std::string worst_at;
    for (const char* es : {"0.01", "0.05", "0.1", "0.5", "1", "2", "5"}) {
        HPReal eps = HPReal::parse(es, 50);
        HPReal a = solve_positive(eps, 60, 1e-12).seq.at(0);
        HPReal b = eval_cfrac(eps, 1e-12).value;
        HPReal c = v0_closed(eps);
        double scale = std::abs(c.to_double());
        for (double d : {std::abs((a - b).to_double()), std::abs((a - c).to_double()),
                         std::abs((b - c).to_double())}) {
            double rel = d / scale;
            if (rel > worst) {
                worst = rel;
                worst_at = es;
            }
        }
    }
    std::ostringstream os;
    os << "max pairwise relative deviation " << worst << " (at eps=" << worst_at << ")";
    return {worst <= 1e-10, os.str()};
}

// 2. Paper constants reproduced exactly.
Outcome criterion2() {
    auto s = series_s0(5);
    const long s_want[] = {1, 2, 12, 112, 1392, 21472};
    for (int i = 0; i <= 5; ++i)
        if (s[i] != BigInt(s_want[i])) return {false, "series_s0 mismatch"};
    const long xi_want[] = {1, 2, 4, 5, 7};
    for (int n = 0; n < 5; ++n)
        if (xi_zeta(n).first != xi_want[n]) return {false, "xi mismatch"};
    auto b03 = bound_rational(3, 0);
    if (!(b03.num() == Poly({BigInt(0), BigInt(1), BigInt(12), BigInt(24)}) &&
          b03.den() == Poly({BigInt(1), BigInt(14), BigInt(40), BigInt(24)})))
        return {false, "b_0^(3) coefficients differ from the reference form"};
    for (int n = 0; n <= 20; ++n) {
        if (taylor_c(1, n) != BigInt(2 * (n + 1))) return {false, "c_n^(1) mismatch"};
        if (taylor_c(2, n) != BigInt(4 * (n * n + 2 * n + 2))) return {false, "c_n^(2) mismatch"};
    }
    return {true, "series_s0(5), xi_0..4, b_0^(3), c_n^(1), c_n^(2) all exact"};
}

// 3. Exact-rational bracket nesting and interlacing with the stated strictness.
Outcome criterion3() {
    bool pass = true;
    std::ostringstream os;
    for (const char* es : {"1/10", "1/2", "1"}) {
        BigRat eps = parse_rational(es);
        auto t = bound_table_exact(eps, 12, 20);
        bool nest = true;
        for (int j = 1; j <= 5; ++j)
            for (int n = 0; n <= 20; ++n) {
                if (!(BigRat(0) <= t.b[2 * j - 1][n] && t.b[2 * j - 1][n] < t.b[2 * j + 1][n] &&
                      t.b[2 * j + 1][n] < t.b[2 * j + 2][n] && t.b[2 * j + 2][n] < t.b[2 * j][n]))
                    nest = false;
            }
        auto lace = interlace_check(eps, 5);
        os << "eps=" << es << ": nesting " << (nest ? "ok" : "VIOLATED") << ", interlacing "
           << (lace.all_pass ? "ok" : "VIOLATED (" + lace.first_failure + ")") << "; ";
        pass = pass && nest && lace.all_pass;
    }
    if (!pass)
        os << "[the cross-index (lace) comparisons genuinely fail at depth j=5 for eps >= 1/2: "
              "the T-orbit bound two levels behind overtakes the convergent; see the analysis "
              "in the project notes]";
    return {pass, os.str()};
}

// 4. Rescaled-bound asymptotics at n = 2000 within 5%.
Outcome criterion4() {
    HPReal eps = HPReal::parse("0.1", 50);
    auto t = bound_table(eps, 7, 2000);
    double worst = 0;
    for (int j = 0; j <= 3; ++j) {
        double even = t.rho[2 * j][2000].to_double();
        worst = std::max(worst, std::abs(even - 1.0 / (j + 1)) / (1.0 / (j + 1)));
        if (2 * j + 1 <= 7) {
            double odd = (2L * eps * 2001L * t.rho[2 * j + 1][2000]).to_double();
            worst = std::max(worst, std::abs(odd - (j + 1.0)) / (j + 1.0));
        }
    }
    std::ostringstream os;
    os << "max relative deviation from the parity limits " << worst;
    return {worst <= 0.05, os.str()};
}

// 5. Wronskian chain at eps = 0.1, 80 digits.
Outcome criterion5() {
    int D = 80;
    BigRat eq(1, 10);
    HPReal eps(eq, D);
    HPReal t = HPReal(1L, D) / (3L * eps);
    auto c = BesselCoeffs::positive_branch(D);
    std::vector<HPReal> v;
    for (int n = -1; n <= 21; ++n) v.push_back(v_closed(n, t, c, D));
    double worst_res = 0;
    bool positive = true;
    for (int n = 0; n <= 20; ++n) {
        if (v[n + 1].sign() <= 0) positive = false;
        HPReal r = v[n + 1] * (v[n + 2] + v[n] + 1L) - eps * static_cast<long>(n + 1);
        worst_res = std::max(worst_res, std::abs(r.to_double()));
    }
    auto fp = solve_positive(HPReal(eq, 50), 60, 1e-12);
    double worst_dev = 0;
    for (int n = 0; n <= 20; ++n)
        worst_dev = std::max(worst_dev,
                             std::abs((v[n + 1].to_digits(50) - fp.seq.at(n)).to_double()));
    std::ostringstream os;
    os << "max dP residual " << worst_res << ", positive " << (positive ? "yes" : "NO")
       << ", max |v_n - fixed point| " << worst_dev;
    return {worst_res <= 1e-40 && positive && worst_dev <= 1e-10, os.str()};
}

// 6. Determinant identities over a 30-point random admissible grid at 60 digits.
Outcome criterion6() {
    int D = 60;
    auto c = BesselCoeffs::positive_branch(D);
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> um(-5, -1), un(1, 4), uk(0, 4);
    std::uniform_real_distribution<double> ut(0.7, 20.0);
    const BigRat nus[] = {BigRat(-1, 6), BigRat(5, 6), BigRat(1, 6), BigRat(7, 6)};
    double worst = 0;
    int points = 0;
    for (int i = 0; i < 30; ++i) {
        long m = um(rng);
        int n = un(rng);
        const BigRat& nu = nus[i % 4];
        HPReal t(ut(rng), D);
        double r = 0;
        switch (i % 4) {
            case 0:
                r = check_bilinear_A(m, n, nu, t, c, D).to_double();
                break;
            case 1:
                r = check_bilinear_B(m, n, nu, t, c, D).to_double();
                break;
            case 2:
                r = check_det_symmetry(m, n, nu, t, c, D).to_double();
                break;
            default: {
                auto rr = check_trilinear(uk(rng), t, c, D);
                r = std::max({rr[0].to_double(), rr[1].to_double(), rr[2].to_double()});
            }
        }
        worst = std::max(worst, r);
        ++points;
    }
    std::ostringstream os;
    os << "max relative residual " << worst << " over " << points << " grid points";
    return {worst <= 1e-30, os.str()};
}

// 7. Geometry, exact integer arithmetic.
Outcome criterion7() {
    bool ok = true;
    for (int i = 0; i < 10; ++i) {
        PicardClass e;
        e.c[i] = 1;
        if (!(phi_pull(phi_push(e)) == e)) ok = false;
        for (int j = 0; j < 10; ++j) {
            PicardClass f;
            f.c[j] = 1;
            if (intersection(phi_push(e), phi_push(f)) != intersection(e, f)) ok = false;
        }
    }
    if (!(phi_push(PicardClass::anticanonical()) == PicardClass::anticanonical())) ok = false;
    if (translation_check(1).has_value()) ok = false;
    if (translation_check(2).has_value()) ok = false;
    auto t3 = translation_check(3);
    bool t3ok = t3.has_value() && *t3 == std::array<long, 4>{0, 1, -1, 0};
    return {ok && t3ok,
            std::string("pull∘push=id, form and -K preserved, phi^1/phi^2 not translations, ") +
                "phi^3 = translation by <0,1,-1,0> delta_hat: " +
                (ok && t3ok ? "all exact" : "FAILED")};
}

// 8. Riccati/ODE cross-checks.
Outcome criterion8() {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uc(-2.0, 2.0), ut(0.5, 6.0);
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        HPReal C1(uc(rng), 50), C2(uc(rng), 50), t(ut(rng), 50);
        if (C1.is_zero() && C2.is_zero()) C1 = HPReal(1L, 50);
        worst = std::max(worst, std::abs(y0_riccati_residual(t, C1, C2).to_double()));
    }
    OdeRhs rhs = [](double e, const std::vector<double>& s) {
        double v = s[0];
        return std::vector<double>{(e * (1 + 2 * v) - v - v * v) / (3 * e * e)};
    };
    OdeOptions opt;
    opt.rtol = 1e-10;
    opt.atol = 1e-13;
    HPReal e0 = HPReal::parse("0.01", 50);
    auto traj = integrate(rhs, 0.01, {v0_closed(e0).to_double()}, 1.0, opt);
    double err = std::abs(traj.y_end()[0] - v0_closed(HPReal(1L, 50)).to_double());
    std::ostringstream os;
    os << "max Riccati residual " << worst << ", integration endpoint error " << err;
    return {worst <= 1e-40 && err <= 1e-8, os.str()};
}

// 9. BT chain consistency on the closed forms for n <= 10.
Outcome criterion9() {
    int W = 110;
    HPReal t(2L, W);
    auto c = BesselCoeffs::positive_branch(W);
    std::vector<HPReal> v;
    for (int n = -1; n <= 11; ++n) v.push_back(v_closed(n, t, c, W));
    HPReal h = HPReal::parse("1e-27", W);
    double worst_dd = 0, worst_dpi = 0;
    for (int n = 0; n <= 10; ++n) {
        HPReal vp = (v_closed(n, t + h, c, W) - v_closed(n, t - h, c, W)) / (2L * h);
        std::array<HPReal, 3> tri{HPReal(BigRat(-(n + 1), 3), W), HPReal(BigRat(1, 3), W),
                                  HPReal(BigRat(-(n + 1), 3), W)};
        auto [rp, rm] = dd_residuals(t, v[n + 1], vp, v[n + 2], v[n], tri);
        worst_dd = std::max({worst_dd, std::abs(rp.to_double()), std::abs(rm.to_double())});
        HPReal dpi_res = v[n + 2] + v[n] + 1L + tri[0] / (t * v[n + 1]);
        worst_dpi = std::max(worst_dpi, std::abs(dpi_res.to_double()));
    }
    std::ostringstream os;
    os << "max dd residual " << worst_dd << ", max eliminated-derivative residual " << worst_dpi;
    return {worst_dd <= 1e-30 && worst_dpi <= 1e-30, os.str()};
}

// 10. Conjecture probe (report, not gate, but the listed eps all lie below eps*).
Outcome criterion10() {
    bool all = true;
    std::ostringstream os;
    for (const char* es : {"0.1", "0.5", "1.0", "1.2"}) {
        auto rep = conjecture_check(parse_rational(es), 6, 50);
        os << "eps=" << es << (rep.all_pass ? " pass; " : " FAIL; ");
        all = all && rep.all_pass;
    }
    os << "analytic boundary eps* = (sqrt(2)+1)/2 = " << eps_star();
    return {all, os.str()};
}

const char* kDescriptions[11] = {
    "",
    "triple-pipeline v0 agreement (rel 1e-10)",
    "reference constants exact",
    "bracket nesting and interlacing, exact rational",
    "rescaled-bound asymptotics at n=2000 (5%)",
    "Wronskian chain n<=20 at 80 digits",
    "determinant identities at 60 digits (1e-30)",
    "Picard geometry, exact",
    "Riccati residuals and ODE integration",
    "BT chain differential-difference consistency",
    "conjectured product bounds probe",
};

Outcome run(int i) {
    switch (i) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        case 10: return criterion10();
    }
    return {false, "unknown criterion"};
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> todo;
    if (argc < 2 || std::strcmp(argv[1], "all") == 0)
        for (int i = 1; i <= 10; ++i) todo.push_back(i);
    else
        todo.push_back(std::atoi(argv[1]));
    bool all_pass = true;
    for (int i : todo) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = run(i);
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i << " ["
                  << kDescriptions[i] << "]: " << o.detail << " (" << dt << " s)\n";
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
