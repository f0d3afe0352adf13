#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpi/cfrac.hpp"
#include "dpi/closed_form.hpp"
#include "dpi/fixed_point.hpp"

using namespace dpi;

TEST_CASE("xi and zeta coefficient pattern") {
    long xs[] = {1, 2, 4, 5, 7};
    for (int n = 0; n < 5; ++n) CHECK(xi_zeta(n).first == xs[n]);
    CHECK(xi_zeta(0).second == 2);
    for (long n = 0; n <= 100; ++n) {
        auto [xi, ze] = xi_zeta(n);
        auto [xi1, ze1] = xi_zeta(n + 1);
        CHECK(ze1 == 3 - ze);
        CHECK(xi1 == xi + ze1);
    }
}

TEST_CASE("first convergents in closed form") {
    BigRat e(7, 10);
    CHECK(convergent(0, e) == e);
    CHECK(convergent(1, e) == e / (BigRat(1) + e * 2));
    CHECK(convergent(2, e) == e * (BigRat(1) + e * 4) / (BigRat(1) + e * 6));
    // first two convergents coincide with the T-orbit bounds at n=0
    auto t = bound_table_exact(e, 2, 0);
    CHECK(convergent(1, e) == t.b[1][0]);
    CHECK(convergent(2, e) == t.b[2][0]);
}

TEST_CASE("adjacent convergent gap formula is exact") {
    BigRat e(1, 3);
    auto f = SFraction::build(10);
    for (int k = 1; k <= 10; ++k) {
        BigRat direct = BigRat(f.P[k].eval(e)) / f.Q[k].eval(e) -
                        BigRat(f.P[k - 1].eval(e)) / f.Q[k - 1].eval(e);
        CHECK(convergent_gap(k, e) == direct);
    }
}

TEST_CASE("convergents alternate around the limit") {
    HPReal eps = HPReal::parse("0.4", 50);
    auto lim = eval_cfrac(eps, 1e-35);
    BigRat e(2, 5);
    for (int k = 0; k <= 12; ++k) {
        HPReal ck(convergent(k, e), 50);
        if (k % 2 == 0) CHECK(ck > lim.value);
        else CHECK(ck < lim.value);
    }
}

TEST_CASE("eval_cfrac matches the other two pipelines") {
    HPReal eps = HPReal::parse("0.1", 50);
    auto cf = eval_cfrac(eps, 1e-14);
    auto fp = solve_positive(eps, 50, 1e-13);
    CHECK(abs(cf.value - fp.seq.at(0)).to_double() < 1e-12);
    CHECK(cf.error_bound.to_double() < 1e-14);
    // eps -> 0 truncation vs leading series
    HPReal se = HPReal::parse("1e-4", 60);
    auto cs = eval_cfrac(se, 1e-30);
    HPReal series = se - 2L * se * se + 12L * se * se * se;
    CHECK((abs(cs.value - series) / cs.value).to_double() < 1e-6);
    // large eps against the Bessel ratio
    HPReal e5 = HPReal(5L, 50);
    auto c5 = eval_cfrac(e5, 1e-14);
    CHECK(abs(c5.value - v0_closed(e5)).to_double() < 1e-12);
    CHECK_THROWS_AS(eval_cfrac(HPReal(0L, 30), 1e-10), DomainError);
    CHECK_THROWS_AS(eval_cfrac(HPReal(5L, 50), 1e-14, 50), NoConvergenceError);
}

TEST_CASE("fraction tails give the next chain entries") {
    HPReal eps = HPReal::parse("0.3", 50);
    auto e0 = eval_eta(0, eps, 1e-35);
    auto e1 = eval_eta(1, eps, 1e-35);
    auto e2 = eval_eta(2, eps, 1e-35);
    CHECK(abs(e0.value - v0_closed(eps)).to_double() < 1e-30);
    CHECK(abs(e1.value - v1_closed(eps)).to_double() < 1e-30);
    CHECK(abs(e2.value - e0.value - v2_closed(eps)).to_double() < 1e-30);
    // tail consistency eta_n = xi_n eps/(1 + eta_{n+1})
    CHECK(abs(e0.value - eps / (1L + e1.value)).to_double() < 1e-30);
}

TEST_CASE("series s0 recursion") {
    auto s = series_s0(5);
    BigInt want[] = {BigInt(1), BigInt(2), BigInt(12), BigInt(112), BigInt(1392), BigInt(21472)};
    for (int i = 0; i <= 5; ++i) CHECK(s[i] == want[i]);
    // one explicit recursion step: s1 = (3*0+1) s0 + s0*s0
    CHECK(s[1] == BigInt(3 * 0 + 1) * s[0] + s[0] * s[0]);
}

TEST_CASE("convergent taylor matches the series coefficients") {
    auto s = series_s0(11);
    auto f = SFraction::build(10);
    for (int k = 2; k <= 10; ++k) {
        RationalFunc conv(f.P[k], f.Q[k]);
        auto tay = conv.taylor(k + 1);
        CHECK(tay[0] == 0);
        for (int i = 1; i <= k + 1; ++i) {
            BigRat want = BigRat(s[i - 1]) * ((i - 1) % 2 ? -1 : 1);
            CHECK(tay[i] == want);
        }
    }
}

TEST_CASE("eta Riccati residuals on the closed forms") {
    int D = 60;
    HPReal eps = HPReal::parse("0.22", D);
    // derivatives by central differences at elevated precision
    auto cderiv = [&](auto fn) {
        int W = 2 * D + 20;
        HPReal h = HPReal::parse("1e-" + std::to_string(D / 2), W);
        HPReal ew = eps.to_digits(W);
        return ((fn(ew + h) - fn(ew - h)) / (2L * h)).to_digits(D);
    };
    HPReal v0 = v0_closed(eps), v1 = v1_closed(eps), v2 = v2_closed(eps);
    HPReal d0 = cderiv([](const HPReal& e) { return v0_closed(e); });
    HPReal d1 = cderiv([](const HPReal& e) { return v1_closed(e); });
    HPReal d2 = cderiv([](const HPReal& e) { return v0_closed(e) + v2_closed(e); });
    CHECK(riccati_residual_eta(0, eps, v0, d0).to_double() < 1e-20);
    CHECK(riccati_residual_eta(1, eps, v1, d1).to_double() < 1e-20);
    CHECK(riccati_residual_eta(2, eps, v0 + v2, d2).to_double() < 1e-20);
    // n=0 case is exactly the (ric) form 3e^2 v' = e(1+2v) - v - v^2
    HPReal ric = 3L * eps * eps * d0 - (eps * (1L + 2L * v0) - v0 - v0 * v0);
    CHECK(abs(ric - riccati_residual_eta(0, eps, v0, d0)).to_double() < 1e-40);
}

TEST_CASE("convexity kernel inequality") {
    for (const char* es : {"1/10", "1/2", "1", "7/2"}) {
        BigRat e = parse_rational(es);
        CHECK(e * 4 / (BigRat(1) + e * 5) <
              e / (BigRat(1) + e * 2) + e * 3 / (BigRat(1) + e * 6));
    }
}

TEST_CASE("interlacing holds at shallow depth with known equalities") {
    auto rep = interlace_check(BigRat(1, 10), 5);
    CHECK(rep.all_pass);
    CHECK(interlace_check(BigRat(1, 2), 4).all_pass);
    CHECK(interlace_check(BigRat(1), 4).all_pass);
    // base-case equalities eta^(k) = b^(k) for k <= 2
    BigRat e(1, 2);
    auto t = bound_table_exact(e, 2, 0);
    CHECK(convergent(1, e) == t.b[1][0]);
    CHECK(convergent(2, e) == t.b[2][0]);
}

TEST_CASE("documented depth limit of the interlace chain") {
    // The cross-index comparisons fail once the T-orbit bound two levels
    // behind overtakes the convergent: first at j=5 for eps=1/2.
    auto rep = interlace_check(BigRat(1, 2), 5);
    CHECK_FALSE(rep.all_pass);
    CHECK(rep.first_failure == "j=5: b(2j-1) < eta(2j+1)");
    CHECK_FALSE(interlace_check(BigRat(1), 5).all_pass);
}

TEST_CASE("klace chain on sampled eps at verified depths") {
    // (-1)^k b^(k) <= (-1)^k eta^(k) < (-1)^k b^(k-2)
    struct Pt { const char* eps; int k_max; };
    for (auto [es, kmax] : {Pt{"1/20", 16}, Pt{"1/10", 14}, Pt{"1/2", 10}}) {
        BigRat e = parse_rational(es);
        auto t = bound_table_exact(e, kmax, 0);
        for (int k = 1; k <= kmax; ++k) {
            BigRat etak = convergent(k, e);
            BigRat bk = t.b[k][0];
            BigRat bkm2 = (k >= 2) ? t.b[k - 2][0] : BigRat(0);
            if (k % 2 == 0) {
                CHECK(bk <= etak);
                CHECK(etak < bkm2);
            } else {
                CHECK(etak <= bk);
                if (k >= 2) CHECK(etak > bkm2);
            }
        }
    }
}
