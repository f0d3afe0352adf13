#include "dpi/fixed_point.hpp"
#include "dpi/cfrac.hpp"
#include "dpi/errors.hpp"

#include <cmath>

namespace dpi {

namespace {

template <typename T>
Sequence<T> apply_T_impl(const Sequence<T>& seq) {
    const T zero = detail::make_scalar(0, seq.eps);
    const T one = detail::make_scalar(1, seq.eps);
    for (int n = 0; n <= seq.n_max(); ++n)
        if (seq.at(n) < zero) throw NegativeInputError("apply_T needs a non-negative sequence");
    int N = seq.n_max();
    T right = zero;
    if (seq.boundary == BoundaryPolicy::clamp_approx) right = approx_sqrt(seq.eps, N + 1);
    Sequence<T> out{seq.eps, {}, seq.boundary};
    out.values.reserve(seq.values.size());
    out.values.push_back(zero); // v_{-1}
    for (int n = 0; n <= N; ++n) {
        const T& up = (n == N) ? right : seq.at(n + 1);
        const T um = (n == 0) ? zero : seq.at(n - 1);
        out.values.push_back(seq.eps * detail::make_scalar(n + 1, seq.eps) / (up + um + one));
    }
    return out;
}

// rho-table recursion on a window shrinking one index per level:
// rho^(k+1)_n = 1/(1 + eps n rho^(k)_{n-1} + eps (n+2) rho^(k)_{n+1}).
template <typename S, typename MakeOne>
std::vector<std::vector<S>> rho_table(const S& eps, int k_max, int n_max, MakeOne make) {
    std::vector<std::vector<S>> rho(k_max + 1);
    int w0 = n_max + k_max;
    rho[0].assign(w0 + 1, make(1));
    for (int k = 1; k <= k_max; ++k) {
        int w = n_max + (k_max - k);
        rho[k].reserve(w + 1);
        for (int n = 0; n <= w; ++n) {
            S den = make(1) + eps * make(n + 2) * rho[k - 1][n + 1];
            if (n > 0) den += eps * make(n) * rho[k - 1][n - 1];
            rho[k].push_back(make(1) / den);
        }
    }
    return rho;
}

} // namespace

Sequence<double> apply_T(const Sequence<double>& seq) { return apply_T_impl(seq); }
Sequence<HPReal> apply_T(const Sequence<HPReal>& seq) { return apply_T_impl(seq); }

BoundTableQ bound_table_exact(const BigRat& eps, int k_max, int n_max) {
    BoundTableQ t;
    t.eps = eps;
    t.k_max = k_max;
    t.n_max = n_max;
    auto make = [](long v) { return BigRat(v); };
    t.rho = rho_table<BigRat>(eps, k_max, n_max, make);
    t.b.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        t.b[k].reserve(t.rho[k].size());
        for (size_t n = 0; n < t.rho[k].size(); ++n)
            t.b[k].push_back(eps * BigRat(static_cast<long>(n) + 1) * t.rho[k][n]);
    }
    return t;
}

BoundTableF bound_table(const HPReal& eps, int k_max, int n_max) {
    BoundTableF t{eps, 0, 0, {}, {}};
    t.k_max = k_max;
    t.n_max = n_max;
    int digits = eps.digits();
    auto make = [digits](long v) { return HPReal(v, digits); };
    t.rho = rho_table<HPReal>(eps, k_max, n_max, make);
    t.b.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        t.b[k].reserve(t.rho[k].size());
        for (size_t n = 0; n < t.rho[k].size(); ++n)
            t.b[k].push_back(eps * make(static_cast<long>(n) + 1) * t.rho[k][n]);
    }
    return t;
}

BigRat bound(int k, int n, const BigRat& eps) {
    if (k < -1) throw DomainError("bound needs k >= -1");
    if (k == -1) return BigRat(0);
    auto t = bound_table_exact(eps, k, n);
    return t.b[k][n];
}

RationalFunc bound_rational(int k, int n, int k_cap) {
    if (k < -1) throw DomainError("bound_rational needs k >= -1");
    if (k > k_cap)
        throw ResourceLimitError("bound_rational: k exceeds the configured cap (degree growth)");
    if (k == -1) return RationalFunc();
    const RationalFunc one = RationalFunc::constant(BigRat(1));
    const RationalFunc eps = RationalFunc::variable();
    // level 0 on [0, n+k], shrinking by one per level.
    std::vector<RationalFunc> cur(n + k + 1);
    for (int i = 0; i <= n + k; ++i) cur[i] = eps * RationalFunc::constant(BigRat(i + 1));
    for (int level = 1; level <= k; ++level) {
        int w = n + k - level;
        std::vector<RationalFunc> next(w + 1);
        for (int i = 0; i <= w; ++i) {
            RationalFunc den = one + cur[i + 1];
            if (i > 0) den = den + cur[i - 1];
            next[i] = eps * RationalFunc::constant(BigRat(i + 1)) / den;
        }
        cur = std::move(next);
    }
    return cur[n];
}

namespace {

template <typename S>
struct REvalCtx {
    S z, eps;
    std::map<std::pair<int, long>, S> memo; // key: (k, offset m) with argument z + m*eps
};

bool near_pole(const BigRat& den) { return den == 0; }
bool near_pole(const HPReal& den) {
    return den.is_zero() || !den.is_finite() || den.log10_abs() < -280;
}

template <typename S>
bool exactly_zero(const S& x) {
    if constexpr (std::is_same_v<S, BigRat>) return x == 0;
    else return x.is_zero();
}

template <typename S, typename MakeOne>
S R_eval_rec(REvalCtx<S>& ctx, int k, long m, MakeOne make) {
    if (k == 0) return make(1);
    auto key = std::make_pair(k, m);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
    S zm = ctx.z + make(m) * ctx.eps;
    // A vanishing prefactor kills its branch; descending into it anyway can
    // hit spurious poles left of the lattice (the n = 0 term of the rho
    // recursion has factor n).
    S fm = zm - ctx.eps;
    S fp = zm + ctx.eps;
    S den = make(1);
    if (!exactly_zero(fm)) den += fm * R_eval_rec(ctx, k - 1, m - 1, make);
    if (!exactly_zero(fp)) den += fp * R_eval_rec(ctx, k - 1, m + 1, make);
    if (near_pole(den)) {
        double where;
        if constexpr (std::is_same_v<S, BigRat>) where = zm.get_d();
        else where = zm.to_double();
        throw PoleError(k, where);
    }
    S val = make(1) / den;
    ctx.memo.emplace(key, val);
    return val;
}

} // namespace

BigRat R_eval(int k, const BigRat& z, const BigRat& eps) {
    if (k < 0) throw DomainError("R_eval needs k >= 0");
    REvalCtx<BigRat> ctx{z, eps, {}};
    return R_eval_rec(ctx, k, 0, [](long v) { return BigRat(v); });
}

HPReal R_eval(int k, const HPReal& z, const HPReal& eps) {
    if (k < 0) throw DomainError("R_eval needs k >= 0");
    REvalCtx<HPReal> ctx{z, eps, {}};
    int digits = std::max(z.digits(), eps.digits());
    return R_eval_rec(ctx, k, 0, [digits](long v) { return HPReal(v, digits); });
}

BigRat delta(const BoundTableQ& t, int k, int n) {
    if (k < 0) throw DomainError("delta needs k >= 0");
    BigRat prev = (k == 0) ? BigRat(0) : t.rho[k - 1][n];
    BigRat d = t.rho[k][n] - prev;
    return (k % 2 == 0) ? d : -d;
}

HPReal delta(const BoundTableF& t, int k, int n) {
    if (k < 0) throw DomainError("delta needs k >= 0");
    HPReal prev = (k == 0) ? HPReal(0L, t.eps.digits()) : t.rho[k - 1][n];
    HPReal d = t.rho[k][n] - prev;
    return (k % 2 == 0) ? d : -d;
}

HPReal delta_fn(int k, const HPReal& z, const HPReal& eps) {
    HPReal prev = (k == 0) ? HPReal(0L, eps.digits()) : R_eval(k - 1, z, eps);
    HPReal d = R_eval(k, z, eps) - prev;
    return (k % 2 == 0) ? d : -d;
}

BigInt taylor_c(int k, int n) {
    if (k < 0 || n < 0) throw DomainError("taylor_c needs k, n >= 0");
    // c at level j is needed on [0, n + (k - j)].
    std::vector<BigInt> cur(n + k + 1, BigInt(1));
    for (int j = 1; j <= k; ++j) {
        int w = n + k - j;
        std::vector<BigInt> next(w + 1);
        for (int i = 0; i <= w; ++i) {
            next[i] = BigInt(i + 2) * cur[i + 1];
            if (i > 0) next[i] += BigInt(i) * cur[i - 1];
        }
        cur = std::move(next);
    }
    return cur[n];
}

std::vector<BigInt> series_s(int n, int i_max) {
    if (n < 0 || i_max < 0) throw DomainError("series_s needs n, i_max >= 0");
    if (n == 0) return series_s0(i_max);
    if (i_max > 2)
        throw NotAvailableError("series_s: no uniform expression in n for i >= 3 (use n = 0)");
    std::vector<BigInt> out;
    BigInt np1(n + 1);
    out.push_back(np1);
    if (i_max >= 1) out.push_back(2 * np1 * np1);
    if (i_max >= 2) out.push_back(8 * np1 * np1 * np1 + 4 * np1);
    return out;
}

SolveResult solve_positive(const HPReal& eps, int n_max, double tol, int k_cap) {
    if (!(tol > 0)) throw DomainError("solve_positive needs tol > 0");
    int digits = eps.digits();
    auto mk = [digits](long v) { return HPReal(v, digits); };
    Sequence<HPReal> u{eps, {}, BoundaryPolicy::clamp_approx};
    u.values.assign(n_max + 2, mk(0));
    Sequence<HPReal> even, odd;
    // b^(0) = T(0) (with the clamped edge), then keep applying T.
    u = apply_T(u);
    odd = u; // placeholder until the first odd iterate exists
    even = u;
    SolveResult res;
    res.iterations = 1;
    double width = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= k_cap; ++j) {
        u = apply_T(u);
        ++res.iterations;
        if (res.iterations % 2 == 1) even = u;
        else odd = u;
        if (res.iterations >= 2) {
            HPReal w(0L, digits);
            for (int n = 0; n <= n_max; ++n) {
                HPReal g = abs(even.at(n) - odd.at(n)) / (eps * mk(n + 1));
                if (g > w) w = g;
            }
            width = w.to_double();
            if (width < tol) break;
        }
    }
    if (!(width < tol)) throw NoConvergenceError(k_cap, width);
    res.seq = Sequence<HPReal>{eps, {}, BoundaryPolicy::clamp_approx};
    res.seq.values.reserve(n_max + 2);
    res.seq.values.push_back(mk(0));
    res.widths.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        res.seq.values.push_back((even.at(n) + odd.at(n)) / 2L);
        res.widths.push_back(abs(even.at(n) - odd.at(n)) / (eps * mk(n + 1)));
    }
    res.sup_width = width;
    return res;
}

double eps_star() { return 0.5 * (std::sqrt(2.0) + 1.0); }

namespace {

template <typename Table, typename S, typename MakeOne>
ConjectureReport conjecture_impl(const Table& t, int j_max, int n_max, MakeOne make) {
    ConjectureReport rep;
    for (int j = 1; j <= j_max && rep.all_pass; ++j) {
        for (int n = 0; n <= n_max; ++n) {
            S w = make(1) / (t.eps * make(2 * (n + 1)));
            S lhs1 = t.rho[2 * j - 1][n] * t.rho[2 * j - 2][n];
            bool ok1 = lhs1 < w;
            S lhs2 = t.rho[2 * j][n] * t.rho[2 * j - 1][n];
            S rhs2 = w * make(j) / make(j + 1);
            bool ok2 = lhs2 < rhs2;
            rep.checks += 2;
            if (!ok1 || !ok2) {
                rep.all_pass = false;
                rep.first_violation = ConjectureViolation{j, n, ok1 ? 2 : 1};
                break;
            }
        }
    }
    return rep;
}

} // namespace

ConjectureReport conjecture_check(const BigRat& eps, int j_max, int n_max) {
    auto t = bound_table_exact(eps, 2 * j_max, n_max);
    auto rep = conjecture_impl<BoundTableQ, BigRat>(t, j_max, n_max, [](long v) { return BigRat(v); });
    rep.inside_eps_star = eps.get_d() < eps_star();
    return rep;
}

ConjectureReport conjecture_check(const HPReal& eps, int j_max, int n_max) {
    auto t = bound_table(eps, 2 * j_max, n_max);
    int digits = eps.digits();
    auto rep = conjecture_impl<BoundTableF, HPReal>(t, j_max, n_max,
                                                    [digits](long v) { return HPReal(v, digits); });
    rep.inside_eps_star = eps.to_double() < eps_star();
    return rep;
}

DeltaScan scan_delta(int k, const HPReal& eps, double z_lo, double z_hi, int samples) {
    if (samples < 2) throw DomainError("scan_delta needs at least 2 samples");
    DeltaScan scan;
    scan.points.reserve(samples);
    int digits = eps.digits();
    for (int i = 0; i < samples; ++i) {
        double z = z_lo + (z_hi - z_lo) * i / (samples - 1);
        DeltaScanPoint p{z, 0.0, false};
        try {
            p.value = delta_fn(k, HPReal(z, digits), eps).to_double();
        } catch (const PoleError&) {
            p.pole = true;
        }
        scan.points.push_back(p);
    }
    // A sign flip is either a zero or a pole; refining inside the interval
    // separates them (pole magnitudes diverge, zeros stay below the endpoints).
    auto is_pole_between = [&](double lo, double hi, double scale) {
        for (int level = 0; level < 2; ++level) {
            double big = 0;
            for (int i = 1; i < 64; ++i) {
                double z = lo + (hi - lo) * i / 64.0;
                try {
                    big = std::max(big, std::fabs(delta_fn(k, HPReal(z, digits), eps).to_double()));
                } catch (const PoleError&) {
                    return true;
                }
            }
            if (big > 50.0 * scale) return true;
            if (big <= 2.0 * scale) return false;
            scale = big; // inconclusive: refine around the growing magnitude
        }
        return true;
    };
    for (size_t i = 0; i + 1 < scan.points.size(); ++i) {
        const auto& a = scan.points[i];
        const auto& b = scan.points[i + 1];
        if (a.pole || b.pole) {
            scan.pole_brackets.emplace_back(a.z, b.z);
            continue;
        }
        if (a.value * b.value < 0) {
            double scale = std::max({std::fabs(a.value), std::fabs(b.value), 1e-6});
            if (is_pole_between(a.z, b.z, scale)) scan.pole_brackets.emplace_back(a.z, b.z);
        }
    }
    for (size_t i = 1; i + 1 < scan.points.size(); ++i) {
        const auto& l = scan.points[i - 1];
        const auto& c = scan.points[i];
        const auto& r = scan.points[i + 1];
        if (l.pole || c.pole || r.pole) continue;
        if (c.value < l.value && c.value < r.value) scan.local_minima.push_back(c.z);
    }
    return scan;
}

} // namespace dpi
