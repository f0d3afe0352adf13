#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "dpi/errors.hpp"
#include "dpi/hpreal.hpp"

namespace dpi {

enum class BoundaryPolicy { free, clamp_approx };

// A truncated dP_I orbit (v_{-1}, v_0, ..., v_N). The n = -1 slot is stored
// explicitly so the initial condition is a data invariant.
template <typename T>
struct Sequence {
    T eps;
    std::vector<T> values; // values[i] = v_{i-1}, i = 0..N+1
    BoundaryPolicy boundary = BoundaryPolicy::free;

    int n_max() const { return static_cast<int>(values.size()) - 2; }
    const T& at(int n) const { return values[n + 1]; }
    T& at(int n) { return values[n + 1]; }
};

template <typename T>
struct IterateResult {
    Sequence<T> seq;
    std::optional<int> overflow_at; // first index with non-representable magnitude
};

struct GeneralDPIParams {
    double alpha_t;
    double beta_t;
    double gamma_t;
};

namespace detail {
inline bool representable(double x) { return std::isfinite(x); }
inline bool representable(const HPReal& x) { return x.is_finite(); }
inline double make_scalar(long v, const double&) { return static_cast<double>(v); }
inline HPReal make_scalar(long v, const HPReal& like) { return HPReal(v, like.digits()); }
} // namespace detail

// Forward iteration of v_{n+1} = eps*(n+1)/v_n - v_{n-1} - 1 from v_{-1}=0, v_0.
template <typename T>
IterateResult<T> iterate_forward(const T& eps, const T& v0, int n_target) {
    IterateResult<T> r{Sequence<T>{eps, {}, BoundaryPolicy::free}, std::nullopt};
    auto& v = r.seq.values;
    v.reserve(n_target + 2);
    v.push_back(detail::make_scalar(0, eps));
    v.push_back(v0);
    for (int n = 0; n < n_target; ++n) {
        const T& vn = r.seq.at(n);
        if (vn == detail::make_scalar(0, eps)) throw ZeroDivisionError(n);
        T next = eps * detail::make_scalar(n + 1, eps) / vn - r.seq.at(n - 1) -
                 detail::make_scalar(1, eps);
        if (!detail::representable(next) && !r.overflow_at) r.overflow_at = n + 1;
        v.push_back(std::move(next));
    }
    return r;
}

// r_n = v_n (v_{n+1} + v_{n-1} + 1) - eps*(n+1) for interior n = 0..N-1.
template <typename T>
std::vector<T> residual(const Sequence<T>& seq) {
    if (seq.values.size() < 3) throw DomainError("residual needs at least 3 entries");
    std::vector<T> out;
    out.reserve(seq.values.size() - 2);
    for (int n = 0; n <= seq.n_max() - 1; ++n) {
        T r = seq.at(n) * (seq.at(n + 1) + seq.at(n - 1) + detail::make_scalar(1, seq.eps)) -
              seq.eps * detail::make_scalar(n + 1, seq.eps);
        out.push_back(std::move(r));
    }
    return out;
}

// The square-root approximation (sqrt(1+8(n+1)eps)-1)/4; exact 0 at n = -1.
double approx_sqrt(double eps, int n);
HPReal approx_sqrt(const HPReal& eps, int n);

// Residual of the general equation x_{n+1} + x_{n-1} - (alpha_t*n + beta_t)/x_n - gamma_t.
std::vector<double> residual_general(const Sequence<double>& seq, const GeneralDPIParams& p);

// Forward iteration of the general equation (test oracle for residual_general);
// the seed pair (x_{-1}, x_0) fills the same slots as in iterate_forward.
Sequence<double> iterate_general(const GeneralDPIParams& p, double x_minus1, double x0, int n_target);

} // namespace dpi
