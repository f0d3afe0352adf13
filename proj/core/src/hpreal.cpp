#include "dpi/hpreal.hpp"
#include "dpi/errors.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace dpi {

mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 2) digits = 2;
    // log2(10) = 3.3219...; 16 guard bits keep arithmetic within 1 ulp of the
    // requested decimal precision.
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
}

HPReal::HPReal(int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(double x, int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_d(v_, x, MPFR_RNDN);
}

HPReal::HPReal(long x, int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_si(v_, x, MPFR_RNDN);
}

HPReal::HPReal(const mpq_class& q, int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

HPReal HPReal::parse(const std::string& s, int digits) {
    HPReal r(digits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("cannot parse real literal: " + s);
    return r;
}

HPReal::HPReal(const HPReal& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& other) noexcept : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

HPReal& HPReal::operator=(const HPReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        digits_ = other.digits_;
    }
    return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::to_digits(int digits) const {
    HPReal r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

double HPReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string HPReal::str(int out_digits) const {
    if (out_digits <= 0) out_digits = digits_;
    char* s = nullptr;
    // %.*Rg keeps the output round-trippable at the requested digit count.
    int n = mpfr_asprintf(&s, "%.*Rg", out_digits, v_);
    if (n < 0) return "nan";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

double HPReal::log10_abs() const {
    if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, v_, MPFR_RNDN);
    mpfr_log10(t, t, MPFR_RNDN);
    double r = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

namespace {
int wider(const HPReal& a, const HPReal& b) {
    return a.digits() > b.digits() ? a.digits() : b.digits();
}
} // namespace

HPReal HPReal::operator-() const {
    HPReal r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

HPReal& HPReal::operator+=(const HPReal& o) {
    if (o.digits_ > digits_) *this = to_digits(o.digits_);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator-=(const HPReal& o) {
    if (o.digits_ > digits_) *this = to_digits(o.digits_);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator*=(const HPReal& o) {
    if (o.digits_ > digits_) *this = to_digits(o.digits_);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator/=(const HPReal& o) {
    if (o.digits_ > digits_) *this = to_digits(o.digits_);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal operator*(const HPReal& a, long b) {
    HPReal r(a.digits());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

HPReal operator/(const HPReal& a, long b) {
    HPReal r(a.digits());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

HPReal abs(const HPReal& x) {
    HPReal r(x.digits());
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal sqrt(const HPReal& x) {
    HPReal r(x.digits());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal exp(const HPReal& x) {
    HPReal r(x.digits());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal log(const HPReal& x) {
    HPReal r(x.digits());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal sinh(const HPReal& x) {
    HPReal r(x.digits());
    mpfr_sinh(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal cosh(const HPReal& x) {
    HPReal r(x.digits());
    mpfr_cosh(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal pow_si(const HPReal& x, long e) {
    HPReal r(x.digits());
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

HPReal pow(const HPReal& x, const HPReal& e) {
    HPReal r(wider(x, e));
    mpfr_pow(r.v_, x.v_, e.v_, MPFR_RNDN);
    return r;
}

HPReal gamma(const HPReal& x) {
    HPReal r(x.digits());
    mpfr_gamma(r.v_, x.v_, MPFR_RNDN);
    return r;
}

HPReal sin_pi_times(const mpq_class& q, int digits) {
    mpq_class red = q;
    red.canonicalize();
    if (red.get_den() == 1) return HPReal(0L, digits);
    HPReal arg = HPReal::pi(digits) * HPReal(red, digits);
    HPReal r(digits);
    mpfr_sin(r.raw(), arg.raw(), MPFR_RNDN);
    return r;
}

HPReal HPReal::pi(int digits) {
    HPReal r(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::euler(int digits) {
    HPReal r(digits);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

LogScaled LogScaled::from(const HPReal& x) {
    LogScaled l;
    l.sign = x.sign() > 0 ? 1 : (x.sign() < 0 ? -1 : 0);
    l.log10_mag = l.sign == 0 ? 0 : x.log10_abs();
    return l;
}

LogScaled operator*(const LogScaled& a, const LogScaled& b) {
    LogScaled l;
    l.sign = a.sign * b.sign;
    l.log10_mag = l.sign == 0 ? 0 : a.log10_mag + b.log10_mag;
    return l;
}

LogScaled operator/(const LogScaled& a, const LogScaled& b) {
    if (b.sign == 0) throw DomainError("LogScaled division by zero");
    LogScaled l;
    l.sign = a.sign * b.sign;
    l.log10_mag = l.sign == 0 ? 0 : a.log10_mag - b.log10_mag;
    return l;
}

double LogScaled::to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::pow(10.0, log10_mag);
}

} // namespace dpi
