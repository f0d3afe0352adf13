#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace dpi {

// Decimal digits -> mpfr precision in bits, with guard bits on top.
mpfr_prec_t bits_for_digits(int digits);

// Arbitrary-precision real scalar. Precision is a per-value property fixed at
// construction (decimal digits); binary operations round to the wider of the
// two operands. There is no ambient global precision.
class HPReal {
  public:
    explicit HPReal(int digits = 50);
    HPReal(double x, int digits);
    HPReal(long x, int digits);
    HPReal(const mpq_class& q, int digits);
    static HPReal parse(const std::string& s, int digits);

    HPReal(const HPReal& other);
    HPReal(HPReal&& other) noexcept;
    HPReal& operator=(const HPReal& other);
    HPReal& operator=(HPReal&& other) noexcept;
    ~HPReal();

    int digits() const { return digits_; }
    // Same value re-rounded at a different precision.
    HPReal to_digits(int digits) const;

    double to_double() const;
    std::string str(int out_digits = 0) const; // 0 -> full working precision

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }

    // log10 of |x|; -inf for 0.
    double log10_abs() const;

    HPReal operator-() const;
    HPReal& operator+=(const HPReal& o);
    HPReal& operator-=(const HPReal& o);
    HPReal& operator*=(const HPReal& o);
    HPReal& operator/=(const HPReal& o);

    friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
    friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
    friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
    friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }

    friend HPReal operator+(const HPReal& a, long b) { return a + HPReal(b, a.digits()); }
    friend HPReal operator-(const HPReal& a, long b) { return a - HPReal(b, a.digits()); }
    friend HPReal operator*(const HPReal& a, long b);
    friend HPReal operator/(const HPReal& a, long b);
    friend HPReal operator+(long a, const HPReal& b) { return HPReal(a, b.digits()) + b; }
    friend HPReal operator-(long a, const HPReal& b) { return HPReal(a, b.digits()) - b; }
    friend HPReal operator*(long a, const HPReal& b) { return b * a; }
    friend HPReal operator/(long a, const HPReal& b) { return HPReal(a, b.digits()) / b; }

    friend int cmp(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const HPReal& a, const HPReal& b) { return cmp(a, b) < 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const HPReal& a, const HPReal& b) { return !(a == b); }

    friend HPReal abs(const HPReal& x);
    friend HPReal sqrt(const HPReal& x);
    friend HPReal exp(const HPReal& x);
    friend HPReal log(const HPReal& x);
    friend HPReal sinh(const HPReal& x);
    friend HPReal cosh(const HPReal& x);
    friend HPReal pow_si(const HPReal& x, long e);
    friend HPReal pow(const HPReal& x, const HPReal& e); // x > 0
    friend HPReal gamma(const HPReal& x);
    friend HPReal max(const HPReal& a, const HPReal& b) { return (a < b) ? b : a; }
    friend HPReal min(const HPReal& a, const HPReal& b) { return (a < b) ? a : b; }

    static HPReal pi(int digits);
    static HPReal euler(int digits); // Euler-Mascheroni constant

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
    int digits_;
};

// sin(pi*q) with an exact zero at integer q.
HPReal sin_pi_times(const mpq_class& q, int digits);

// Sign/log-magnitude wrapper for values whose exponents may be extreme
// (determinant work). value = sign * 10^log10_mag.
struct LogScaled {
    int sign = 0;          // -1, 0, +1
    double log10_mag = 0;  // meaningful only when sign != 0

    static LogScaled from(const HPReal& x);
    friend LogScaled operator*(const LogScaled& a, const LogScaled& b);
    friend LogScaled operator/(const LogScaled& a, const LogScaled& b);
    double to_double() const;
};

} // namespace dpi
