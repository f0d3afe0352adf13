#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dpi/hpreal.hpp"

namespace dpi {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Parse a decimal literal ("0.05", "1/3", "2") into an exact rational.
BigRat parse_rational(const std::string& s);

// Dense univariate polynomial with big-integer coefficients, c[i]*x^i.
class Poly {
  public:
    Poly() = default;
    explicit Poly(BigInt c0) : c_{std::move(c0)} { trim(); }
    explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly monomial(BigInt coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero poly
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigRat eval(const BigRat& x) const;
    HPReal eval(const HPReal& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend Poly operator*(const Poly& a, const BigInt& k);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    BigInt content() const;          // gcd of coefficients, sign of leading coeff
    Poly primitive_part() const;
    static Poly gcd(Poly a, Poly b); // primitive polynomial gcd over Z

    std::string str(const std::string& var = "e") const;

  private:
    void trim();
    std::vector<BigInt> c_;
};

// Exact rational function num/den over Z[x], kept coprime with positive
// leading denominator coefficient.
class RationalFunc {
  public:
    RationalFunc() : num_(), den_(BigInt(1)) {}
    RationalFunc(Poly num, Poly den);
    static RationalFunc constant(const BigRat& q);
    static RationalFunc variable(); // x

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    BigRat eval(const BigRat& x) const; // exact; throws on pole
    bool has_pole_at(const BigRat& x) const { return den_.eval(x) == 0; }

    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b);
    friend bool operator==(const RationalFunc& a, const RationalFunc& b);

    bool is_zero() const { return num_.is_zero(); }

    // Taylor coefficients at x=0 through the given order; requires den(0) != 0.
    std::vector<BigRat> taylor(int order) const;

  private:
    void normalize();
    Poly num_, den_;
};

} // namespace dpi
