#pragma once

#include "dpi/hpreal.hpp"
#include "dpi/rational.hpp"

namespace dpi {

// Modified Bessel functions at configurable precision. The result carries the
// requested digit count; internal evaluation elevates precision as needed
// (series/asymptotic switch, cancellation in the K reflection formula).
// A non-null precision_loss flag is set instead of throwing if the target
// accuracy could not be certified after escalation.
HPReal bessel_i(const BigRat& nu, const HPReal& x, bool* precision_loss = nullptr);
HPReal bessel_k(const BigRat& nu, const HPReal& x, bool* precision_loss = nullptr);

// Scaled variants e^{-x} I_nu(x) and e^{x} K_nu(x).
HPReal bessel_i_scaled(const BigRat& nu, const HPReal& x, bool* precision_loss = nullptr);
HPReal bessel_k_scaled(const BigRat& nu, const HPReal& x, bool* precision_loss = nullptr);

// d/dx I_nu(x) = I_{nu+1}(x) + (nu/x) I_nu(x);  d/dx K_nu(x) = -K_{nu+1}(x) + (nu/x) K_nu(x).
HPReal bessel_i_dx(const BigRat& nu, const HPReal& x);
HPReal bessel_k_dx(const BigRat& nu, const HPReal& x);

} // namespace dpi
