#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dpi/errors.hpp"
#include "dpi/rational.hpp"

namespace dpi {

// Divisor class over the ordered basis (H_x, H_y, E_1, ..., E_8).
struct PicardClass {
    std::array<long, 10> c{};

    static PicardClass Hx();
    static PicardClass Hy();
    static PicardClass E(int i); // 1-based
    static PicardClass anticanonical(); // -K = 2H_x + 2H_y - sum E_i

    friend PicardClass operator+(const PicardClass& a, const PicardClass& b);
    friend PicardClass operator-(const PicardClass& a, const PicardClass& b);
    PicardClass operator-() const;
    friend PicardClass operator*(long k, const PicardClass& a);
    friend bool operator==(const PicardClass& a, const PicardClass& b) { return a.c == b.c; }

    std::string str() const;
};

// Intersection pairing: Hx.Hy = 1, Hx^2 = Hy^2 = 0, Ei.Ej = -delta_ij, H.E = 0.
long intersection(const PicardClass& a, const PicardClass& b);

// Push-forward and pull-back of the dP_I map on Pic(X); mutually inverse.
PicardClass phi_push(const PicardClass& c);
PicardClass phi_pull(const PicardClass& c);

enum class RootKind { surface, symmetry };

// Surface roots delta_0..delta_5 (affine D5) or symmetry roots alpha_0..alpha_3
// (affine A3), in the canonical (H_x, H_y, E) basis. The source tables are
// written over (H_q, H_p); the chart match q = lambda x, p = mu y identifies
// H_q = H_x and H_p = H_y.
std::vector<PicardClass> roots(RootKind kind);

// Cartan matrix -... the matrix of pairings 2(a_i.a_j)/(a_i.a_i) = -(a_i.a_j)
// for (-2)-classes; here we just expose the raw intersection Gram matrix.
std::vector<std::vector<long>> gram_matrix(const std::vector<PicardClass>& classes);
// Cartan matrix C_ij = -intersection(a_i, a_j) with +2 on the diagonal.
std::vector<std::vector<long>> cartan_matrix(const std::vector<PicardClass>& classes);

// phi_* restricted to the symmetry roots: image of alpha_i expressed exactly
// in the alpha basis (integer coefficients).
std::array<std::array<long, 4>, 4> alpha_action();

// If phi_*^power acts on the symmetry roots as alpha_i -> alpha_i + c_i*delta_hat,
// returns the translation vector c; otherwise nullopt.
std::optional<std::array<long, 4>> translation_check(int power);

// Reference translation vectors of the two standard D5 examples.
std::array<long, 4> kny_translation();   // psi_*
std::array<long, 4> sakai_translation(); // phi(Sakai)

struct RootVariables {
    BigRat a0, a1, a2, a3;
};

struct ExactDPIParams {
    BigRat alpha_t, beta_t, gamma_t;
};

// Root variables of the dP_I surface at step n (exact rationals).
RootVariables root_variables_dp(long n, const ExactDPIParams& p);

// Induced Painleve V coefficients (alpha, beta, gamma), delta = -1/2.
std::array<BigRat, 3> pv_coeffs_dp(long n, const ExactDPIParams& p);

struct BasePoint {
    int index;         // 1..8
    std::string chart; // human-readable chart condition
    BigRat value;      // the parameter-dependent coordinate (0 when fixed)
    int cascade_parent; // 0 for a bottom point, else the index blown down to
};

// The eight base points with their degeneration cascades q1<-q2, q3<-q4, q5<-q6, q7<-q8.
std::vector<BasePoint> base_points(long n, const ExactDPIParams& p);

} // namespace dpi
