#ifndef DIRACGEO_DIRAC_ALGEBRA_HPP
#define DIRACGEO_DIRAC_ALGEBRA_HPP

#include <array>

#include "diracgeo/types.hpp"

namespace dgeo {

/// The 4x4 matrix realization of the Dirac algebra in the spinor (chiral)
/// representation: alpha^0 = 1, alpha^i = diag(tau_i, -tau_i),
/// rho_1 = offdiag(1,1), rho_3 = diag(1,-1), sigma_i = rho_3 alpha^i.
/// rho_2 completes the rho triple so that rho_a rho_b = delta_ab + i eps_abc rho_c.
struct DiracMatrices {
    std::array<Mat4c, 4> alpha; // alpha[0] is the identity
    std::array<Mat4c, 3> rho;   // rho[0..2] = rho_1, rho_2, rho_3
    std::array<Mat4c, 3> sigma; // sigma[0..2] = sigma_1, sigma_2, sigma_3

    const Mat4c& alpha_up(int a) const { return alpha[a]; }
    Mat4c alpha_low(int a) const { return eta(a) * alpha[a]; }
    const Mat4c& rho1() const { return rho[0]; }
    const Mat4c& rho2() const { return rho[1]; }
    const Mat4c& rho3() const { return rho[2]; }
    const Mat4c& sig(int i) const { return sigma[i - 1]; } // i = 1..3
};

/// Exact spinor-representation matrices; all algebra relations hold entrywise.
const DiracMatrices& dirac();

/// All sixteen bilinear covariants of a spinor plus the derived invariants.
struct BilinearSet {
    Vec4 j = Vec4::Zero();    // vector current j^a
    Vec4 Jax = Vec4::Zero();  // axial current
    double S = 0.0;           // scalar
    double P = 0.0;           // pseudoscalar
    Mat4 M = Mat4::Zero();    // skew tensor M^{ab}
    Vec3 K = Vec3::Zero();    // M^{0i}
    Vec3 L = Vec3::Zero();    // dual M^{0i}
    double R = 0.0;           // invariant density, sqrt(j.j)
    double Upsilon = 0.0;     // chiral angle, atan2(P, S)
    bool degenerate = false;  // R below threshold (lightlike / Weyl point)
};

/// Dual tensor *M^{ab} = (1/2) eps^{abcd} M_{cd}, indices moved with eta.
Mat4 dual(const Mat4& M);

/// Evaluate every bilinear of psi by direct sesquilinear forms.
/// Throws TimelikeViolation if j.j < -tol (impossible for finite input,
/// signals corruption); sets the degenerate flag when R <= 1e-12 * psi^dag psi.
BilinearSet bilinears(const Spinor& psi);

/// Invariant density from a current vector alone; throws TimelikeViolation
/// when j.j is negative beyond tolerance.
double invariant_density(const Vec4& j, double scale = 1.0);

/// Absolute residuals of the six algebraic identity lines between invariants.
struct InvariantReport {
    double r_density = 0.0;   // j.j - (S^2 + P^2)
    double r_axial = 0.0;     // j.j + Jax.Jax
    double r_ortho = 0.0;     // Jax.j
    double r_len = 0.0;       // (S^2 - P^2) - (L^2 - K^2)
    double r_cross = 0.0;     // S P - L.K
    double r_chiral = 0.0;    // double-angle parameterization lines
    double max() const;
};

InvariantReport invariant_report(const BilinearSet& b);

} // namespace dgeo

#endif
