#ifndef DIRACGEO_LORENTZ_HPP
#define DIRACGEO_LORENTZ_HPP

#include "diracgeo/dirac_algebra.hpp"

namespace dgeo {

/// SL(2,C) spin map acting on the Dirac field as the block matrix
/// S4 = diag(lambda, (lambda^dag)^-1).
struct SpinTransform {
    Mat2c lambda;
    Mat4c S4;
};

struct LorentzMatrix {
    Mat4 Lambda; // Lambda^a_b, row = upper index
};

/// General map from a unimodular 2x2 block; throws NonUnimodular when
/// |det lambda - 1| exceeds 1e-10.
SpinTransform spin_transform(const Mat2c& lambda);

/// S = exp(-i phi sigma_axis / 2), closed form. Unitary.
SpinTransform rotation(int axis, double phi);

/// S = exp(-eta alpha_axis / 2), closed form. Hermitian, non-unitary for eta != 0.
SpinTransform boost(int axis, double rapidity);

/// The vector action induced on bilinears: S^dag alpha^a S = Lambda^a_b alpha^b.
/// Throws NonUnimodular; the expansion is verified entrywise by the caller's tests.
LorentzMatrix induced_lorentz(const SpinTransform& S);

/// Residuals of the tensor transformation law for one (psi, S) pair.
struct TensorLawReport {
    double r_vector = 0.0;     // j(S psi) vs Lambda j(psi)
    double r_axial = 0.0;      // same for the axial current
    double r_tensor = 0.0;     // rank-2 action on M^{ab}
    double r_scalar = 0.0;     // S, P differences
    double r_density = 0.0;    // R difference
    double r_chiral = 0.0;     // Upsilon difference (skipped when degenerate)
    double max() const;
};

TensorLawReport verify_tensor_law(const Spinor& psi, const SpinTransform& S);

} // namespace dgeo

#endif
