#ifndef DIRACGEO_CONNECTION_HPP
#define DIRACGEO_CONNECTION_HPP

#include "diracgeo/geometry.hpp"

namespace dgeo {

using DSpinor = std::array<Spinor, 4>; // D_a psi, ordinal slot a

/// Inputs assembling the spinor transport connection: rotation coefficients,
/// electromagnetic and axial potential invariants with their couplings.
struct ConnectionInputs {
    RotationCoefficients omega;
    Vec4 A = Vec4::Zero();
    Vec4 aleph = Vec4::Zero();
    double e_charge = 1.0;
    double g_coupling = 1.0;
};

struct SpinConnection {
    std::array<Mat4c, 4> Gamma;
};

/// Gamma_b = ie A_b + ig rho3 aleph_b + (1/4) omega_{cdb} rho1 a^c rho1 a^d.
/// The compact rotation term is the general solution of the defining
/// transport relation; the explicit boost/rotation split is also assembled
/// and both agree entrywise.
SpinConnection build_connection(const ConnectionInputs& in);

/// Explicit boost/rotation form of the geometric part, sign-fixed against
/// the defining relation.
Mat4c omega_term_explicit(const RotationCoefficients& om, int b);

/// max |Gamma_b^dag alpha_a + alpha_a Gamma_b - omega_{acb} alpha^c| over a, b
double defining_residual(const SpinConnection& c, const RotationCoefficients& om);

/// max residual of the rho1/rho2 anticommutation pair against 2g aleph
double pair_residual(const SpinConnection& c, const Vec4& aleph, double g_coupling);

/// D_a psi = e_(a)^mu d_mu psi - Gamma_a psi on a grid.
Field<DSpinor> covariant_derivative(const Field<Spinor>& psi,
                                    const Field<SpinConnection>& conn,
                                    const Field<Tetrad>& tetrad);

/// Invariant field strength of a potential: F_ab = d_a V_b - d_b V_a -
/// (omega_{cab} - omega_{cba}) eta^{cd} V_d (directional derivatives).
Field<Mat4> field_strength(const Field<Vec4>& pot, const Field<RotationCoefficients>& om,
                           const Field<Tetrad>& tetrad);

/// Derivative-free commutator matrices D_{ab} of the transport derivative.
struct CommutatorCurvature {
    Mat4c D[4][4];
};
CommutatorCurvature commutator_curvature(const ConnectionInputs& in,
                                         const double Rt[4][4][4][4], const Mat4& F,
                                         const Mat4& U);

/// Ricci invariants from the tetrad Riemann form, contraction fixed so the
/// alpha-contracted commutator reduction holds.
Mat4 tetrad_ricci(const double Rt[4][4][4][4]);

/// max |alpha^a D_{ab} - (1/2) alpha^a R_{ab} - ie alpha^a F_{ab}
///      - ig rho3 alpha^a U_{ab}| over b
double reduction_residual(const CommutatorCurvature& cc, const ConnectionInputs& in,
                          const double Rt[4][4][4][4], const Mat4& F, const Mat4& U);

/// Transport derivatives of the scalar invariants along tetrad legs.
struct ScalarDerivativeFields {
    Field<Vec4> dS, dP, dUps; // component a = leg index
    double consistency = 0.0; // D_a P vs chain rule through (R, Upsilon)
};

ScalarDerivativeFields scalar_derivatives(const Field<Spinor>& psi,
                                          const Field<Vec4>& aleph,
                                          const Field<Tetrad>& tetrad,
                                          double g_coupling);

} // namespace dgeo

#endif
