#ifndef DIRACGEO_IDENTITIES_HPP
#define DIRACGEO_IDENTITIES_HPP

#include <map>
#include <string>

#include "diracgeo/connection.hpp"

namespace dgeo {

/// Named residual map with location and scale context.
struct ResidualEntry {
    double max_abs = 0.0;
    std::size_t where = 0; // flat node index of the max
    double scale = 0.0;    // magnitude of the identity's largest term
    double relative() const { return scale > 0.0 ? max_abs / scale : max_abs; }
};

struct ResidualReport {
    std::map<std::string, ResidualEntry> entries;

    void absorb(const std::string& key, double value, std::size_t where, double scale);
    double max_abs(const std::string& key) const;
    double worst() const;
};

/// Momentum-flux invariants at a point: T^a_b = i psi^dag alpha^a D_b psi and
/// the companion P^a_b = i psi^dag rho3 alpha^a D_b psi (matrix index first).
struct MomentumTensors {
    Eigen::Matrix4cd T;
    Eigen::Matrix4cd P;

    Mat4 reT() const { return T.real(); }
    Mat4 imT() const { return T.imag(); }
};

MomentumTensors momentum_tensors(const Spinor& psi, const DSpinor& Dpsi);

/// Divergence identities of the vector and axial currents for one node:
/// returns (D_a j^a, D_a Jax^a - 2 m P).
std::pair<double, double> current_divergences(const Spinor& psi, const DSpinor& Dpsi,
                                              double m);

ResidualReport current_identities(const Field<Spinor>& psi, const Field<DSpinor>& Dpsi,
                                  double m);

/// Contraction of the rotation coefficients with the momentum tensors against
/// the pseudoscalar/axial source terms, together with their real-part forms
/// through the axial-current gradient. All four lines per leg b.
struct BendingConstraintTerms {
    Vec4 lhs_T;        // Re omega.T contraction
    Vec4 lhs_T_im;     // Im part (vanishes on-shell: closed current lines)
    Vec4 lhs_P;        // Im omega.P contraction
    Vec4 lhs_P_re;     // Re part (vanishes on-shell)
    Vec4 lhs_dual;     // quarter-epsilon form through nabla Jax
    Vec4 lhs_sym;      // half form through nabla Jax
    Vec4 rhs_P;        // 2 m g P aleph_b
    Vec4 rhs_S;        // 2 m g S aleph_b
};

BendingConstraintTerms bending_constraint_terms(const Spinor& psi, const DSpinor& Dpsi,
                                                const RotationCoefficients& om,
                                                const Vec4& aleph, double m,
                                                double g_coupling);

ResidualReport constraint_3_13(const Field<Spinor>& psi, const Field<DSpinor>& Dpsi,
                               const Field<RotationCoefficients>& om,
                               const Field<Vec4>& aleph, double m, double g_coupling);

/// Left-hand sides of the two bending relations (the quarter-epsilon route
/// and the symmetric route), evaluated from the rotation coefficients alone
/// with the on-shell density-gradient substitutions.
std::pair<Vec4, Vec4> bending_relation_lhs(const RotationCoefficients& om);

/// Solve the pair of bending relations for 2g aleph_b at one node
/// (per-leg least squares over the sin/cos pair). `consistency` holds the
/// worst disagreement between the two single-equation estimates.
struct AlephExtraction {
    Vec4 two_g_aleph = Vec4::Zero();
    double consistency = 0.0;
    bool ill_conditioned = false;
};

AlephExtraction aleph_from_bending(const RotationCoefficients& om, double upsilon,
                                   double m);

/// Residual of the angular-curvature constraint omega_131 + omega_232 =
/// 2 m sin(Upsilon) plus the mass-bound margin 2m - (omega_131 + omega_232).
struct CurvatureConstraint {
    double residual = 0.0;
    double bound_margin = 0.0;
    bool bound_satisfied = true;
};

CurvatureConstraint curvature_constraint(const RotationCoefficients& om, double upsilon,
                                         double m);

/// Normal-radial-case ratio and product relations, with sign-branch
/// detection; the gyromagnetic arithmetic mu = e/(2m) is carried along.
struct SphericalReport {
    double branch = 0.0; // +1 or -1 when determined
    bool ambiguous = false;
    std::map<std::string, double> residuals; // asserted structural relations
    std::map<std::string, double> products;  // informational amplitude ratios
    double worst() const;
};

SphericalReport spherical_relations(const RotationCoefficients& om, double two_g_aleph3,
                                    double r);

/// Classical magnetic moment from the limiting curvature radius: e/(2m).
double magnetic_moment(double e_charge, double m);

/// Axial current split into convection and polarization parts; returns the
/// polarization current computed directly and by subtraction.
struct AxialDecomposition {
    Vec4 I_direct = Vec4::Zero();
    Vec4 I_subtraction = Vec4::Zero();
    double residual() const { return (I_direct - I_subtraction).cwiseAbs().maxCoeff(); }
};

AxialDecomposition axial_decomposition(const Spinor& psi, const DSpinor& Dpsi, double m);

/// Terms of the pseudoscalar wave identity at a node; the wave operator part
/// is supplied by the caller (grid evaluation), everything else is local.
struct PionTerms {
    double box_P = 0.0;       // supplied transport wave operator on P
    double mass_term = 0.0;   // -(R_s/2) P
    double twist_term = 0.0;  // anholonomy source
    double em_source = 0.0;   // e F_ab M^ab
    double hj_kinetic = 0.0;  // dropped semi-classical pair, reported
    double hj_mass = 0.0;
    double residual_semiclassical() const
    {
        return box_P + mass_term + twist_term - em_source;
    }
};

PionTerms pion_terms(const Spinor& psi, const DSpinor& Dpsi,
                     const RotationCoefficients& om, const Mat4& F, double R_s,
                     double e_charge, double m, double box_P);

/// Transport wave operator on the pseudoscalar over a grid (directional
/// derivatives of the sesquilinear D_b P with rotation and chiral terms).
Field<double> pseudoscalar_wave_operator(const Field<Spinor>& psi,
                                         const Field<DSpinor>& Dpsi,
                                         const Field<RotationCoefficients>& om,
                                         const Field<Vec4>& aleph,
                                         const Field<Tetrad>& tetrad, double g_coupling);

/// Helicity-channel decomposition of the electromagnetic pseudoscalar source.
struct EmSourceChannels {
    double total = 0.0;      // e F_ab M^ab
    double electric = 0.0;   // 2 e psi+ rho2 (E.sigma) psi
    double magnetic = 0.0;   // 2 e psi+ rho1 (B.sigma) psi
    Complex flip_left{0.0};  // psi_L+ (w.tau) psi_R channel amplitudes
    Complex flip_right{0.0};
};

EmSourceChannels em_source_channels(const Spinor& psi, const Mat4& F, double e_charge);

/// Maxwell residual bundle on a metric background: the cyclic identity, the
/// sourced divergence, the antisymmetrized current gradient Q, and its tie to
/// the time-congruence bending.
struct MaxwellReport {
    double bianchi = 0.0;
    double divergence = 0.0;
    double q_max = 0.0;
    double normality_tie = 0.0; // omega_{0ij} - omega_{0ji} + Q_ij / R
    double boost_tie = 0.0;     // omega_{i00} + dlnR/ds_i + Q_i0 / R
};

MaxwellReport maxwell_residuals(const Field<Mat4>& F, const Field<Vec4>& Jlow,
                                const Field<MetricPoint>& metric,
                                const Field<Tetrad>& tetrad,
                                const Field<RotationCoefficients>& om,
                                const Field<double>& density, double e_charge);

} // namespace dgeo

#endif
