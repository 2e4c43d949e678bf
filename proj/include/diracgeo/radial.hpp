#ifndef DIRACGEO_RADIAL_HPP
#define DIRACGEO_RADIAL_HPP

#include <functional>
#include <vector>

#include "diracgeo/types.hpp"

namespace dgeo {

enum class AlephMode { off, eq_4_18, custom };
enum class MeshGrading { uniform, geometric };

/// Separated radial problem: four coupled first-order equations in r with
/// Coulomb potential e A0 = -Z alpha / r and the axial potential of the
/// arcsin(1/mr) chiral angle (or a custom profile).
struct RadialProblem {
    double m = 1.0;
    double Zalpha = 0.0;
    double g_coupling = 1.0;
    AlephMode aleph_mode = AlephMode::off;
    std::function<double(double)> custom_g_aleph; // g * aleph_r(r)
    double k = 1.0; // angular separation constant
    double m_z = 0.0;
    double r_min = 1e-4;
    double r_max = 40.0;
    int n_nodes = 10000;
    MeshGrading grading = MeshGrading::geometric;

    double g_aleph(double r) const;   // g * aleph_r at radius r
    double potential(double r) const; // e A0
};

struct RadialProfile {
    std::vector<double> r;
    std::vector<Complex> uL, dL, uR, dR;
    double energy = 0.0;
    double norm = 1.0;
    double matching_defect = 0.0;
    double max_local_error = 0.0; // step-doubling estimate, aleph modes
    int bisections = 0;
};

/// Angular pair satisfying the ladder equations; theta dependence sampled
/// (closed form for m_z = 0), the exp(i m_z phi) factor is implicit.
struct AngularMode {
    double k = 1.0;
    double m_z = 0.0;
    std::vector<double> theta;
    std::vector<double> Y, Z;
    bool closed_form = false;
};

AngularMode angular_modes(double k, double m_z, int n_theta = 201,
                          double theta_margin = 1e-3);

/// Derivative of the four-component state (uL, dL, uR, dR) at radius r.
using State4 = Eigen::Vector4cd;
State4 radial_rhs(double energy, double r, const State4& y, const RadialProblem& prob);

/// Reduced real pair (A, B) valid when the axial potential vanishes;
/// equivalent to the textbook radial system with kappa = -k.
Eigen::Vector2d radial_rhs_reduced(double energy, double r, const Eigen::Vector2d& y,
                                   const RadialProblem& prob);

std::vector<double> radial_mesh(const RadialProblem& prob);

/// Matching defect at the midpoint for a trial energy; sign changes bracket
/// bound states (reduced system), |det| dips locate them (full system).
double matching_defect(const RadialProblem& prob, double energy);

/// Shooting solve: integrate from both ends, match, bisect to 1e-10 m.
/// Throws NoSignChange when the bracket holds no root.
RadialProfile shoot_bound_state(const RadialProblem& prob, double e_lo, double e_hi);

struct ScanPoint {
    double energy;
    double defect;
};
std::vector<ScanPoint> spectrum_scan(const RadialProblem& prob, double e_lo,
                                     double e_hi, int n_energies);

/// Residual of the two-function reduction uL = dR, uR = dL against the full
/// system; grows linearly with the axial amplitude.
double constrained_reduction_residual(const RadialProblem& prob,
                                      const RadialProfile& prof);

/// Net radial probability flux of a stationary profile (vanishes for bound
/// states).
double radial_flux(const RadialProfile& prof);

} // namespace dgeo

#endif
