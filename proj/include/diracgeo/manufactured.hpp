#ifndef DIRACGEO_MANUFACTURED_HPP
#define DIRACGEO_MANUFACTURED_HPP

#include "diracgeo/identities.hpp"

namespace dgeo {

/// Stationary solution of the transport Dirac equation on a (t, z) grid with
/// smooth synthetic rotation-coefficient and potential profiles along z.
/// The spatial profile is integrated as an ODE to machine accuracy, so grid
/// residuals of the differential identities measure pure stencil error.
struct LineSolution {
    Grid grid;
    Field<Spinor> psi;
    Field<DSpinor> Dpsi;       // transport derivatives by grid stencils
    Field<DSpinor> Dpsi_exact; // transport derivatives from the generating ODE
    Field<Tetrad> tetrad;
    Field<RotationCoefficients> omega;
    Field<Vec4> A, aleph;
    Field<SpinConnection> conn;
    double m = 1.0, energy = 1.0, e_charge = 1.0, g_coupling = 1.0;
};

LineSolution build_line_solution(int nt, int nz, double m, double energy,
                                 double e_charge, double g_coupling,
                                 bool with_potentials = true);

/// Plane-wave solution psi = u exp(-i(E t - p z)) on a flat (t, z) grid,
/// positive-energy branch.
struct PlaneWave {
    Grid grid;
    Field<Spinor> psi;
    Field<DSpinor> Dpsi;
    Field<Tetrad> tetrad;
    Field<SpinConnection> conn;
    Spinor amplitude;
    double m, momentum, energy;
};

PlaneWave build_plane_wave(int nt, int nz, double m, double momentum,
                           double t_extent, double z_extent);

Spinor plane_wave_amplitude(double m, double momentum);

/// Rotation-coefficient configuration of the normal-radial (spherical) case:
/// the angular curvatures 1/r, the tangential products, and the boost pair
/// carrying the axial potential of the arcsin(1/mr) chiral angle. Satisfies
/// the curvature constraint and both bending relations exactly.
struct SphericalBendingPoint {
    RotationCoefficients omega;
    double upsilon = 0.0;
    double two_g_aleph3 = 0.0; // = 1/(r sqrt(m^2 r^2 - 1))
    double r = 0.0;
};

SphericalBendingPoint spherical_bending_point(double m, double r,
                                              double omega_212 = 0.0,
                                              double omega_300 = 0.0);

/// Chiral angle and scaled axial potential of the spherical ansatz,
/// Upsilon = arcsin(1/mr) and 2g aleph = 1/(r sqrt(m^2 r^2 - 1)).
/// Throws DomainError for m r <= 1.
std::pair<double, double> aleph_profile(double m, double r);

} // namespace dgeo

#endif
