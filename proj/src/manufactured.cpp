#include "diracgeo/manufactured.hpp"

#include <cmath>

namespace dgeo {

namespace {

// Smooth synthetic profiles along z; kept gentle so the ODE stays tame.
RotationCoefficients omega_profile(double z)
{
    RotationCoefficients om;
    auto set = [&om](int a, int b, int c, double v) {
        om.o[a][b][c] = v;
        om.o[b][a][c] = -v;
    };
    set(0, 1, 0, 0.15 * std::sin(z));
    set(0, 3, 3, 0.2 * std::cos(0.7 * z));
    set(1, 2, 3, 0.12 * std::sin(0.5 * z + 0.4));
    set(1, 3, 1, 0.18 * std::cos(z - 0.3));
    set(2, 3, 2, 0.1 * std::sin(0.9 * z));
    set(0, 2, 1, 0.08 * std::cos(1.3 * z));
    om.fill_derived();
    return om;
}

Vec4 a_profile(double z)
{
    return Vec4(0.25 * std::cos(0.6 * z), 0.1 * std::sin(z), 0.14 * std::cos(1.1 * z),
                0.2 * std::sin(0.8 * z + 0.2));
}

Vec4 aleph_profile_line(double z)
{
    return Vec4(0.12 * std::sin(0.9 * z + 0.1), 0.17 * std::cos(0.4 * z),
                0.09 * std::sin(1.2 * z), 0.15 * std::cos(z - 0.5));
}

SpinConnection connection_at(double z, double e_charge, double g_coupling,
                             bool with_potentials)
{
    ConnectionInputs in;
    in.omega = omega_profile(z);
    if (with_potentials) {
        in.A = a_profile(z);
        in.aleph = aleph_profile_line(z);
    }
    in.e_charge = e_charge;
    in.g_coupling = g_coupling;
    return build_connection(in);
}

// z-derivative of the stationary profile dictated by the equation of motion
Spinor profile_rhs(const Spinor& chi, double z, double m, double energy,
                   double e_charge, double g_coupling, bool with_potentials)
{
    const auto& d = dirac();
    SpinConnection c = connection_at(z, e_charge, g_coupling, with_potentials);
    Mat4c M = -I * m * d.rho1() + I * energy * Mat4c::Identity() + c.Gamma[0]
              + d.alpha[1] * c.Gamma[1] + d.alpha[2] * c.Gamma[2];
    return d.alpha[3] * (M * chi) + c.Gamma[3] * chi;
}

} // namespace

LineSolution build_line_solution(int nt, int nz, double m, double energy,
                                 double e_charge, double g_coupling,
                                 bool with_potentials)
{
    LineSolution ls;
    ls.m = m;
    ls.energy = energy;
    ls.e_charge = e_charge;
    ls.g_coupling = g_coupling;

    Grid g;
    g.n = {nt, 1, 1, nz};
    g.h = {1.2 / (nt - 1), 1.0, 1.0, 2.5 / (nz - 1)};
    ls.grid = g;

    // integrate the stationary profile chi(z) with fine RK4 substeps
    std::vector<Spinor> chi(nz), dchi(nz);
    Spinor c0;
    c0 << Complex(0.9, 0.1), Complex(0.2, -0.3), Complex(0.7, 0.2), Complex(-0.1, 0.4);
    chi[0] = c0;
    const int sub = 64;
    for (int j = 0; j + 1 < nz; ++j) {
        Spinor y = chi[j];
        double z = g.coord(3, j);
        const double hh = g.h[3] / sub;
        for (int s = 0; s < sub; ++s) {
            auto f = [&](const Spinor& yy, double zz) {
                return profile_rhs(yy, zz, m, energy, e_charge, g_coupling,
                                   with_potentials);
            };
            Spinor k1 = f(y, z);
            Spinor k2 = f(y + 0.5 * hh * k1, z + 0.5 * hh);
            Spinor k3 = f(y + 0.5 * hh * k2, z + 0.5 * hh);
            Spinor k4 = f(y + hh * k3, z + hh);
            y += (hh / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            z += hh;
        }
        chi[j + 1] = y;
    }
    for (int j = 0; j < nz; ++j)
        dchi[j] = profile_rhs(chi[j], g.coord(3, j), m, energy, e_charge, g_coupling,
                              with_potentials);

    ls.psi = Field<Spinor>(g);
    ls.tetrad = Field<Tetrad>(g, Tetrad{});
    ls.omega = Field<RotationCoefficients>(g);
    ls.A = Field<Vec4>(g, Vec4::Zero());
    ls.aleph = Field<Vec4>(g, Vec4::Zero());
    ls.conn = Field<SpinConnection>(g);
    ls.Dpsi_exact = Field<DSpinor>(g);

    for (std::size_t p = 0; p < g.size(); ++p) {
        auto ii = g.unindex(p);
        const double t = g.coord(0, ii[0]);
        const double z = g.coord(3, ii[3]);
        const Complex phase = std::exp(-I * energy * t);
        ls.psi.v[p] = phase * chi[ii[3]];
        ls.omega.v[p] = omega_profile(z);
        if (with_potentials) {
            ls.A.v[p] = a_profile(z);
            ls.aleph.v[p] = aleph_profile_line(z);
        }
        ls.conn.v[p] = connection_at(z, e_charge, g_coupling, with_potentials);

        DSpinor D;
        D[0] = (-I * energy) * ls.psi.v[p] - ls.conn.v[p].Gamma[0] * ls.psi.v[p];
        D[1] = -(ls.conn.v[p].Gamma[1] * ls.psi.v[p]);
        D[2] = -(ls.conn.v[p].Gamma[2] * ls.psi.v[p]);
        D[3] = phase * dchi[ii[3]] - ls.conn.v[p].Gamma[3] * ls.psi.v[p];
        ls.Dpsi_exact.v[p] = D;
    }
    ls.Dpsi = covariant_derivative(ls.psi, ls.conn, ls.tetrad);
    return ls;
}

Spinor plane_wave_amplitude(double m, double momentum)
{
    // (E - alpha^3 p) u = m rho1 u; left 2-spinor free, right determined
    const double energy = std::sqrt(momentum * momentum + m * m);
    Eigen::Vector2cd xi;
    xi << Complex(0.8, 0.1), Complex(0.35, -0.45);
    Eigen::Vector2cd eta2;
    const Mat2c tau3 = dirac().sig(3).block<2, 2>(0, 0);
    eta2 = ((energy * Mat2c::Identity() - momentum * tau3) * xi) / m;
    Spinor u;
    u << xi[0], xi[1], eta2[0], eta2[1];
    return u / u.norm();
}

PlaneWave build_plane_wave(int nt, int nz, double m, double momentum, double t_extent,
                           double z_extent)
{
    PlaneWave pw;
    pw.m = m;
    pw.momentum = momentum;
    pw.energy = std::sqrt(momentum * momentum + m * m);
    pw.amplitude = plane_wave_amplitude(m, momentum);

    Grid g;
    g.n = {nt, 1, 1, nz};
    g.h = {t_extent / (nt - 1), 1.0, 1.0, z_extent / (nz - 1)};
    pw.grid = g;
    pw.psi = make_field(g, [&](std::array<double, 4> x) {
        return Spinor(std::exp(-I * (pw.energy * x[0] - momentum * x[3]))
                      * pw.amplitude);
    });
    pw.tetrad = Field<Tetrad>(g, Tetrad{});
    pw.conn = Field<SpinConnection>(g, build_connection(ConnectionInputs{}));
    pw.Dpsi = covariant_derivative(pw.psi, pw.conn, pw.tetrad);
    return pw;
}

std::pair<double, double> aleph_profile(double m, double r)
{
    if (m * r <= 1.0 + 1e-12)
        throw DomainError("spherical chiral angle needs m r > 1");
    const double ups = std::asin(1.0 / (m * r));
    const double x = 1.0 / (r * std::sqrt(m * m * r * r - 1.0));
    return {ups, x};
}

namespace {

// Helix ansatz of the normal-radial case: paired radial shears, boosts,
// tangential precessions and time rotations. Five amplitudes.
RotationCoefficients helix_omega(double r, const Eigen::VectorXd& x, double omega_212,
                                 double omega_120)
{
    RotationCoefficients om;
    auto set = [&om](int a, int b, int c, double v) {
        om.o[a][b][c] = v;
        om.o[b][a][c] = -v;
    };
    const double k = 1.0 / r;
    set(1, 3, 1, k); // angular curvatures of the radius-r surface
    set(2, 3, 2, k);
    set(3, 1, 2, k); // tangential rotation pair
    set(3, 2, 1, k);
    set(3, 1, 3, x[0]); // radial shear of the tangent legs
    set(3, 2, 3, x[0]);
    set(0, 1, 3, x[1]); // boost pair carrying the axial potential
    set(0, 2, 3, -x[1]);
    set(3, 1, 0, x[2]); // tangential precession of the radial leg
    set(3, 2, 0, -x[2]);
    set(0, 3, 1, x[3]); // radial boosts along the angular arcs
    set(0, 3, 2, -x[3]);
    set(0, 1, 0, x[4]); // time rotation of the tangent pair
    set(0, 2, 0, x[4]);
    if (omega_212 != 0.0) set(2, 1, 2, omega_212);
    if (omega_120 != 0.0) set(1, 2, 0, omega_120);
    om.fill_derived();
    return om;
}

} // namespace

SphericalBendingPoint spherical_bending_point(double m, double r, double omega_212,
                                              double omega_120)
{
    SphericalBendingPoint sp;
    sp.r = r;
    auto [ups, x] = aleph_profile(m, r);
    sp.upsilon = ups;
    sp.two_g_aleph3 = x;
    const double sn = std::sin(ups), cs = std::cos(ups);

    // Newton solve of the two bending relations for the helix amplitudes;
    // the system is exactly solvable and well scaled away from m r = 1.
    Eigen::VectorXd p(5);
    p << 0.19 / r, 1.41 * x, 1.35 / r, 0.95 * x, 0.09 * x;
    auto resid = [&](const Eigen::VectorXd& pp) {
        auto [L21, L22] = bending_relation_lhs(helix_omega(r, pp, omega_212, omega_120));
        Eigen::VectorXd rr(8);
        for (int b = 0; b < 4; ++b) {
            rr[b] = L21[b] - ((b == 3) ? m * sn * x : 0.0);
            rr[4 + b] = L22[b] - ((b == 3) ? -m * cs * x : 0.0);
        }
        return rr;
    };
    double best = resid(p).norm();
    for (int it = 0; it < 80 && best > 1e-14; ++it) {
        Eigen::VectorXd r0 = resid(p);
        Eigen::MatrixXd J(8, 5);
        for (int j = 0; j < 5; ++j) {
            const double dp = 1e-7 * std::max(1.0, std::abs(p[j]));
            Eigen::VectorXd pp = p;
            pp[j] += dp;
            J.col(j) = (resid(pp) - r0) / dp;
        }
        p += J.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(-r0);
        best = resid(p).norm();
    }
    if (best > 1e-12 * (1.0 + x))
        throw DomainError("spherical bending system did not close at m r = " +
                          std::to_string(m * r));
    sp.omega = helix_omega(r, p, omega_212, omega_120);
    return sp;
}

} // namespace dgeo
