#include "diracgeo/connection.hpp"

#include <cmath>

namespace dgeo {

Mat4c omega_term_explicit(const RotationCoefficients& om, int b)
{
    const auto& d = dirac();
    Mat4c G = Mat4c::Zero();
    for (int kk = 1; kk <= 3; ++kk) {
        G += 0.5 * om.o[0][kk][b] * (d.rho3() * d.sig(kk));
        double coeff = 0.0;
        for (int i = 1; i <= 3; ++i)
            for (int m = 1; m <= 3; ++m)
                coeff += eps4_upper(0, i, m, kk) * om.o[i][m][b];
        G += -I * 0.25 * coeff * d.sig(kk);
    }
    return G;
}

SpinConnection build_connection(const ConnectionInputs& in)
{
    const auto& d = dirac();
    SpinConnection c;
    for (int b = 0; b < 4; ++b) {
        Mat4c G = I * in.e_charge * in.A[b] * Mat4c::Identity()
                  + I * in.g_coupling * in.aleph[b] * d.rho3();
        // compact geometric part (1/4) omega_{cdb} rho1 a^c rho1 a^d
        for (int cc = 0; cc < 4; ++cc)
            for (int dd = 0; dd < 4; ++dd) {
                const double w = in.omega.o[cc][dd][b];
                if (w != 0.0) G += 0.25 * w * d.rho1() * d.alpha[cc] * d.rho1() * d.alpha[dd];
            }
        c.Gamma[b] = G;
    }
    return c;
}

double defining_residual(const SpinConnection& c, const RotationCoefficients& om)
{
    const auto& d = dirac();
    double worst = 0.0;
    for (int b = 0; b < 4; ++b)
        for (int a = 0; a < 4; ++a) {
            Mat4c lhs = c.Gamma[b].adjoint() * d.alpha_low(a) + d.alpha_low(a) * c.Gamma[b];
            for (int cc = 0; cc < 4; ++cc) lhs -= om.o[a][cc][b] * d.alpha[cc];
            worst = std::max(worst, lhs.cwiseAbs().maxCoeff());
        }
    return worst;
}

double pair_residual(const SpinConnection& c, const Vec4& aleph, double g_coupling)
{
    const auto& d = dirac();
    double worst = 0.0;
    for (int b = 0; b < 4; ++b) {
        Mat4c r1 = c.Gamma[b].adjoint() * d.rho1() + d.rho1() * c.Gamma[b]
                   - 2.0 * g_coupling * aleph[b] * d.rho2();
        Mat4c r2 = c.Gamma[b].adjoint() * d.rho2() + d.rho2() * c.Gamma[b]
                   + 2.0 * g_coupling * aleph[b] * d.rho1();
        worst = std::max({worst, r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff()});
    }
    return worst;
}

Field<DSpinor> covariant_derivative(const Field<Spinor>& psi,
                                    const Field<SpinConnection>& conn,
                                    const Field<Tetrad>& tetrad)
{
    const Grid& g = psi.grid;
    if (!g.compatible(conn.grid) || !g.compatible(tetrad.grid))
        throw GridTooSmall("incompatible grids");
    std::array<Field<Spinor>, 4> dpsi;
    for (int mu = 0; mu < 4; ++mu) dpsi[mu] = partial(psi, mu);

    Field<DSpinor> out(g);
    for (std::size_t p = 0; p < g.size(); ++p) {
        const Mat4& E = tetrad.v[p].e;
        for (int a = 0; a < 4; ++a) {
            Spinor s = Spinor::Zero();
            for (int mu = 0; mu < 4; ++mu) s += E(a, mu) * dpsi[mu].v[p];
            s -= conn.v[p].Gamma[a] * psi.v[p];
            out.v[p][a] = s;
        }
    }
    return out;
}

Field<Mat4> field_strength(const Field<Vec4>& pot, const Field<RotationCoefficients>& om,
                           const Field<Tetrad>& tetrad)
{
    const Grid& g = pot.grid;
    std::array<Field<Vec4>, 4> dpot;
    for (int mu = 0; mu < 4; ++mu) dpot[mu] = partial(pot, mu);

    Field<Mat4> out(g, Mat4::Zero());
    for (std::size_t p = 0; p < g.size(); ++p) {
        const Mat4& E = tetrad.v[p].e;
        auto dir = [&](int a, int comp) {
            double s = 0.0;
            for (int mu = 0; mu < 4; ++mu) s += E(a, mu) * dpot[mu].v[p][comp];
            return s;
        };
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                double f = dir(a, b) - dir(b, a);
                for (int cc = 0; cc < 4; ++cc)
                    f -= (om.v[p].o[cc][a][b] - om.v[p].o[cc][b][a]) * eta(cc)
                         * pot.v[p][cc];
                out.v[p](a, b) = f;
                out.v[p](b, a) = -f;
            }
    }
    return out;
}

CommutatorCurvature commutator_curvature(const ConnectionInputs& in,
                                         const double Rt[4][4][4][4], const Mat4& F,
                                         const Mat4& U)
{
    const auto& d = dirac();
    CommutatorCurvature cc;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Mat4c m = I * in.e_charge * F(a, b) * Mat4c::Identity()
                      + I * in.g_coupling * U(a, b) * d.rho3();
            for (int c = 0; c < 4; ++c)
                for (int e = 0; e < 4; ++e) {
                    const double r = Rt[a][b][c][e];
                    if (r != 0.0)
                        m += -0.25 * r * d.rho1() * d.alpha[c] * d.rho1() * d.alpha[e];
                }
            cc.D[a][b] = m;
        }
    return cc;
}

Mat4 tetrad_ricci(const double Rt[4][4][4][4])
{
    // R_{bd} = eta^{ac} R_{bacd}; this contraction satisfies the
    // alpha-contracted reduction of the commutator matrices.
    Mat4 r = Mat4::Zero();
    for (int b = 0; b < 4; ++b)
        for (int dd = 0; dd < 4; ++dd) {
            double s = 0.0;
            for (int a = 0; a < 4; ++a) s += eta(a) * Rt[b][a][a][dd];
            r(b, dd) = s;
        }
    return r;
}

double reduction_residual(const CommutatorCurvature& cc, const ConnectionInputs& in,
                          const double Rt[4][4][4][4], const Mat4& F, const Mat4& U)
{
    const auto& d = dirac();
    const Mat4 ric = tetrad_ricci(Rt);
    double worst = 0.0;
    for (int b = 0; b < 4; ++b) {
        Mat4c lhs = Mat4c::Zero(), rhs = Mat4c::Zero();
        for (int a = 0; a < 4; ++a) {
            lhs += d.alpha[a] * cc.D[a][b];
            rhs += 0.5 * ric(a, b) * d.alpha[a]
                   + I * in.e_charge * F(a, b) * d.alpha[a]
                   + I * in.g_coupling * U(a, b) * d.rho3() * d.alpha[a];
        }
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

ScalarDerivativeFields scalar_derivatives(const Field<Spinor>& psi,
                                          const Field<Vec4>& aleph,
                                          const Field<Tetrad>& tetrad, double g_coupling)
{
    const Grid& g = psi.grid;
    Field<double> S(g), P(g), R(g), Ups(g);
    for (std::size_t p = 0; p < g.size(); ++p) {
        BilinearSet b = bilinears(psi.v[p]);
        if (b.degenerate)
            throw DegenerateDensity("chiral angle undefined at a grid node");
        S.v[p] = b.S;
        P.v[p] = b.P;
        R.v[p] = b.R;
        Ups.v[p] = b.Upsilon;
    }
    std::array<Field<double>, 4> dS, dP, dU, dR;
    for (int mu = 0; mu < 4; ++mu) {
        dS[mu] = partial(S, mu);
        dP[mu] = partial(P, mu);
        dU[mu] = partial(Ups, mu);
        dR[mu] = partial(R, mu);
    }

    ScalarDerivativeFields out;
    out.dS = Field<Vec4>(g, Vec4::Zero());
    out.dP = Field<Vec4>(g, Vec4::Zero());
    out.dUps = Field<Vec4>(g, Vec4::Zero());
    for (std::size_t p = 0; p < g.size(); ++p) {
        const Mat4& E = tetrad.v[p].e;
        auto dir = [&](const std::array<Field<double>, 4>& df, int a) {
            double s = 0.0;
            for (int mu = 0; mu < 4; ++mu) s += E(a, mu) * df[mu].v[p];
            return s;
        };
        for (int a = 0; a < 4; ++a) {
            const double al = aleph.v[p][a];
            out.dS.v[p][a] = dir(dS, a) - 2.0 * g_coupling * P.v[p] * al;
            out.dP.v[p][a] = dir(dP, a) + 2.0 * g_coupling * S.v[p] * al;
            out.dUps.v[p][a] = dir(dU, a) + 2.0 * g_coupling * al;
            // chain-rule consistency for the pseudoscalar
            double chain = std::sin(Ups.v[p]) * dir(dR, a)
                           + R.v[p] * std::cos(Ups.v[p]) * out.dUps.v[p][a];
            out.consistency = std::max(out.consistency,
                                       std::abs(out.dP.v[p][a] - chain));
        }
    }
    return out;
}

} // namespace dgeo
