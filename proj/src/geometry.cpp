#include "diracgeo/geometry.hpp"

#include <cmath>

namespace dgeo {

void RotationCoefficients::fill_derived()
{
    for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    int e = eps4_lower(a, c, d, b);
                    if (e) s += e * o[a][c][d];
                }
        w[b] = -0.5 * s;
    }
    k.setZero();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (j != i) k[i] += o[j][i][j];
}

MetricPoint make_metric_point(const Mat4& g)
{
    MetricPoint mp;
    mp.g = g;
    const double det = g.determinant();
    if (std::abs(det) < 1e-12) throw SingularMetric("metric determinant near zero");
    mp.ginv = g.inverse();
    mp.sqrt_minus_g = std::sqrt(std::abs(det));
    return mp;
}

Field<Christoffel> christoffel(const Field<MetricPoint>& metric)
{
    const Grid& g = metric.grid;
    Field<Mat4> gfield = map_field(metric, [](const MetricPoint& m) { return m.g; });
    std::array<Field<Mat4>, 4> dg;
    for (int mu = 0; mu < 4; ++mu) dg[mu] = partial(gfield, mu);

    Field<Christoffel> out(g, Christoffel::Zero());
    for (std::size_t p = 0; p < g.size(); ++p) {
        const Mat4& ginv = metric.v[p].ginv;
        if (!ginv.allFinite()) throw SingularMetric("non-finite inverse metric");
        for (int s = 0; s < 4; ++s)
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu; nu < 4; ++nu) {
                    double sum = 0.0;
                    for (int r = 0; r < 4; ++r)
                        sum += ginv(s, r) * (dg[mu].v[p](r, nu) + dg[nu].v[p](r, mu)
                                             - dg[r].v[p](mu, nu));
                    out.v[p].G[s](mu, nu) = 0.5 * sum;
                    out.v[p].G[s](nu, mu) = 0.5 * sum;
                }
    }
    return out;
}

Field<RotationCoefficients> rotation_coefficients(const Field<Tetrad>& tetrad,
                                                  const Field<MetricPoint>& metric,
                                                  const Field<Christoffel>& gamma)
{
    const Grid& g = tetrad.grid;
    if (!g.compatible(metric.grid)) throw GridTooSmall("incompatible grids");
    Field<Mat4> efield = map_field(tetrad, [](const Tetrad& t) { return t.e; });
    std::array<Field<Mat4>, 4> de;
    for (int mu = 0; mu < 4; ++mu) de[mu] = partial(efield, mu);

    Field<RotationCoefficients> out(g);
    for (std::size_t p = 0; p < g.size(); ++p) {
        const Mat4& E = tetrad.v[p].e;
        const Mat4& gm = metric.v[p].g;
        const Christoffel& ch = gamma.v[p];

        // nabla_mu e_(a)^nu
        double grad[4][4][4];
        for (int mu = 0; mu < 4; ++mu)
            for (int a = 0; a < 4; ++a)
                for (int nu = 0; nu < 4; ++nu) {
                    double s = de[mu].v[p](a, nu);
                    for (int r = 0; r < 4; ++r) s += ch.G[nu](mu, r) * E(a, r);
                    grad[mu][a][nu] = s;
                }

        RotationCoefficients& rc = out.v[p];
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    double s_ab = 0.0, s_ba = 0.0;
                    for (int mu = 0; mu < 4; ++mu)
                        for (int nu = 0; nu < 4; ++nu) {
                            double elow_b = 0.0, elow_a = 0.0;
                            for (int r = 0; r < 4; ++r) {
                                elow_b += gm(nu, r) * E(b, r);
                                elow_a += gm(nu, r) * E(a, r);
                            }
                            s_ab += E(c, mu) * grad[mu][a][nu] * elow_b;
                            s_ba += E(c, mu) * grad[mu][b][nu] * elow_a;
                        }
                    const double val = 0.5 * (s_ab - s_ba); // exact skew pair
                    rc.o[a][b][c] = val;
                    rc.o[b][a][c] = -val;
                }
        rc.fill_derived();
    }
    return out;
}

Field<CurvatureBundle> riemann(const Field<MetricPoint>& metric,
                               const Field<Christoffel>& gamma,
                               const Field<Tetrad>& tetrad,
                               const Field<RotationCoefficients>& omega)
{
    const Grid& g = metric.grid;
    std::array<Field<Christoffel>, 4> dG;
    for (int mu = 0; mu < 4; ++mu) dG[mu] = partial(gamma, mu);
    std::array<Field<RotationCoefficients>, 4> dw;
    for (int mu = 0; mu < 4; ++mu) dw[mu] = partial(omega, mu);

    Field<CurvatureBundle> out(g);
    for (std::size_t p = 0; p < g.size(); ++p) {
        CurvatureBundle& cb = out.v[p];
        const Christoffel& ch = gamma.v[p];
        const Mat4& gm = metric.v[p].g;
        const Mat4& ginv = metric.v[p].ginv;

        // mixed-index commutator form, then lower the first slot
        double rmix[4][4][4][4];
        for (int s = 0; s < 4; ++s)
            for (int nu = 0; nu < 4; ++nu)
                for (int mu = 0; mu < 4; ++mu)
                    for (int la = 0; la < 4; ++la) {
                        double val = dG[mu].v[p].G[s](nu, la) - dG[la].v[p].G[s](nu, mu);
                        for (int ka = 0; ka < 4; ++ka)
                            val += ch.G[s](mu, ka) * ch.G[ka](nu, la)
                                   - ch.G[s](la, ka) * ch.G[ka](nu, mu);
                        rmix[s][nu][mu][la] = val;
                    }
        // Lowered-index storage; the tetrad projection of this tensor
        // reproduces the rotation-coefficient form entrywise, which fixes
        // the first-pair orientation.
        for (int s = 0; s < 4; ++s)
            for (int nu = 0; nu < 4; ++nu)
                for (int mu = 0; mu < 4; ++mu)
                    for (int la = 0; la < 4; ++la) {
                        double low = 0.0;
                        for (int r = 0; r < 4; ++r) low += gm(s, r) * rmix[r][nu][mu][la];
                        cb.rc[s][nu][mu][la] = low;
                    }

        for (int nu = 0; nu < 4; ++nu)
            for (int la = 0; la < 4; ++la) {
                double val = 0.0;
                for (int s = 0; s < 4; ++s) val += rmix[s][nu][s][la];
                cb.ricci(nu, la) = val;
            }
        cb.scalar = 0.0;
        for (int nu = 0; nu < 4; ++nu)
            for (int la = 0; la < 4; ++la) cb.scalar += ginv(nu, la) * cb.ricci(nu, la);

        // tetrad form from the rotation coefficients
        const Mat4& E = tetrad.v[p].e;
        const RotationCoefficients& om = omega.v[p];
        auto dir = [&](int a, int b, int c, int d) {
            double s = 0.0;
            for (int mu = 0; mu < 4; ++mu) s += E(d, mu) * dw[mu].v[p].o[a][b][c];
            return s;
        };
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    for (int d = 0; d < 4; ++d) {
                        double val = dir(a, b, c, d) - dir(a, b, d, c);
                        for (int f = 0; f < 4; ++f)
                            val += eta(f) * (om.o[f][a][d] * om.o[f][b][c]
                                             - om.o[f][a][c] * om.o[f][b][d]
                                             + om.o[a][b][f]
                                                   * (om.o[f][c][d] - om.o[f][d][c]));
                        cb.rt[a][b][c][d] = val;
                    }
    }
    return out;
}

void project_riemann(const Tetrad& t, const double rc[4][4][4][4],
                     double out[4][4][4][4])
{
    const Mat4& E = t.e;
    double t1[4][4][4][4] = {}, t2[4][4][4][4] = {}, t3[4][4][4][4] = {};
    for (int a = 0; a < 4; ++a)
        for (int nu = 0; nu < 4; ++nu)
            for (int mu = 0; mu < 4; ++mu)
                for (int la = 0; la < 4; ++la)
                    for (int si = 0; si < 4; ++si)
                        t1[a][nu][mu][la] += E(a, si) * rc[si][nu][mu][la];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int mu = 0; mu < 4; ++mu)
                for (int la = 0; la < 4; ++la)
                    for (int nu = 0; nu < 4; ++nu)
                        t2[a][b][mu][la] += E(b, nu) * t1[a][nu][mu][la];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int la = 0; la < 4; ++la)
                    for (int mu = 0; mu < 4; ++mu)
                        t3[a][b][c][la] += E(c, mu) * t2[a][b][mu][la];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    double s = 0.0;
                    for (int la = 0; la < 4; ++la) s += E(d, la) * t3[a][b][c][la];
                    out[a][b][c][d] = s;
                }
}

TimeDiagnostics time_function_diagnostics(const Field<RotationCoefficients>& omega,
                                          const Field<double>& density,
                                          const Field<Tetrad>& tetrad,
                                          const Field<MetricPoint>& metric,
                                          const Field<Christoffel>& gamma)
{
    const Grid& g = omega.grid;
    Field<double> lnR = map_field(density, [](double r) { return std::log(r); });
    std::array<Field<double>, 4> dlnR;
    for (int mu = 0; mu < 4; ++mu) dlnR[mu] = partial(lnR, mu);

    Field<Mat4> efield = map_field(tetrad, [](const Tetrad& t) { return t.e; });
    std::array<Field<Mat4>, 4> de;
    for (int mu = 0; mu < 4; ++mu) de[mu] = partial(efield, mu);

    // spatial-volume flux: d/dt of (R sqrt|det g_ik|)
    Field<double> rvol(g);
    for (std::size_t p = 0; p < g.size(); ++p) {
        Eigen::Matrix3d gs = metric.v[p].g.block<3, 3>(1, 1);
        rvol.v[p] = density.v[p] * std::sqrt(std::abs(gs.determinant()));
    }
    Field<double> drvol = partial(rvol, 0);

    TimeDiagnostics td;
    for (std::size_t p = 0; p < g.size(); ++p) {
        const RotationCoefficients& om = omega.v[p];
        const Mat4& E = tetrad.v[p].e;

        for (int a = 1; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                td.normality = std::max(td.normality,
                                        std::abs(om.o[0][a][b] - om.o[0][b][a]));

        auto dlnR_dir = [&](int a) {
            double s = 0.0;
            for (int mu = 0; mu < 4; ++mu) s += E(a, mu) * dlnR[mu].v[p];
            return s;
        };
        for (int a = 1; a < 4; ++a)
            td.gradient_consistency = std::max(td.gradient_consistency,
                                               std::abs(dlnR_dir(a) + om.o[a][0][0]));

        double div_e0 = 0.0;
        for (int nu = 0; nu < 4; ++nu) {
            div_e0 += de[nu].v[p](0, nu);
            for (int r = 0; r < 4; ++r)
                div_e0 += gamma.v[p].G[nu](nu, r) * E(0, r);
        }
        td.divergence = std::max(td.divergence, std::abs(div_e0 + dlnR_dir(0)));

        td.current_conservation = std::max(td.current_conservation,
                                           std::abs(drvol.v[p]));
    }
    return td;
}

} // namespace dgeo
