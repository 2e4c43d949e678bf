#include "diracgeo/tetrad.hpp"

#include <cmath>
#include <vector>

namespace dgeo {

namespace {

// Subtract the components of v along the (already unit) legs in rows.
Vec4 project_out(Vec4 v, const std::vector<Vec4>& legs, const std::vector<double>& norms)
{
    for (size_t i = 0; i < legs.size(); ++i)
        v -= (minkowski_dot(v, legs[i]) / norms[i]) * legs[i];
    return v;
}

// Hodge complement of three vectors: w^mu orthogonal to all of them.
Vec4 hodge_complement(const Vec4& a, const Vec4& b, const Vec4& c)
{
    Vec4 w = Vec4::Zero();
    for (int nu = 0; nu < 4; ++nu) {
        double s = 0.0;
        for (int r = 0; r < 4; ++r)
            for (int al = 0; al < 4; ++al)
                for (int be = 0; be < 4; ++be) {
                    int e = eps4_lower(nu, r, al, be);
                    if (e) s += e * a[r] * b[al] * c[be];
                }
        w[nu] = s;
    }
    return eta_flip(w);
}

} // namespace

Tetrad build_tetrad(const BilinearSet& b)
{
    const double psi_norm = b.j[0]; // = psi^dag psi
    if (b.degenerate || b.R <= 1e-12 * psi_norm)
        throw DegenerateDensity("invariant density below threshold, no tetrad");

    Tetrad t;
    const Vec4 e0 = b.j / b.R;
    const Vec4 e3 = b.Jax / b.R;
    const std::vector<Vec4> base = {e0, e3};
    const std::vector<double> base_norms = {1.0, -1.0};

    // Transverse seeding. The covariant contractions of the skew tensor with
    // both currents vanish identically (M is fixed by j, Jax, S, P), so the
    // transverse plane is seeded from the spatial polarization vectors:
    // the magnetic one L below the chiral angle pi/4 (|L| >= |K| there),
    // the electric one K at or above. The partner leg is the Hodge
    // complement of (e0, seed, e3).
    const bool magnetic = std::cos(2.0 * b.Upsilon) > 0.0;
    Vec4 seed = Vec4::Zero();
    seed.tail<3>() = magnetic ? b.L : b.K;

    const double thr = 1e-9 * psi_norm;
    bool completed = false;
    Vec4 e1, e2;

    Vec4 v1 = project_out(seed, base, base_norms);
    double n1 = -minkowski_dot(v1, v1);
    if (n1 > thr * thr) {
        e1 = v1 / std::sqrt(n1);
        e1 = project_out(e1, base, base_norms); // second pass kills the
        e1 /= std::sqrt(-minkowski_dot(e1, e1)); // cancellation residue
        Vec4 v2 = hodge_complement(e0, e1, e3);
        double n2 = -minkowski_dot(v2, v2);
        e2 = v2 / std::sqrt(n2);
    } else {
        // deterministic gauge completion seeded by the coordinate axes
        completed = true;
        std::vector<Vec4> legs = base;
        std::vector<double> norms = base_norms;
        for (int axis : {1, 2, 3, 0}) {
            Vec4 w = project_out(Vec4::Unit(axis), legs, norms);
            double nw = -minkowski_dot(w, w);
            if (nw > 1e-8) {
                e1 = w / std::sqrt(nw);
                break;
            }
        }
        Vec4 v2 = hodge_complement(e0, e1, e3);
        e2 = v2 / std::sqrt(-minkowski_dot(v2, v2));
    }

    t.e.row(0) = e0.transpose();
    t.e.row(1) = e1.transpose();
    t.e.row(2) = e2.transpose();
    t.e.row(3) = e3.transpose();

    // right-handed ordering with eps^{0123} = +1
    if (t.e.determinant() < 0.0) t.e.row(2) = -t.e.row(2);

    t.gauge_flag = completed ? GaugeFlag::gauge_completed : GaugeFlag::from_EH;
    reciprocal(t);
    return t;
}

void reciprocal(Tetrad& t)
{
    const double det = t.e.determinant();
    if (std::abs(det) < 1e-10)
        throw SingularTetrad("tetrad determinant below 1e-10");
    t.einv = t.e.inverse().transpose(); // einv(a, mu) = (e^-1)(mu, a)
}

MetricPoint metric_from_tetrad(const Tetrad& t)
{
    if (std::abs(t.e.determinant()) < 1e-10)
        throw SingularTetrad("tetrad determinant below 1e-10");
    MetricPoint mp;
    const Mat4 etam = eta_matrix();
    mp.g = t.einv.transpose() * etam * t.einv;
    mp.ginv = t.e.transpose() * etam * t.e;
    const double detg = mp.g.determinant();
    if (!(detg < 0.0))
        throw SingularMetric("metric determinant not negative");
    mp.sqrt_minus_g = std::sqrt(-detg);
    return mp;
}

Tetrad world_time_tetrad(const BilinearSet& b)
{
    Tetrad t = build_tetrad(b);
    t.e.row(0) *= b.R; // dt = R ds0 along the time congruence
    reciprocal(t);
    return t;
}

} // namespace dgeo
