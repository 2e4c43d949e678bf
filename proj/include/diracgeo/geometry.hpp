#ifndef DIRACGEO_GEOMETRY_HPP
#define DIRACGEO_GEOMETRY_HPP

#include "diracgeo/grid.hpp"
#include "diracgeo/tetrad.hpp"

namespace dgeo {

/// Levi-Civita symbols at a node, G[sigma](mu, nu).
struct Christoffel {
    std::array<Mat4, 4> G;

    static Christoffel Zero()
    {
        Christoffel c;
        for (auto& m : c.G) m = Mat4::Zero();
        return c;
    }
    Christoffel operator+(const Christoffel& o) const
    {
        Christoffel r;
        for (int s = 0; s < 4; ++s) r.G[s] = G[s] + o.G[s];
        return r;
    }
    Christoffel operator-(const Christoffel& o) const
    {
        Christoffel r;
        for (int s = 0; s < 4; ++s) r.G[s] = G[s] - o.G[s];
        return r;
    }
    Christoffel operator*(double c) const
    {
        Christoffel r;
        for (int s = 0; s < 4; ++s) r.G[s] = G[s] * c;
        return r;
    }
};

/// Ricci rotation coefficients omega_{abc} (skew in the first pair) plus the
/// derived invariants w_b (anholonomy of the spatial net) and k_i.
struct RotationCoefficients {
    double o[4][4][4] = {};
    Vec4 w = Vec4::Zero();
    Vec4 k = Vec4::Zero(); // k[0] unused

    double omega(int a, int b, int c) const { return o[a][b][c]; }

    static RotationCoefficients Zero() { return RotationCoefficients{}; }
    RotationCoefficients operator+(const RotationCoefficients& r) const
    {
        RotationCoefficients s = *this;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) s.o[a][b][c] += r.o[a][b][c];
        s.w += r.w;
        s.k += r.k;
        return s;
    }
    RotationCoefficients operator-(const RotationCoefficients& r) const
    {
        RotationCoefficients s = *this;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) s.o[a][b][c] -= r.o[a][b][c];
        s.w -= r.w;
        s.k -= r.k;
        return s;
    }
    RotationCoefficients operator*(double c) const
    {
        RotationCoefficients s = *this;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int cc = 0; cc < 4; ++cc) s.o[a][b][cc] *= c;
        s.w *= c;
        s.k *= c;
        return s;
    }
    void fill_derived();
};

struct CurvatureBundle {
    // Coordinate Riemann tensor R_{sigma nu mu lambda} in the convention of
    // the commutator acting on co-legs; rt holds the tetrad invariants
    // R_{abcd} assembled from the rotation coefficients.
    double rc[4][4][4][4] = {};
    double rt[4][4][4][4] = {};
    Mat4 ricci = Mat4::Zero();
    double scalar = 0.0;

    static CurvatureBundle Zero() { return CurvatureBundle{}; }
};

MetricPoint make_metric_point(const Mat4& g);

Field<Christoffel> christoffel(const Field<MetricPoint>& metric);

/// omega_{abc} = e_(c)^mu (nabla_mu e_(a)^nu) e_(b)nu, antisymmetrized in
/// (a,b); derived invariants filled.
Field<RotationCoefficients> rotation_coefficients(const Field<Tetrad>& tetrad,
                                                  const Field<MetricPoint>& metric,
                                                  const Field<Christoffel>& gamma);

/// Coordinate Riemann from Gamma derivatives, Ricci and scalar curvature,
/// and the tetrad-form Riemann from the rotation coefficients.
Field<CurvatureBundle> riemann(const Field<MetricPoint>& metric,
                               const Field<Christoffel>& gamma,
                               const Field<Tetrad>& tetrad,
                               const Field<RotationCoefficients>& omega);

/// Project the coordinate Riemann tensor onto tetrad legs; with matching
/// conventions this reproduces the rotation-coefficient form.
void project_riemann(const Tetrad& t, const double rc[4][4][4][4],
                     double out[4][4][4][4]);

/// Residuals of the timelike-congruence relations: normality of the time
/// congruence, the density-gradient relation, the divergence relation, and
/// conservation of R sqrt(det spatial metric) in time.
struct TimeDiagnostics {
    double normality = 0.0;
    double gradient_consistency = 0.0;
    double divergence = 0.0;
    double current_conservation = 0.0;
};

TimeDiagnostics time_function_diagnostics(const Field<RotationCoefficients>& omega,
                                          const Field<double>& density,
                                          const Field<Tetrad>& tetrad,
                                          const Field<MetricPoint>& metric,
                                          const Field<Christoffel>& gamma);

} // namespace dgeo

#endif
