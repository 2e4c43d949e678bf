#ifndef DIRACGEO_TETRAD_HPP
#define DIRACGEO_TETRAD_HPP

#include "diracgeo/dirac_algebra.hpp"

namespace dgeo {

enum class GaugeFlag { from_EH, gauge_completed };

/// Orthonormal tetrad at a point. Row a of `e` holds the leg e_(a)^mu,
/// row a of `einv` the reciprocal co-leg e^{(a)}_mu, so that
/// e * einv^T = 1 (both contractions of the reciprocity relation).
struct Tetrad {
    Mat4 e = Mat4::Identity();
    Mat4 einv = Mat4::Identity();
    GaugeFlag gauge_flag = GaugeFlag::from_EH;
};

struct MetricPoint {
    Mat4 g = eta_matrix();
    Mat4 ginv = eta_matrix();
    double sqrt_minus_g = 1.0;
};

/// Timelike leg from the vector current, radial leg from the axial current,
/// transverse legs seeded from the polarization vectors (magnetic L below the
/// chiral angle pi/4, electric K at or above), orthonormalized. Degenerate
/// transverse data falls back to a deterministic gauge completion seeded by
/// the coordinate axes. Throws DegenerateDensity when R is below threshold.
Tetrad build_tetrad(const BilinearSet& b);

/// Fill the reciprocal co-tetrad by matrix inversion.
/// Throws SingularTetrad when |det| < 1e-10.
void reciprocal(Tetrad& t);

/// Metric from the co-tetrad, g_{ab} = eta_cd e^(c)_a e^(d)_b, plus its inverse.
MetricPoint metric_from_tetrad(const Tetrad& t);

/// Tetrad in the world-time chart: the time coordinate advances R per unit of
/// proper arc (dt = R ds0), so the time leg is stretched by R while the
/// spatial legs keep unit length. The induced metric then has g00 = 1/R^2.
Tetrad world_time_tetrad(const BilinearSet& b);

} // namespace dgeo

#endif
