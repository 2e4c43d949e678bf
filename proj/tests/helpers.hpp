#ifndef DIRACGEO_TEST_HELPERS_HPP
#define DIRACGEO_TEST_HELPERS_HPP

#include <random>

#include "diracgeo/dirac_algebra.hpp"

namespace dgeo::test {

inline Spinor random_spinor(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Spinor psi;
    for (int i = 0; i < 4; ++i) psi[i] = Complex(u(rng), u(rng));
    return psi;
}

// Random spinor kept away from the degenerate (lightlike) set, with the
// current well inside the light cone so tetrad conditioning stays sane.
inline Spinor random_nondegenerate_spinor(std::mt19937_64& rng)
{
    for (;;) {
        Spinor psi = random_spinor(rng);
        BilinearSet b = bilinears(psi);
        if (!b.degenerate && b.R > 0.3 * b.j[0]) return psi;
    }
}

inline Mat2c random_unimodular(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Mat2c m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = Complex(u(rng), u(rng));
        Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (std::abs(det) < 0.5) continue; // keep the map well conditioned
        return m / std::sqrt(det);
    }
}

} // namespace dgeo::test

#endif
