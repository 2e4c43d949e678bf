#include "diracgeo/dirac_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace dgeo {

namespace {

Mat2c pauli(int i)
{
    Mat2c t = Mat2c::Zero();
    switch (i) {
        case 1: t(0, 1) = 1.0; t(1, 0) = 1.0; break;
        case 2: t(0, 1) = -I; t(1, 0) = I; break;
        case 3: t(0, 0) = 1.0; t(1, 1) = -1.0; break;
    }
    return t;
}

Mat4c block_diag(const Mat2c& a, const Mat2c& b)
{
    Mat4c m = Mat4c::Zero();
    m.block<2, 2>(0, 0) = a;
    m.block<2, 2>(2, 2) = b;
    return m;
}

Mat4c block_off(const Mat2c& a, const Mat2c& b)
{
    Mat4c m = Mat4c::Zero();
    m.block<2, 2>(0, 2) = a;
    m.block<2, 2>(2, 0) = b;
    return m;
}

DiracMatrices build_matrices()
{
    DiracMatrices d;
    const Mat2c one = Mat2c::Identity();
    d.alpha[0] = Mat4c::Identity();
    for (int i = 1; i <= 3; ++i)
        d.alpha[i] = block_diag(pauli(i), -pauli(i));
    d.rho[0] = block_off(one, one);
    d.rho[1] = block_off(-I * one, I * one);
    d.rho[2] = block_diag(one, -one);
    for (int i = 1; i <= 3; ++i)
        d.sigma[i - 1] = block_diag(pauli(i), pauli(i));
    return d;
}

inline double re_form(const Spinor& psi, const Mat4c& m)
{
    return std::real(psi.dot(m * psi)); // psi.dot conjugates the left factor
}

} // namespace

const DiracMatrices& dirac()
{
    static const DiracMatrices d = build_matrices();
    return d;
}

Mat4 dual(const Mat4& M)
{
    // Lower both indices of M with eta, contract with eps^{abcd}.
    Mat4 Mlow;
    for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
            Mlow(c, d) = eta(c) * eta(d) * M(c, d);
    Mat4 out = Mat4::Zero();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double s = 0.0;
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    int e = eps4_upper(a, b, c, d);
                    if (e) s += 0.5 * e * Mlow(c, d);
                }
            out(a, b) = s;
        }
    return out;
}

double invariant_density(const Vec4& j, double scale)
{
    const double jsq = minkowski_dot(j, j);
    const double tol = 1e-10 * scale * scale + 1e-300;
    if (jsq < -tol)
        throw TimelikeViolation("current is spacelike: j.j = " + std::to_string(jsq));
    return std::sqrt(std::max(jsq, 0.0));
}

BilinearSet bilinears(const Spinor& psi)
{
    if (!psi.allFinite())
        throw TimelikeViolation("non-finite spinor input");
    const DiracMatrices& d = dirac();
    BilinearSet b;
    for (int a = 0; a < 4; ++a) {
        b.j[a] = re_form(psi, d.alpha[a]);
        b.Jax[a] = re_form(psi, d.rho3() * d.alpha[a]);
    }
    b.S = re_form(psi, d.rho1());
    b.P = re_form(psi, d.rho2());
    for (int a = 0; a < 4; ++a)
        for (int c = a + 1; c < 4; ++c) {
            const Complex m = psi.dot(d.alpha[a] * d.rho1() * d.alpha[c] * psi);
            b.M(a, c) = -std::imag(m);
            b.M(c, a) = -b.M(a, c);
        }
    for (int i = 1; i <= 3; ++i) {
        b.K[i - 1] = re_form(psi, d.rho2() * d.sig(i));
        b.L[i - 1] = re_form(psi, d.rho1() * d.sig(i));
    }
    const double norm = std::real(psi.dot(psi));
    b.R = invariant_density(b.j, norm);
    b.degenerate = (b.R <= 1e-12 * norm);
    b.Upsilon = b.degenerate ? 0.0 : std::atan2(b.P, b.S);
    return b;
}

double InvariantReport::max() const
{
    return std::max({r_density, r_axial, r_ortho, r_len, r_cross, r_chiral});
}

InvariantReport invariant_report(const BilinearSet& b)
{
    InvariantReport r;
    const double jsq = minkowski_dot(b.j, b.j);
    const double asq = minkowski_dot(b.Jax, b.Jax);
    r.r_density = std::abs(jsq - (b.S * b.S + b.P * b.P));
    r.r_axial = std::abs(jsq + asq);
    r.r_ortho = std::abs(minkowski_dot(b.Jax, b.j));
    const double l2 = b.L.squaredNorm(), k2 = b.K.squaredNorm();
    r.r_len = std::abs((b.S * b.S - b.P * b.P) - (l2 - k2));
    r.r_cross = std::abs(b.S * b.P - b.L.dot(b.K));
    const double r2 = b.R * b.R;
    r.r_chiral = std::max(std::abs((l2 - k2) - r2 * std::cos(2.0 * b.Upsilon)),
                          std::abs(2.0 * b.L.dot(b.K) - r2 * std::sin(2.0 * b.Upsilon)));
    return r;
}

} // namespace dgeo
