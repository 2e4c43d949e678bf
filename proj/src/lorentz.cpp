#include "diracgeo/lorentz.hpp"

#include <cmath>

namespace dgeo {

namespace {

Complex det2(const Mat2c& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

void check_unimodular(const Mat2c& lambda)
{
    if (std::abs(det2(lambda) - 1.0) > 1e-10)
        throw NonUnimodular("det lambda deviates from 1 by more than 1e-10");
}

} // namespace

SpinTransform spin_transform(const Mat2c& lambda)
{
    check_unimodular(lambda);
    SpinTransform s;
    s.lambda = lambda;
    s.S4 = Mat4c::Zero();
    s.S4.block<2, 2>(0, 0) = lambda;
    s.S4.block<2, 2>(2, 2) = lambda.adjoint().inverse();
    return s;
}

SpinTransform rotation(int axis, double phi)
{
    // exp(-i phi sigma/2) = cos(phi/2) - i sin(phi/2) sigma, sigma^2 = 1
    const auto& d = dirac();
    Mat4c S = std::cos(0.5 * phi) * Mat4c::Identity() - I * std::sin(0.5 * phi) * d.sig(axis);
    SpinTransform s;
    s.S4 = S;
    s.lambda = S.block<2, 2>(0, 0);
    return s;
}

SpinTransform boost(int axis, double rapidity)
{
    // exp(-eta alpha/2) = cosh(eta/2) - sinh(eta/2) alpha, alpha^2 = 1
    const auto& d = dirac();
    Mat4c S = std::cosh(0.5 * rapidity) * Mat4c::Identity()
              - std::sinh(0.5 * rapidity) * d.alpha[axis];
    SpinTransform s;
    s.S4 = S;
    s.lambda = S.block<2, 2>(0, 0);
    return s;
}

LorentzMatrix induced_lorentz(const SpinTransform& S)
{
    check_unimodular(S.lambda);
    const auto& d = dirac();
    LorentzMatrix lm;
    // alpha^a are orthonormal under (X,Y) -> tr(X Y)/4
    for (int a = 0; a < 4; ++a) {
        Mat4c rotated = S.S4.adjoint() * d.alpha[a] * S.S4;
        for (int b = 0; b < 4; ++b)
            lm.Lambda(a, b) = 0.25 * std::real((d.alpha[b] * rotated).trace());
    }
    return lm;
}

double TensorLawReport::max() const
{
    return std::max({r_vector, r_axial, r_tensor, r_scalar, r_density, r_chiral});
}

TensorLawReport verify_tensor_law(const Spinor& psi, const SpinTransform& S)
{
    const Mat4 L = induced_lorentz(S).Lambda;
    BilinearSet b0 = bilinears(psi);
    BilinearSet b1 = bilinears(S.S4 * psi);

    TensorLawReport r;
    r.r_vector = (b1.j - L * b0.j).cwiseAbs().maxCoeff();
    r.r_axial = (b1.Jax - L * b0.Jax).cwiseAbs().maxCoeff();
    Mat4 m_rot = L * b0.M * L.transpose();
    r.r_tensor = (b1.M - m_rot).cwiseAbs().maxCoeff();
    r.r_scalar = std::max(std::abs(b1.S - b0.S), std::abs(b1.P - b0.P));
    r.r_density = std::abs(b1.R - b0.R);
    if (!b0.degenerate && !b1.degenerate) {
        double du = std::remainder(b1.Upsilon - b0.Upsilon, 2.0 * M_PI);
        r.r_chiral = std::abs(du);
    }
    return r;
}

} // namespace dgeo
