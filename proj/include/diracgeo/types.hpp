#ifndef DIRACGEO_TYPES_HPP
#define DIRACGEO_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace dgeo {

using Complex = std::complex<double>;
using Mat4c = Eigen::Matrix4cd;
using Mat2c = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Vec3 = Eigen::Vector3d;
using Spinor = Eigen::Vector4cd;

inline constexpr Complex I{0.0, 1.0};

// Minkowski signature factor, eta = diag(1,-1,-1,-1).
inline constexpr double eta(int a) { return a == 0 ? 1.0 : -1.0; }

inline Mat4 eta_matrix()
{
    Mat4 m = Mat4::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = m(2, 2) = m(3, 3) = -1.0;
    return m;
}

// Alternating symbol with upper indices, eps^{0123} = +1.
inline int eps4_upper(int a, int b, int c, int d)
{
    int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) sign = -sign;
        }
    return sign;
}

// All indices lowered with eta: eps_{0123} = -1.
inline int eps4_lower(int a, int b, int c, int d) { return -eps4_upper(a, b, c, d); }

inline double minkowski_dot(const Vec4& x, const Vec4& y)
{
    return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

// Lower (or raise) an index with eta; the operation is its own inverse.
inline Vec4 eta_flip(const Vec4& x) { return Vec4(x[0], -x[1], -x[2], -x[3]); }

struct TimelikeViolation : std::runtime_error {
    explicit TimelikeViolation(const std::string& w) : std::runtime_error(w) {}
};
struct DegenerateDensity : std::runtime_error {
    explicit DegenerateDensity(const std::string& w) : std::runtime_error(w) {}
};
struct SingularTetrad : std::runtime_error {
    explicit SingularTetrad(const std::string& w) : std::runtime_error(w) {}
};
struct NonUnimodular : std::runtime_error {
    explicit NonUnimodular(const std::string& w) : std::runtime_error(w) {}
};
struct GridTooSmall : std::runtime_error {
    explicit GridTooSmall(const std::string& w) : std::runtime_error(w) {}
};
struct SingularMetric : std::runtime_error {
    explicit SingularMetric(const std::string& w) : std::runtime_error(w) {}
};
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& w) : std::runtime_error(w) {}
};
struct NoSignChange : std::runtime_error {
    explicit NoSignChange(const std::string& w) : std::runtime_error(w) {}
};
struct StiffIntegration : std::runtime_error {
    explicit StiffIntegration(const std::string& w) : std::runtime_error(w) {}
};
struct FixedPointDivergence : std::runtime_error {
    explicit FixedPointDivergence(const std::string& w) : std::runtime_error(w) {}
};
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& w) : std::runtime_error(w) {}
};

} // namespace dgeo

#endif
