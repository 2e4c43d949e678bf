#include "diracgeo/radial.hpp"

#include <cmath>

#include "diracgeo/manufactured.hpp"

namespace dgeo {

double RadialProblem::g_aleph(double r) const
{
    switch (aleph_mode) {
        case AlephMode::off: return 0.0;
        case AlephMode::eq_4_18: return 0.5 * aleph_profile(m, r).second;
        case AlephMode::custom: return custom_g_aleph ? custom_g_aleph(r) : 0.0;
    }
    return 0.0;
}

double RadialProblem::potential(double r) const { return -Zalpha / r; }

AngularMode angular_modes(double k, double m_z, int n_theta, double theta_margin)
{
    if (k == 0.0) throw DomainError("angular separation constant must be nonzero");
    AngularMode am;
    am.k = k;
    am.m_z = m_z;
    am.theta.resize(n_theta);
    am.Y.resize(n_theta);
    am.Z.resize(n_theta);
    const double th0 = theta_margin, th1 = M_PI - theta_margin;
    for (int i = 0; i < n_theta; ++i)
        am.theta[i] = th0 + (th1 - th0) * i / (n_theta - 1);

    if (m_z == 0.0) {
        am.closed_form = true;
        for (int i = 0; i < n_theta; ++i) {
            am.Y[i] = std::cos(k * am.theta[i]);
            am.Z[i] = -std::sin(k * am.theta[i]);
        }
        return am;
    }

    // ladder pair as an ODE in theta, integrated out from the equator
    auto rhs = [&](double th, const Eigen::Vector2d& yz) {
        const double cosec = 1.0 / std::sin(th);
        return Eigen::Vector2d(m_z * cosec * yz[0] + k * yz[1],
                               -k * yz[0] - m_z * cosec * yz[1]);
    };
    auto march = [&](int from, int to, int step) {
        for (int i = from; i != to; i += step) {
            double th = am.theta[i];
            double h = (am.theta[i + step] - th) / 16;
            Eigen::Vector2d y(am.Y[i], am.Z[i]);
            for (int s = 0; s < 16; ++s) {
                Eigen::Vector2d k1 = rhs(th, y);
                Eigen::Vector2d k2 = rhs(th + 0.5 * h, y + 0.5 * h * k1);
                Eigen::Vector2d k3 = rhs(th + 0.5 * h, y + 0.5 * h * k2);
                Eigen::Vector2d k4 = rhs(th + h, y + h * k3);
                y += (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
                th += h;
            }
            am.Y[i + step] = y[0];
            am.Z[i + step] = y[1];
        }
    };
    const int mid = n_theta / 2;
    am.Y[mid] = 1.0;
    am.Z[mid] = 0.0;
    march(mid, n_theta - 1, +1);
    march(mid, 0, -1);
    return am;
}

State4 radial_rhs(double energy, double r, const State4& y, const RadialProblem& prob)
{
    const double V = prob.potential(r);
    const double ga = prob.g_aleph(r);
    const double kr = prob.k / r;
    const double m = prob.m;
    const Complex uL = y[0], dL = y[1], uR = y[2], dR = y[3];
    State4 dy;
    dy[0] = -I * (energy - V - ga) * uL + kr * dL + I * m * uR;
    dy[1] = I * (energy - V + ga) * dL + kr * uL - I * m * dR;
    dy[2] = I * (energy - V - ga) * uR + kr * dR - I * m * uL;
    dy[3] = -I * (energy - V + ga) * dR + kr * uR + I * m * dL;
    return dy;
}

Eigen::Vector2d radial_rhs_reduced(double energy, double r, const Eigen::Vector2d& y,
                                   const RadialProblem& prob)
{
    const double V = prob.potential(r);
    const double kr = prob.k / r;
    return Eigen::Vector2d(kr * y[0] - (energy - V + prob.m) * y[1],
                           (energy - V - prob.m) * y[0] - kr * y[1]);
}

std::vector<double> radial_mesh(const RadialProblem& prob)
{
    if (prob.r_min <= 0.0) throw DomainError("r_min must be positive");
    if (prob.aleph_mode == AlephMode::eq_4_18 && prob.m * prob.r_min <= 1.0)
        throw DomainError("axial profile needs m r_min > 1");
    std::vector<double> r(prob.n_nodes);
    if (prob.grading == MeshGrading::geometric) {
        const double ratio = std::pow(prob.r_max / prob.r_min,
                                      1.0 / (prob.n_nodes - 1));
        double x = prob.r_min;
        for (int i = 0; i < prob.n_nodes; ++i, x *= ratio) r[i] = x;
        r.back() = prob.r_max;
    } else {
        const double h = (prob.r_max - prob.r_min) / (prob.n_nodes - 1);
        for (int i = 0; i < prob.n_nodes; ++i) r[i] = prob.r_min + h * i;
    }
    return r;
}

namespace {

// One RK4 step of the reduced pair over [r0, r0+h].
inline Eigen::Vector2d rk4_reduced(const RadialProblem& prob, double energy, double r0,
                                   double h, Eigen::Vector2d y)
{
    Eigen::Vector2d k1 = radial_rhs_reduced(energy, r0, y, prob);
    Eigen::Vector2d k2 = radial_rhs_reduced(energy, r0 + 0.5 * h, y + 0.5 * h * k1, prob);
    Eigen::Vector2d k3 = radial_rhs_reduced(energy, r0 + 0.5 * h, y + 0.5 * h * k2, prob);
    Eigen::Vector2d k4 = radial_rhs_reduced(energy, r0 + h, y + h * k3, prob);
    return y + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
}

struct ReducedShot {
    std::vector<Eigen::Vector2d> out, in; // indexed on the mesh
    int i_match = 0;
    double defect = 0.0;
};

// Outward and inward marches on the mesh with renormalization, matched by
// the Wronskian at the node nearest the orbit scale.
ReducedShot march_reduced(const RadialProblem& prob, double energy,
                          const std::vector<double>& mesh)
{
    const int n = int(mesh.size());
    ReducedShot shot;
    shot.out.assign(n, Eigen::Vector2d::Zero());
    shot.in.assign(n, Eigen::Vector2d::Zero());

    const double gamma = std::sqrt(std::max(prob.k * prob.k
                                            - prob.Zalpha * prob.Zalpha, 1e-12));
    const double r_orbit = 1.0 / (prob.m * std::max(prob.Zalpha, 0.25));
    shot.i_match = int(std::lower_bound(mesh.begin(), mesh.end(),
                                        std::min(r_orbit, 0.5 * prob.r_max))
                       - mesh.begin());
    shot.i_match = std::min(std::max(shot.i_match, 2), n - 3);

    // regular branch of the indicial equation at the origin
    Eigen::Vector2d v(gamma + prob.k, prob.Zalpha);
    if (v.norm() < 1e-12) v = Eigen::Vector2d(1.0, 0.0);
    shot.out[0] = v.normalized();
    for (int i = 0; i + 1 <= shot.i_match; ++i) {
        shot.out[i + 1] = rk4_reduced(prob, energy, mesh[i], mesh[i + 1] - mesh[i],
                                      shot.out[i]);
        double s = shot.out[i + 1].norm();
        if (s > 1e100)
            for (int j = 0; j <= i + 1; ++j) shot.out[j] /= s;
    }

    const double lam = std::sqrt(std::max(prob.m * prob.m - energy * energy, 1e-14));
    Eigen::Vector2d w(1.0, lam / (energy + prob.m));
    shot.in[n - 1] = w.normalized();
    for (int i = n - 1; i - 1 >= shot.i_match; --i) {
        shot.in[i - 1] = rk4_reduced(prob, energy, mesh[i], mesh[i - 1] - mesh[i],
                                     shot.in[i]);
        double s = shot.in[i - 1].norm();
        if (s > 1e100)
            for (int j = i - 1; j < n; ++j) shot.in[j] /= s;
    }

    const Eigen::Vector2d& a = shot.out[shot.i_match];
    const Eigen::Vector2d& b = shot.in[shot.i_match];
    shot.defect = (a[0] * b[1] - a[1] * b[0]) / (a.norm() * b.norm() + 1e-300);
    if (!std::isfinite(shot.defect))
        throw StiffIntegration("non-finite matching defect");
    return shot;
}

// Adaptive step-doubling RK4 over one interval for the complex system.
State4 integrate_interval_full(const RadialProblem& prob, double energy, double r0,
                               double r1, State4 y, double& max_err)
{
    auto step = [&](State4 yy, double rr, double h) {
        State4 k1 = radial_rhs(energy, rr, yy, prob);
        State4 k2 = radial_rhs(energy, rr + 0.5 * h, yy + 0.5 * h * k1, prob);
        State4 k3 = radial_rhs(energy, rr + 0.5 * h, yy + 0.5 * h * k2, prob);
        State4 k4 = radial_rhs(energy, rr + h, yy + h * k3, prob);
        return State4(yy + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4));
    };
    double r = r0;
    double h = r1 - r0;
    int guard = 0;
    while ((r1 - r) * (r1 - r0) > 0.0 && std::abs(r1 - r) > 1e-15 * std::abs(r1)) {
        if (std::abs(h) > std::abs(r1 - r)) h = r1 - r;
        State4 full = step(y, r, h);
        State4 half = step(step(y, r, 0.5 * h), r + 0.5 * h, 0.5 * h);
        double err = (full - half).cwiseAbs().maxCoeff() / (half.cwiseAbs().maxCoeff()
                                                            + 1e-30);
        if (err < 1e-8) {
            y = half;
            r += h;
            max_err = std::max(max_err, err);
            if (err < 1e-10) h *= 2.0;
        } else {
            h *= 0.5;
            if (++guard > 60) throw StiffIntegration("step control failed");
        }
    }
    return y;
}

struct FullShot {
    Eigen::Matrix<Complex, 4, 4> columns; // two outward, two inward at match
    double defect = 0.0;
    double max_err = 0.0;
};

FullShot march_full(const RadialProblem& prob, double energy,
                    const std::vector<double>& mesh)
{
    const int n = int(mesh.size());
    const int i_match = n / 2;
    FullShot shot;

    auto freeze = [&](double r) {
        Eigen::Matrix4cd M;
        for (int j = 0; j < 4; ++j) {
            State4 e = State4::Zero();
            e[j] = 1.0;
            M.col(j) = radial_rhs(energy, r, e, prob);
        }
        return M;
    };
    // boundary subspaces by the frozen-coefficient spectra
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es_in(freeze(mesh.front()));
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es_out(freeze(mesh.back()));
    std::array<int, 4> idx{0, 1, 2, 3};
    auto order_by_real = [](const Eigen::Vector4cd& ev, std::array<int, 4>& ii,
                            bool descending) {
        std::sort(ii.begin(), ii.end(), [&](int a, int b) {
            return descending ? ev[a].real() > ev[b].real()
                              : ev[a].real() < ev[b].real();
        });
    };
    order_by_real(es_in.eigenvalues(), idx, true); // growing outward = bounded inward
    std::array<State4, 2> y_out{es_in.eigenvectors().col(idx[0]),
                                es_in.eigenvectors().col(idx[1])};
    order_by_real(es_out.eigenvalues(), idx, false); // decaying outward
    std::array<State4, 2> y_in{es_out.eigenvectors().col(idx[0]),
                               es_out.eigenvectors().col(idx[1])};

    for (int c = 0; c < 2; ++c) {
        for (int i = 0; i + 1 <= i_match; ++i) {
            y_out[c] = integrate_interval_full(prob, energy, mesh[i], mesh[i + 1],
                                               y_out[c], shot.max_err);
            double s = y_out[c].cwiseAbs().maxCoeff();
            if (s > 1e100) y_out[c] /= s;
        }
        for (int i = n - 1; i - 1 >= i_match; --i) {
            y_in[c] = integrate_interval_full(prob, energy, mesh[i], mesh[i - 1],
                                              y_in[c], shot.max_err);
            double s = y_in[c].cwiseAbs().maxCoeff();
            if (s > 1e100) y_in[c] /= s;
        }
        shot.columns.col(c) = y_out[c] / (y_out[c].norm() + 1e-300);
        shot.columns.col(2 + c) = y_in[c] / (y_in[c].norm() + 1e-300);
    }
    shot.defect = std::abs(shot.columns.determinant());
    return shot;
}

RadialProfile assemble_reduced_profile(const RadialProblem& prob, double energy,
                                       const std::vector<double>& mesh)
{
    ReducedShot shot = march_reduced(prob, energy, mesh);
    const int n = int(mesh.size());
    // scale the inward branch onto the outward one at the matching node
    const Eigen::Vector2d& a = shot.out[shot.i_match];
    const Eigen::Vector2d& b = shot.in[shot.i_match];
    double scale = (b.squaredNorm() > 0.0) ? a.dot(b) / b.squaredNorm() : 0.0;

    RadialProfile prof;
    prof.r = mesh;
    prof.energy = energy;
    prof.matching_defect = shot.defect;
    prof.uL.resize(n);
    prof.dL.resize(n);
    prof.uR.resize(n);
    prof.dR.resize(n);
    double norm2 = 0.0;
    std::vector<double> dens(n);
    for (int i = 0; i < n; ++i) {
        Eigen::Vector2d ab = (i <= shot.i_match) ? shot.out[i]
                                                 : Eigen::Vector2d(scale * shot.in[i]);
        Complex F = 0.5 * Complex(ab[0], -ab[1]); // uL = dR
        Complex G = 0.5 * Complex(ab[0], ab[1]);  // uR = dL
        prof.uL[i] = F;
        prof.dR[i] = F;
        prof.uR[i] = G;
        prof.dL[i] = G;
        dens[i] = std::norm(F) * 2.0 + std::norm(G) * 2.0;
    }
    for (int i = 0; i + 1 < n; ++i)
        norm2 += 0.5 * (dens[i] + dens[i + 1]) * (mesh[i + 1] - mesh[i]);
    const double s = 1.0 / std::sqrt(norm2 + 1e-300);
    for (int i = 0; i < n; ++i) {
        prof.uL[i] *= s;
        prof.dL[i] *= s;
        prof.uR[i] *= s;
        prof.dR[i] *= s;
    }
    prof.norm = 1.0;
    return prof;
}

} // namespace

double matching_defect(const RadialProblem& prob, double energy)
{
    auto mesh = radial_mesh(prob);
    if (prob.aleph_mode == AlephMode::off)
        return march_reduced(prob, energy, mesh).defect;
    return march_full(prob, energy, mesh).defect;
}

std::vector<ScanPoint> spectrum_scan(const RadialProblem& prob, double e_lo,
                                     double e_hi, int n_energies)
{
    std::vector<ScanPoint> pts;
    if (n_energies < 2) return pts;
    auto mesh = radial_mesh(prob);
    for (int i = 0; i < n_energies; ++i) {
        double e = e_lo + (e_hi - e_lo) * i / (n_energies - 1);
        double d = (prob.aleph_mode == AlephMode::off)
                       ? march_reduced(prob, e, mesh).defect
                       : march_full(prob, e, mesh).defect;
        pts.push_back({e, d});
    }
    return pts;
}

RadialProfile shoot_bound_state(const RadialProblem& prob, double e_lo, double e_hi)
{
    auto mesh = radial_mesh(prob);

    if (prob.aleph_mode != AlephMode::off) {
        // |det| dip search: scan, then golden-section refine around the
        // smallest defect; existence is reported through the defect value
        const int coarse = 48;
        double best_e = e_lo, best_d = 1e300;
        for (int i = 0; i <= coarse; ++i) {
            double e = e_lo + (e_hi - e_lo) * i / coarse;
            FullShot s = march_full(prob, e, mesh);
            if (s.defect < best_d) {
                best_d = s.defect;
                best_e = e;
            }
        }
        double lo = std::max(e_lo, best_e - (e_hi - e_lo) / coarse);
        double hi = std::min(e_hi, best_e + (e_hi - e_lo) / coarse);
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = lo, b = hi;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        double fc = march_full(prob, c, mesh).defect;
        double fd = march_full(prob, d, mesh).defect;
        int iters = 0;
        while (std::abs(b - a) > 1e-10 * prob.m && ++iters < 200) {
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - gr * (b - a);
                fc = march_full(prob, c, mesh).defect;
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + gr * (b - a);
                fd = march_full(prob, d, mesh).defect;
            }
        }
        double e_star = 0.5 * (a + b);
        FullShot s = march_full(prob, e_star, mesh);
        // matched combination from the near-null direction of the four
        // boundary solutions at the midpoint
        Eigen::JacobiSVD<Eigen::Matrix4cd> svd(s.columns, Eigen::ComputeFullV);
        Eigen::Vector4cd null = svd.matrixV().col(3);

        RadialProfile prof;
        prof.r = mesh;
        prof.energy = e_star;
        prof.matching_defect = s.defect;
        prof.bisections = iters;
        const int n = int(mesh.size());
        const int i_match = n / 2;
        prof.uL.assign(n, 0.0);
        prof.dL.assign(n, 0.0);
        prof.uR.assign(n, 0.0);
        prof.dR.assign(n, 0.0);

        auto store = [&](int i, const State4& y) {
            prof.uL[i] = y[0];
            prof.dL[i] = y[1];
            prof.uR[i] = y[2];
            prof.dR[i] = y[3];
        };
        auto boundary_basis = [&](double r, bool descending) {
            Eigen::Matrix4cd M;
            for (int j = 0; j < 4; ++j) {
                State4 e = State4::Zero();
                e[j] = 1.0;
                M.col(j) = radial_rhs(e_star, r, e, prob);
            }
            Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(M);
            std::array<int, 4> idx{0, 1, 2, 3};
            std::sort(idx.begin(), idx.end(), [&](int A, int B) {
                return descending ? es.eigenvalues()[A].real() > es.eigenvalues()[B].real()
                                  : es.eigenvalues()[A].real() < es.eigenvalues()[B].real();
            });
            return std::array<State4, 2>{es.eigenvectors().col(idx[0]),
                                         es.eigenvectors().col(idx[1])};
        };

        double max_err = 0.0;
        auto bo = boundary_basis(mesh.front(), true);
        State4 yo = null[0] * bo[0] + null[1] * bo[1];
        store(0, yo);
        for (int i = 0; i + 1 <= i_match; ++i) {
            yo = integrate_interval_full(prob, e_star, mesh[i], mesh[i + 1], yo, max_err);
            store(i + 1, yo);
        }
        auto bi = boundary_basis(mesh.back(), false);
        State4 yi = -(null[2] * bi[0] + null[3] * bi[1]);
        store(n - 1, yi);
        for (int i = n - 1; i - 1 > i_match; --i) {
            yi = integrate_interval_full(prob, e_star, mesh[i], mesh[i - 1], yi, max_err);
            store(i - 1, yi);
        }
        prof.max_local_error = max_err;

        double norm2 = 0.0;
        for (int i = 0; i + 1 < n; ++i) {
            double di = std::norm(prof.uL[i]) + std::norm(prof.dL[i])
                        + std::norm(prof.uR[i]) + std::norm(prof.dR[i]);
            double dj = std::norm(prof.uL[i + 1]) + std::norm(prof.dL[i + 1])
                        + std::norm(prof.uR[i + 1]) + std::norm(prof.dR[i + 1]);
            norm2 += 0.5 * (di + dj) * (mesh[i + 1] - mesh[i]);
        }
        double sc = 1.0 / std::sqrt(norm2 + 1e-300);
        for (int i = 0; i < n; ++i) {
            prof.uL[i] *= sc;
            prof.dL[i] *= sc;
            prof.uR[i] *= sc;
            prof.dR[i] *= sc;
        }
        return prof;
    }

    double flo = march_reduced(prob, e_lo, mesh).defect;
    double fhi = march_reduced(prob, e_hi, mesh).defect;
    if (flo * fhi > 0.0)
        throw NoSignChange("matching defect has equal signs at the bracket ends");
    int iters = 0;
    double a = e_lo, b = e_hi, fa = flo, fb = fhi;
    while (b - a > 1e-10 * prob.m && ++iters < 200) {
        double mid = 0.5 * (a + b);
        double fm = march_reduced(prob, mid, mesh).defect;
        if (fa * fm <= 0.0) {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
    }
    // secant polish inside the final bracket
    double e_star = 0.5 * (a + b);
    if (fb != fa) {
        double cand = a - fa * (b - a) / (fb - fa);
        if (cand > a && cand < b) e_star = cand;
    }
    RadialProfile prof = assemble_reduced_profile(prob, e_star, mesh);
    prof.bisections = iters;
    return prof;
}

double constrained_reduction_residual(const RadialProblem& prob,
                                      const RadialProfile& prof)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < prof.r.size(); ++i) {
        State4 y;
        y << prof.uL[i], prof.dL[i], prof.uR[i], prof.dR[i];
        // enforce the two-function ansatz
        State4 yc;
        yc << y[0], y[2], y[2], y[0];
        State4 dy = radial_rhs(prof.energy, prof.r[i], yc, prob);
        // consistency of the ansatz under the flow: rows (uL, dR) and
        // (dL, uR) must stay locked
        worst = std::max(worst, std::abs(dy[0] - dy[3]));
        worst = std::max(worst, std::abs(dy[1] - dy[2]));
    }
    return worst;
}

double radial_flux(const RadialProfile& prof)
{
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < prof.r.size(); ++i) {
        auto flux = [&](std::size_t j) {
            return std::norm(prof.uL[j]) - std::norm(prof.dL[j]) - std::norm(prof.uR[j])
                   + std::norm(prof.dR[j]);
        };
        total += 0.5 * (flux(i) + flux(i + 1)) * (prof.r[i + 1] - prof.r[i]);
    }
    return total;
}

} // namespace dgeo
