#include "diracgeo/evolve.hpp"

#include <cmath>

#include "diracgeo/manufactured.hpp"

namespace dgeo {

Spinor vacuum_spinor()
{
    Spinor u;
    u << 0.5, 0.5, 0.5, 0.5; // rho1 eigenspinor, psi^dag psi = 1 exactly
    return u;
}

namespace {

inline double density_of(const Spinor& s)
{
    return std::norm(s[0]) + std::norm(s[1]) + std::norm(s[2]) + std::norm(s[3]);
}

// -i a^3 d_x + m rho1 applied with periodic central differences, scaled by
// 1/R per node; writes into out.
void apply_operator(const std::vector<Spinor>& xi, const std::vector<double>& R,
                    const Evolution1p1Config& cfg, std::vector<Spinor>& out)
{
    const int n = cfg.N;
    const double inv2h = 0.5 / cfg.dx();
    const auto& d = dirac();
    const Mat4c a3 = d.alpha[3];
    const Mat4c r1 = d.rho1();
    for (int i = 0; i < n; ++i) {
        const Spinor& prev = xi[(i + n - 1) % n];
        const Spinor& next = xi[(i + 1) % n];
        Spinor dxs = (next - prev) * inv2h;
        Spinor h = -I * (a3 * dxs) + cfg.m * (r1 * xi[i]);
        out[i] = (-I / R[i]) * h;
    }
}

} // namespace

EvolutionState initialize(const Evolution1p1Config& cfg)
{
    if (cfg.N < 64) throw ConfigError("need at least 64 nodes");
    if (cfg.step_dt() > cfg.dx() + 1e-15)
        throw ConfigError("time step violates the unit-light-speed limit");

    EvolutionState st;
    st.psi.resize(cfg.N);
    st.R.assign(cfg.N, 1.0);
    const Spinor uvac = vacuum_spinor();
    Spinor up;
    if (cfg.packet_orthogonal_spin) {
        // tau1-down partner of the vacuum polarization
        Eigen::Vector2cd xi(0.5, -0.5);
        if (cfg.m > 0.0) {
            const double en = std::sqrt(cfg.packet_momentum * cfg.packet_momentum
                                        + cfg.m * cfg.m);
            const Mat2c tau3 = dirac().sig(3).block<2, 2>(0, 0);
            Eigen::Vector2cd lower =
                ((en * Mat2c::Identity() - cfg.packet_momentum * tau3) * xi) / cfg.m;
            up << xi[0], xi[1], lower[0], lower[1];
            up /= up.norm();
        } else {
            up << 0.5, -0.5, 0.5, -0.5;
        }
    } else {
        up = cfg.m > 0.0 ? plane_wave_amplitude(cfg.m, cfg.packet_momentum) : uvac;
    }
    for (int i = 0; i < cfg.N; ++i) {
        const double x = i * cfg.dx();
        double bg = cfg.background;
        if (cfg.bump_amplitude != 0.0) {
            const double dxb = x - cfg.bump_center;
            bg += cfg.bump_amplitude * std::exp(-dxb * dxb
                                                / (cfg.bump_width * cfg.bump_width));
        }
        Spinor s = std::sqrt(bg) * uvac;
        if (cfg.packet_amplitude != 0.0) {
            const double dxp = x - cfg.packet_center;
            const double env = cfg.packet_amplitude
                               * std::exp(-dxp * dxp
                                          / (2.0 * cfg.packet_width * cfg.packet_width));
            s += env * std::exp(I * cfg.packet_momentum * x) * up;
        }
        st.psi[i] = s;
    }

    // settle the density by fixed point (one pass closes it exactly; the
    // loop guards the contract)
    double residual = 1e300;
    for (int pass = 0; pass < 50; ++pass) {
        residual = 0.0;
        for (int i = 0; i < cfg.N; ++i) {
            double rnew = cfg.nonlinear ? density_of(st.psi[i]) : 1.0;
            residual = std::max(residual, std::abs(rnew - st.R[i]));
            st.R[i] = rnew;
        }
        if (residual < 1e-10) break;
    }
    if (residual >= 1e-10)
        throw FixedPointDivergence("density pass did not settle");

    for (const Spinor& s : st.psi)
        st.initial_peak = std::max(st.initial_peak, s.cwiseAbs().maxCoeff());
    return st;
}

bool step(EvolutionState& st, const Evolution1p1Config& cfg)
{
    if (st.status == EvolveStatus::caustic) return false;
    const int n = cfg.N;
    const double h = cfg.step_dt();

    // xi = psi / sqrt(R_lag)
    static thread_local std::vector<Spinor> xi, k1, k2, k3, k4, tmp;
    xi.resize(n);
    k1.resize(n);
    k2.resize(n);
    k3.resize(n);
    k4.resize(n);
    tmp.resize(n);
    for (int i = 0; i < n; ++i) xi[i] = st.psi[i] / std::sqrt(st.R[i]);

    apply_operator(xi, st.R, cfg, k1);
    for (int i = 0; i < n; ++i) tmp[i] = xi[i] + 0.5 * h * k1[i];
    apply_operator(tmp, st.R, cfg, k2);
    for (int i = 0; i < n; ++i) tmp[i] = xi[i] + 0.5 * h * k2[i];
    apply_operator(tmp, st.R, cfg, k3);
    for (int i = 0; i < n; ++i) tmp[i] = xi[i] + h * k3[i];
    apply_operator(tmp, st.R, cfg, k4);
    for (int i = 0; i < n; ++i) {
        xi[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        st.psi[i] = std::sqrt(st.R[i]) * xi[i];
    }
    st.t += h;
    ++st.step_count;

    if (cfg.nonlinear)
        for (int i = 0; i < n; ++i) st.R[i] = density_of(st.psi[i]);

    double peak = 0.0;
    for (const Spinor& s : st.psi) peak = std::max(peak, s.cwiseAbs().maxCoeff());
    if (!std::isfinite(peak) || peak > 1e6 * std::max(st.initial_peak, 1e-30)) {
        st.status = EvolveStatus::caustic;
        st.stop_time = st.t;
        return false;
    }
    return true;
}

double packet_centroid(const EvolutionState& st, const Evolution1p1Config& cfg)
{
    double tot = 0.0, first = 0.0;
    for (int i = 0; i < cfg.N; ++i) {
        const Complex a = 0.5 * (st.psi[i][0] - st.psi[i][1]);
        const Complex b = 0.5 * (st.psi[i][2] - st.psi[i][3]);
        const double rho = 2.0 * (std::norm(a) + std::norm(b));
        tot += rho;
        first += i * cfg.dx() * rho;
    }
    return tot > 0.0 ? first / tot : 0.5 * cfg.L;
}

Diagnostics diagnostics(const EvolutionState& st, const Evolution1p1Config& cfg)
{
    Diagnostics d;
    d.t = st.t;
    const double dx = cfg.dx();
    double total = 0.0, first = 0.0, second = 0.0, peak = 0.0;
    for (int i = 0; i < cfg.N; ++i) {
        const double rho = density_of(st.psi[i]);
        const double x = i * dx;
        total += rho;
        first += x * rho;
        second += x * x * rho;
        peak = std::max(peak, rho);
    }
    d.total = total * dx;
    d.centroid = first / total;
    d.width = std::sqrt(std::max(second / total - d.centroid * d.centroid, 0.0));
    d.max_density = peak;
    return d;
}

std::vector<Diagnostics> run(const Evolution1p1Config& cfg, int n_steps, int every)
{
    EvolutionState st = initialize(cfg);
    std::vector<Diagnostics> out;
    out.push_back(diagnostics(st, cfg));
    for (int s = 1; s <= n_steps; ++s) {
        if (!step(st, cfg)) break;
        if (s % every == 0 || s == n_steps) out.push_back(diagnostics(st, cfg));
    }
    if (st.status == EvolveStatus::caustic) {
        Diagnostics d = diagnostics(st, cfg);
        out.push_back(d);
    }
    return out;
}

} // namespace dgeo
