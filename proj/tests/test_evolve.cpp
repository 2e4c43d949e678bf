#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diracgeo/evolve.hpp"
#include "diracgeo/manufactured.hpp"

using namespace dgeo;

TEST_CASE("configuration guards")
{
    Evolution1p1Config bad;
    bad.N = 32;
    CHECK_THROWS_AS(initialize(bad), ConfigError);
    bad.N = 128;
    bad.dt = 2.0 * bad.dx();
    CHECK_THROWS_AS(initialize(bad), ConfigError);
}

TEST_CASE("initialization settles the density field")
{
    Evolution1p1Config cfg;
    cfg.L = 40.0;
    cfg.N = 256;
    cfg.packet_amplitude = 0.5;
    cfg.packet_center = 20.0;
    cfg.bump_amplitude = 0.4;
    cfg.bump_center = 28.0;
    EvolutionState st = initialize(cfg);
    for (int i = 0; i < cfg.N; ++i) {
        double rho = 0.0;
        for (int c = 0; c < 4; ++c) rho += std::norm(st.psi[i][c]);
        CHECK(std::abs(st.R[i] - rho) < 1e-10);
    }
}

TEST_CASE("linear carrier wave keeps a uniform modulus")
{
    Evolution1p1Config cfg;
    cfg.L = 40.0;
    cfg.N = 256;
    cfg.m = 1.0;
    cfg.nonlinear = false;
    cfg.background = 0.0;
    cfg.packet_amplitude = 0.0;
    EvolutionState st = initialize(cfg);
    const double p = 2.0 * M_PI * 8 / cfg.L; // fits the periodic grid
    Spinor u = plane_wave_amplitude(cfg.m, p);
    for (int i = 0; i < cfg.N; ++i)
        st.psi[i] = std::exp(I * p * (i * cfg.dx())) * u;
    st.initial_peak = 1.0;
    for (int s = 0; s < 200; ++s) step(st, cfg);
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i < cfg.N; ++i) {
        double rho = 0.0;
        for (int c = 0; c < 4; ++c) rho += std::norm(st.psi[i][c]);
        lo = std::min(lo, rho);
        hi = std::max(hi, rho);
    }
    CHECK(hi - lo < 1e-10);
}

TEST_CASE("vacuum equivalence of the nonlinear mode")
{
    SUBCASE("massless uniform vacuum evolves bit-identically to the control")
    {
        Evolution1p1Config lin;
        lin.L = 40.0;
        lin.N = 128;
        lin.m = 0.0;
        lin.nonlinear = false;
        lin.background = 1.0;
        lin.packet_amplitude = 0.0;
        Evolution1p1Config non = lin;
        non.nonlinear = true;
        EvolutionState a = initialize(lin), b = initialize(non);
        for (int s = 0; s < 300; ++s) {
            step(a, lin);
            step(b, non);
        }
        for (int i = 0; i < lin.N; ++i)
            for (int c = 0; c < 4; ++c) {
                CHECK(a.psi[i][c].real() == b.psi[i][c].real());
                CHECK(a.psi[i][c].imag() == b.psi[i][c].imag());
            }
        for (int i = 0; i < lin.N; ++i) CHECK(b.R[i] == 1.0);
    }
    SUBCASE("massive rest vacuum stays within the closure drift")
    {
        Evolution1p1Config lin;
        lin.L = 40.0;
        lin.N = 256;
        lin.m = 0.8;
        lin.nonlinear = false;
        lin.background = 1.0;
        lin.packet_amplitude = 0.0;
        Evolution1p1Config non = lin;
        non.nonlinear = true;
        EvolutionState a = initialize(lin), b = initialize(non);
        double worst = 0.0;
        for (int s = 0; s < 1000; ++s) {
            step(a, lin);
            step(b, non);
            for (int i = 0; i < lin.N; ++i)
                worst = std::max(worst, (a.psi[i] - b.psi[i]).norm());
        }
        CHECK(worst < 1e-4); // lagged-density closure error, documented
    }
}

TEST_CASE("linear control conserves the total density integral")
{
    Evolution1p1Config cfg;
    cfg.L = 100.0;
    cfg.N = 2048;
    cfg.m = 0.5;
    cfg.nonlinear = false;
    cfg.background = 0.0;
    cfg.packet_amplitude = 1.0;
    cfg.packet_center = 50.0;
    cfg.packet_width = 4.0;
    cfg.packet_momentum = 0.5;
    EvolutionState st = initialize(cfg);
    double t0 = diagnostics(st, cfg).total;
    for (int s = 0; s < 1000; ++s) step(st, cfg);
    double t1 = diagnostics(st, cfg).total;
    CHECK(std::abs(t1 - t0) / t0 < 1e-8);
}

TEST_CASE("zero field stays zero")
{
    Evolution1p1Config cfg;
    cfg.L = 40.0;
    cfg.N = 128;
    cfg.nonlinear = false;
    cfg.background = 0.0;
    cfg.packet_amplitude = 0.0;
    EvolutionState st = initialize(cfg);
    for (int s = 0; s < 50; ++s) step(st, cfg);
    for (const Spinor& s : st.psi) CHECK(s.norm() == 0.0);
}

TEST_CASE("packet group velocity matches p/E")
{
    // positive-energy projected packet: superpose exact grid modes
    Evolution1p1Config cfg;
    cfg.L = 200.0;
    cfg.N = 4096;
    cfg.m = 1.0;
    cfg.nonlinear = false;
    cfg.background = 0.0;
    cfg.packet_amplitude = 0.0;
    EvolutionState st = initialize(cfg);
    const double p = 0.5, sigma = 12.0, x0 = 60.0;
    const int jc = int(std::round(p * cfg.L / (2.0 * M_PI)));
    for (int j = jc - 24; j <= jc + 24; ++j) {
        const double k = 2.0 * M_PI * j / cfg.L;
        const double amp = std::exp(-0.5 * sigma * sigma * (k - p) * (k - p));
        if (amp < 1e-10) continue;
        Spinor u = plane_wave_amplitude(cfg.m, k);
        for (int i = 0; i < cfg.N; ++i) {
            const double x = i * cfg.dx();
            st.psi[i] += amp * std::exp(I * k * (x - x0)) * u;
        }
    }
    st.initial_peak = 1.0;
    Diagnostics d0 = diagnostics(st, cfg);
    for (int s = 0; s < 800; ++s) step(st, cfg);
    Diagnostics d1 = diagnostics(st, cfg);
    const double vg = (d1.centroid - d0.centroid) / (d1.t - d0.t);
    const double expect = p / std::sqrt(p * p + cfg.m * cfg.m);
    CHECK(std::abs(vg - expect) / expect < 0.01);
}

TEST_CASE("symmetric nonlinear data keeps its packet centroid")
{
    // orthogonal-spin packet: its channel centroid reads the packet alone
    Evolution1p1Config cfg;
    cfg.L = 60.0;
    cfg.N = 768;
    cfg.m = 1.0;
    cfg.nonlinear = true;
    cfg.background = 1.0;
    cfg.packet_orthogonal_spin = true;
    cfg.packet_amplitude = 0.35;
    cfg.packet_center = 30.0; // center of the domain
    cfg.packet_width = 3.0;
    cfg.packet_momentum = 0.0;
    EvolutionState st = initialize(cfg);
    double c0 = packet_centroid(st, cfg);
    CHECK(c0 == doctest::Approx(30.0).epsilon(1e-12));
    for (int s = 0; s < 130 && step(st, cfg); ++s) {}
    CHECK(std::abs(packet_centroid(st, cfg) - c0) < 1e-10);
}

TEST_CASE("refraction: packet drifts toward the high-density region")
{
    std::mt19937_64 rng(20260808);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int toward = 0;
    const int n_seeds = 10;
    for (int seed = 0; seed < n_seeds; ++seed) {
        Evolution1p1Config c;
        c.L = 80.0;
        c.N = 1024;
        c.m = 1.0;
        c.nonlinear = true;
        c.background = 1.0;
        c.packet_orthogonal_spin = true;
        c.packet_amplitude = 0.35 + 0.05 * u(rng);
        c.packet_center = 40.0 + 1.5 * u(rng);
        c.packet_width = 3.0 + 0.4 * u(rng);
        c.packet_momentum = 0.0;
        c.bump_amplitude = 0.5;
        c.bump_center = 46.0;
        c.bump_width = 6.0;
        EvolutionState st = initialize(c);
        double c0 = packet_centroid(st, c);
        for (int s = 0; s < 130 && step(st, c); ++s) {}
        if (packet_centroid(st, c) - c0 > 0.0) ++toward;
    }
    CHECK(toward == n_seeds);
}

TEST_CASE("stronger packets localize sooner")
{
    auto localization_time = [](double amp) {
        Evolution1p1Config c;
        c.L = 60.0;
        c.N = 768;
        c.m = 1.0;
        c.nonlinear = true;
        c.background = 1.0;
        c.packet_amplitude = amp;
        c.packet_center = 30.0;
        c.packet_width = 3.0;
        EvolutionState st = initialize(c);
        const double start = diagnostics(st, c).max_density;
        for (int s = 0; s < 3000 && step(st, c); ++s)
            if (diagnostics(st, c).max_density > 1.6 * start) return st.t;
        return 1e9;
    };
    double t1 = localization_time(1.5);
    double t2 = localization_time(2.0);
    double t3 = localization_time(2.5);
    CHECK(t1 < 1e9);
    CHECK(t1 > t2);
    CHECK(t2 > t3);
}

TEST_CASE("caustic stop is a typed status, not a crash")
{
    Evolution1p1Config cfg;
    cfg.L = 40.0;
    cfg.N = 256;
    cfg.m = 1.0;
    cfg.nonlinear = true;
    cfg.background = 0.0; // empty floor: the time factor is singular outside
    cfg.packet_amplitude = 5.0;
    cfg.packet_center = 20.0;
    cfg.packet_width = 1.5;
    EvolutionState st = initialize(cfg);
    bool stopped = false;
    for (int s = 0; s < 4000; ++s)
        if (!step(st, cfg)) {
            stopped = true;
            break;
        }
    CHECK(stopped);
    CHECK(st.status == EvolveStatus::caustic);
    CHECK(st.stop_time > 0.0);

    // run() reports the stop instead of throwing
    auto series = run(cfg, 4000, 50);
    CHECK(!series.empty());
}
