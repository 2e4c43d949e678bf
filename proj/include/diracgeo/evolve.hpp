#ifndef DIRACGEO_EVOLVE_HPP
#define DIRACGEO_EVOLVE_HPP

#include <vector>

#include "diracgeo/dirac_algebra.hpp"

namespace dgeo {

/// 1+1d reduction of the density-weighted Dirac equation on a periodic line:
/// i R d_t xi = (-i a^3 d_x + m rho1) xi with psi = sqrt(R) xi and R
/// recomputed from psi each step (lagged one step); the linear control pins
/// R = 1.
struct Evolution1p1Config {
    double L = 80.0;
    int N = 1024;
    double dt = 0.0; // default 0.5 dx when zero
    double m = 1.0;
    bool nonlinear = true;

    // initial data: moving packet plus an optional resting density bump on a
    // uniform vacuum background
    double background = 1.0;      // vacuum invariant density
    double packet_amplitude = 0.4;
    double packet_center = 30.0;
    double packet_width = 4.0;
    double packet_momentum = 0.0;
    // carry the packet in the spin channel orthogonal to the vacuum so its
    // density does not interfere with the background
    bool packet_orthogonal_spin = false;
    double bump_amplitude = 0.0;
    double bump_center = 50.0;
    double bump_width = 6.0;

    double dx() const { return L / N; }
    double step_dt() const { return dt > 0.0 ? dt : 0.5 * dx(); }
};

enum class EvolveStatus { ok, caustic };

struct Diagnostics {
    double t = 0.0;
    double total = 0.0;    // integral of j^0
    double centroid = 0.0; // first moment of j^0
    double width = 0.0;
    double max_density = 0.0;
};

struct EvolutionState {
    std::vector<Spinor> psi;
    std::vector<double> R; // density used by the time factor (lagged)
    double t = 0.0;
    long step_count = 0;
    EvolveStatus status = EvolveStatus::ok;
    double stop_time = -1.0;  // set when a caustic ends the run
    double initial_peak = 0.0;
};

/// Build the initial state; the density field is settled by a (trivially
/// converging) fixed-point pass and verified to 1e-10.
/// Throws FixedPointDivergence if the pass fails to settle.
EvolutionState initialize(const Evolution1p1Config& cfg);

/// One RK4 step; refreshes R from psi afterwards in nonlinear mode.
/// Returns false once a caustic stop is latched.
bool step(EvolutionState& st, const Evolution1p1Config& cfg);

Diagnostics diagnostics(const EvolutionState& st, const Evolution1p1Config& cfg);

/// March n_steps (or until a caustic), sampling diagnostics every `every`.
std::vector<Diagnostics> run(const Evolution1p1Config& cfg, int n_steps,
                             int every = 10);

/// Rest vacuum spinor of unit density (exact in floating point).
Spinor vacuum_spinor();

/// Centroid of the density carried by the spin channel orthogonal to the
/// vacuum polarization; tracks an orthogonal-spin packet through the
/// background.
double packet_centroid(const EvolutionState& st, const Evolution1p1Config& cfg);

} // namespace dgeo

#endif
