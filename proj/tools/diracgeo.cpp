// Command-line driver: identity verification campaigns, tetrad/curvature
// computation on stored fields, radial bound-state solves, and 1+1d
// evolution runs. Outputs are CSV arrays plus JSON metadata, all carrying
// the manifest hash of the run.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "diracgeo/evolve.hpp"
#include "diracgeo/io.hpp"
#include "diracgeo/lorentz.hpp"
#include "diracgeo/manufactured.hpp"
#include "diracgeo/radial.hpp"

using namespace dgeo;
namespace fs = std::filesystem;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    unsigned long seed = 20260808;
    double tol_scale = 1.0;
    bool corrupt_matrices = false; // test hook
};

Spinor random_spinor(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Spinor psi;
    for (int i = 0; i < 4; ++i) psi[i] = Complex(u(rng), u(rng));
    return psi;
}

Mat2c random_unimodular(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Mat2c m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = Complex(u(rng), u(rng));
        Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (std::abs(det) < 0.5) continue;
        return m / std::sqrt(det);
    }
}

int suite_algebraic(const CommonArgs& args, const Config& cfg, ResidualReport& rep)
{
    std::mt19937_64 rng(args.seed);
    const int trials = cfg.get_int("spinor_trials", 10000);

    // table validation through a local copy (fault-injection hook point)
    DiracMatrices table = dirac();
    if (args.corrupt_matrices) table.alpha[3](0, 0) = -table.alpha[3](0, 0);
    double table_residual = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Mat4c lhs = table.alpha[a] * table.rho1() * table.alpha[b]
                        + table.alpha[b] * table.rho1() * table.alpha[a]
                        - 2.0 * ((a == b) ? eta(a) : 0.0) * table.rho1();
            table_residual = std::max(table_residual, lhs.cwiseAbs().maxCoeff());
        }
    rep.absorb("dirac_anticommutator", table_residual, 0, 1.0);

    for (int t = 0; t < trials; ++t) {
        Spinor psi = random_spinor(rng);
        BilinearSet b = bilinears(psi);
        InvariantReport ir = invariant_report(b);
        rep.absorb("invariant_identities", ir.max(), std::size_t(t), b.R * b.R + 1.0);
        rep.absorb("current_causality",
                   std::max(0.0, b.j.tail<3>().norm() - b.j[0]), std::size_t(t), 1.0);
        Mat4 Md = dual(b.M);
        double mm = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int c = 0; c < 4; ++c) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k)
                    s += b.M(a, k) * eta(k) * eta(c) * Md(k, c);
                mm = std::max(mm, std::abs(s - (a == c ? b.L.dot(b.K) : 0.0)));
            }
        rep.absorb("skew_tensor_dual_product", mm, std::size_t(t), 1.0);
    }
    const double tol = 1e-12 * args.tol_scale;
    bool ok = rep.max_abs("invariant_identities") < tol
              && rep.max_abs("skew_tensor_dual_product") < tol
              && rep.max_abs("current_causality") < tol
              && rep.max_abs("dirac_anticommutator") < tol;
    return ok ? 0 : 1;
}

int suite_transformation(const CommonArgs& args, const Config& cfg, ResidualReport& rep)
{
    std::mt19937_64 rng(args.seed + 1);
    const int trials = cfg.get_int("map_trials", 10000);
    const Mat4 etam = eta_matrix();
    for (int t = 0; t < trials; ++t) {
        SpinTransform s = spin_transform(random_unimodular(rng));
        Mat4 L = induced_lorentz(s).Lambda;
        rep.absorb("lorentz_orthogonality",
                   (L.transpose() * etam * L - etam).cwiseAbs().maxCoeff(),
                   std::size_t(t), 1.0);
        TensorLawReport tl = verify_tensor_law(random_spinor(rng), s);
        rep.absorb("tensor_law", std::max({tl.r_vector, tl.r_axial, tl.r_tensor}),
                   std::size_t(t), 1.0);
        rep.absorb("scalar_invariance",
                   std::max({tl.r_scalar, tl.r_density, tl.r_chiral}), std::size_t(t),
                   1.0);
    }
    // closed-form special cases
    double closed = 0.0;
    for (double phi : {0.37, 1.2, 2.6}) {
        Mat4 L = induced_lorentz(rotation(3, phi)).Lambda;
        Mat4 expect = Mat4::Identity();
        expect(1, 1) = std::cos(phi);
        expect(1, 2) = -std::sin(phi);
        expect(2, 1) = std::sin(phi);
        expect(2, 2) = std::cos(phi);
        closed = std::max(closed, (L - expect).cwiseAbs().maxCoeff());
        Mat4 B = induced_lorentz(boost(3, phi)).Lambda;
        Mat4 eb = Mat4::Identity();
        eb(0, 0) = eb(3, 3) = std::cosh(phi);
        eb(0, 3) = eb(3, 0) = -std::sinh(phi);
        closed = std::max(closed, (B - eb).cwiseAbs().maxCoeff());
    }
    rep.absorb("closed_form_blocks", closed, 0, 1.0);

    bool ok = rep.max_abs("lorentz_orthogonality") < 1e-10 * args.tol_scale
              && rep.max_abs("tensor_law") < 1e-10 * args.tol_scale
              && rep.max_abs("scalar_invariance") < 1e-12 * args.tol_scale
              && rep.max_abs("closed_form_blocks") < 1e-13 * args.tol_scale;
    return ok ? 0 : 1;
}

int suite_differential(const CommonArgs& args, const Config& cfg, ResidualReport& rep)
{
    const double m = cfg.get_double("mass", 1.2);
    const double en = cfg.get_double("energy", 0.9);
    auto residuals_at = [&](int n) {
        LineSolution ls = build_line_solution(n, 2 * n - 1, m, en, 0.8, 1.1, true);
        ResidualReport r = current_identities(ls.psi, ls.Dpsi, m);
        return std::max(r.max_abs("vector_current_conservation"),
                        r.max_abs("axial_current_source"));
    };
    const double c1 = residuals_at(17), c2 = residuals_at(33);
    rep.absorb("current_identities_h", c1, 0, 1.0);
    rep.absorb("current_identities_ratio", c1 / c2, 0, 1.0);

    LineSolution ls = build_line_solution(17, 33, m, en, 0.8, 1.1, true);
    ResidualReport exact = current_identities(ls.psi, ls.Dpsi_exact, m);
    rep.absorb("current_identities_exact", exact.worst(), 0, 1.0);
    ResidualReport pair =
        constraint_3_13(ls.psi, ls.Dpsi_exact, ls.omega, ls.aleph, m, 1.1);
    rep.absorb("bending_pairing_dual", pair.max_abs("dual_form_pairing"), 0, 1.0);
    rep.absorb("bending_pairing_sym", pair.max_abs("sym_form_pairing"), 0, 1.0);

    double ax = 0.0;
    for (std::size_t p = 0; p < ls.grid.size(); p += 7)
        ax = std::max(ax,
                      axial_decomposition(ls.psi.v[p], ls.Dpsi_exact.v[p], m).residual());
    rep.absorb("axial_decomposition", ax, 0, 1.0);

    bool ok = rep.max_abs("current_identities_exact") < 1e-12 * args.tol_scale
              && rep.max_abs("bending_pairing_dual") < 1e-12 * args.tol_scale
              && rep.max_abs("bending_pairing_sym") < 1e-12 * args.tol_scale
              && rep.max_abs("axial_decomposition") < 1e-12 * args.tol_scale
              && rep.max_abs("current_identities_ratio") > 3.0;
    return ok ? 0 : 1;
}

int suite_constraint(const CommonArgs& args, const Config& cfg, ResidualReport& rep)
{
    const double m = cfg.get_double("mass", 1.3);
    const int n = cfg.get_int("radii", 41);
    Grid g;
    g.n = {1, 1, 1, n};
    g.h = {1, 1, 1, 2.0 / (n - 1)};
    g.origin = {0, 0, 0, 1.2};
    Field<double> ups(g), extracted(g);
    for (int j = 0; j < n; ++j) {
        const double r = g.coord(3, j);
        SphericalBendingPoint sp = spherical_bending_point(m, r, 0.4 / r, 0.05 / r);
        CurvatureConstraint cc = curvature_constraint(sp.omega, sp.upsilon, m);
        rep.absorb("angular_curvature", std::abs(cc.residual), std::size_t(j), 2.0 * m);
        AlephExtraction ex = aleph_from_bending(sp.omega, sp.upsilon, m);
        rep.absorb("aleph_extraction",
                   std::abs(ex.two_g_aleph[3] - sp.two_g_aleph3), std::size_t(j), 1.0);
        rep.absorb("aleph_consistency", ex.consistency, std::size_t(j), 1.0);
        SphericalReport sr = spherical_relations(sp.omega, sp.two_g_aleph3, r);
        rep.absorb("spherical_relations", sr.worst(), std::size_t(j), 1.0);
        ups.v[j] = sp.upsilon;
        extracted.v[j] = ex.two_g_aleph[3];
    }
    Field<double> dups = partial(ups, 3);
    double grad = 0.0;
    for (int j = 0; j < n; ++j)
        grad = std::max(grad, std::abs(-dups.v[j] - extracted.v[j]));
    rep.absorb("aleph_gradient_h2", grad, 0, 1.0);
    rep.absorb("gyromagnetic", std::abs(magnetic_moment(1.0, 1.0) - 0.5), 0, 1.0);

    const double tol = 1e-12 * args.tol_scale;
    bool ok = rep.max_abs("angular_curvature") < tol
              && rep.max_abs("aleph_extraction") < tol
              && rep.max_abs("spherical_relations") < tol
              && rep.max_abs("gyromagnetic") == 0.0
              && rep.max_abs("aleph_gradient_h2") < 5e-3 * args.tol_scale;
    return ok ? 0 : 1;
}

int cmd_verify(const CommonArgs& args)
{
    Config cfg = args.config_path.empty() ? Config{}
                                          : Config::parse_file(args.config_path);
    const std::string suite = cfg.get("suite", "all");

    RunManifest man;
    man.command = "verify";
    man.config_path = args.config_path;
    man.seed = args.seed;
    man.tol_scale = args.tol_scale;
    const std::string report_path =
        (fs::path(args.out_dir) / "verify_report.json").string();
    man.outputs = {"verify_report.json"};

    auto t0 = std::chrono::steady_clock::now();
    int status = 0;
    nlohmann::json all;
    all["manifest"] = man.hash();
    auto run_one = [&](const std::string& name, auto&& fn) {
        ResidualReport rep;
        int s = fn(args, cfg, rep);
        status = std::max(status, s);
        nlohmann::json jr;
        for (const auto& [key, e] : rep.entries)
            jr[key] = {{"max", e.max_abs},
                       {"where", e.where},
                       {"relative", e.relative()}};
        jr["pass"] = (s == 0);
        all["suites"][name] = jr;
        std::cout << (s == 0 ? "[pass] " : "[FAIL] ") << name << "\n";
        if (s != 0)
            for (const auto& [key, e] : rep.entries)
                std::cout << "        " << key << " max " << e.max_abs << "\n";
    };
    bool known = false;
    if (suite == "algebraic" || suite == "all") {
        run_one("algebraic", suite_algebraic);
        known = true;
    }
    if (suite == "transformation" || suite == "all") {
        run_one("transformation", suite_transformation);
        known = true;
    }
    if (suite == "differential" || suite == "all") {
        run_one("differential", suite_differential);
        known = true;
    }
    if (suite == "constraint" || suite == "all") {
        run_one("constraint", suite_constraint);
        known = true;
    }
    if (!known) throw ConfigError("unknown suite: " + suite);

    man.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    fs::create_directories(args.out_dir);
    std::ofstream(report_path) << all.dump(2) << "\n";
    write_manifest(man, (fs::path(args.out_dir) / "verify_manifest.json").string());
    return status;
}

int cmd_radial(const CommonArgs& args)
{
    Config cfg = Config::parse_file(args.config_path);
    RadialProblem prob;
    prob.m = cfg.get_double("mass", 1.0);
    prob.Zalpha = cfg.get_double("zalpha", 0.0);
    prob.k = cfg.get_double("k", 1.0);
    prob.m_z = cfg.get_double("m_z", 0.0);
    prob.r_min = cfg.get_double("r_min", 1e-5);
    prob.r_max = cfg.get_double("r_max", 40.0);
    prob.n_nodes = cfg.get_int("n_nodes", 10000);
    const std::string mode = cfg.get("aleph_mode", "off");
    if (mode == "off")
        prob.aleph_mode = AlephMode::off;
    else if (mode == "eq_4_18")
        prob.aleph_mode = AlephMode::eq_4_18;
    else
        throw ConfigError("unknown aleph_mode: " + mode);
    const std::string grading = cfg.get("grading", "geometric");
    prob.grading = grading == "uniform" ? MeshGrading::uniform : MeshGrading::geometric;
    const double e_lo = cfg.get_double("e_lo", 0.3 * prob.m);
    const double e_hi = cfg.get_double("e_hi", 0.99 * prob.m);

    RunManifest man;
    man.command = "radial";
    man.config_path = args.config_path;
    man.seed = args.seed;
    man.tol_scale = args.tol_scale;
    fs::create_directories(args.out_dir);
    const std::string profile_path = (fs::path(args.out_dir) / "profile.csv").string();
    const std::string spectrum_path =
        (fs::path(args.out_dir) / "spectrum.json").string();
    man.outputs = {"profile.csv", "spectrum.json"};

    auto t0 = std::chrono::steady_clock::now();
    RadialProfile prof = shoot_bound_state(prob, e_lo, e_hi);

    // mesh-refinement self-check
    RadialProblem half = prob;
    half.n_nodes = prob.n_nodes / 2;
    RadialProfile coarse = shoot_bound_state(half, e_lo, e_hi);

    std::ofstream out(profile_path);
    out << "# manifest " << man.hash() << "\n";
    out << "r,re_uL,im_uL,re_dL,im_dL,re_uR,im_uR,re_dR,im_dR\n";
    for (std::size_t i = 0; i < prof.r.size(); ++i) {
        out << format_double(prof.r[i]);
        for (const auto* c : {&prof.uL[i], &prof.dL[i], &prof.uR[i], &prof.dR[i]})
            out << "," << format_double(c->real()) << "," << format_double(c->imag());
        out << "\n";
    }
    out.close();

    nlohmann::json spectrum;
    spectrum["manifest"] = man.hash();
    spectrum["energy"] = prof.energy;
    spectrum["energy_over_m"] = prof.energy / prob.m;
    spectrum["matching_defect"] = prof.matching_defect;
    spectrum["max_local_error"] = prof.max_local_error;
    spectrum["bisections"] = prof.bisections;
    spectrum["k"] = prob.k;
    spectrum["m_z"] = prob.m_z;
    spectrum["mesh"] = {{"r_min", prob.r_min},
                    {"r_max", prob.r_max},
                    {"n_nodes", prob.n_nodes},
                    {"grading", grading}};
    spectrum["refinement_shift"] = std::abs(prof.energy - coarse.energy);
    spectrum["radial_flux"] = radial_flux(prof);
    std::ofstream(spectrum_path) << spectrum.dump(2) << "\n";

    man.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(man, (fs::path(args.out_dir) / "radial_manifest.json").string());
    std::cout << "E/m = " << prof.energy / prob.m << " (defect " << prof.matching_defect
              << ", refinement shift " << std::abs(prof.energy - coarse.energy)
              << ")\n";
    return 0;
}

int cmd_evolve(const CommonArgs& args)
{
    Config cfg = Config::parse_file(args.config_path);
    Evolution1p1Config ec;
    ec.L = cfg.get_double("L", 80.0);
    ec.N = cfg.get_int("N", 1024);
    ec.dt = cfg.get_double("dt", 0.0);
    ec.m = cfg.get_double("mass", 1.0);
    ec.nonlinear = cfg.get_bool("nonlinear", true);
    ec.background = cfg.get_double("background", 1.0);
    ec.packet_amplitude = cfg.get_double("packet_amplitude", 0.4);
    ec.packet_center = cfg.get_double("packet_center", 0.4 * ec.L);
    ec.packet_width = cfg.get_double("packet_width", 3.0);
    ec.packet_momentum = cfg.get_double("packet_momentum", 0.0);
    ec.packet_orthogonal_spin = cfg.get_bool("packet_orthogonal_spin", false);
    ec.bump_amplitude = cfg.get_double("bump_amplitude", 0.0);
    ec.bump_center = cfg.get_double("bump_center", 0.6 * ec.L);
    ec.bump_width = cfg.get_double("bump_width", 6.0);
    const int steps = cfg.get_int("steps", 500);
    const int every = cfg.get_int("sample_every", 10);
    const int snap_every = cfg.get_int("snapshot_every", 0);

    RunManifest man;
    man.command = "evolve";
    man.config_path = args.config_path;
    man.seed = args.seed;
    man.tol_scale = args.tol_scale;
    fs::create_directories(args.out_dir);
    const std::string series_path =
        (fs::path(args.out_dir) / "diagnostics.csv").string();
    const std::string summary_path = (fs::path(args.out_dir) / "summary.json").string();
    man.outputs = {"diagnostics.csv", "summary.json"};

    auto t0 = std::chrono::steady_clock::now();
    EvolutionState st = initialize(ec);
    const double c0 = packet_centroid(st, ec);
    const Diagnostics d0 = diagnostics(st, ec);

    std::ofstream out(series_path);
    out << "# manifest " << man.hash() << "\n";
    out << "t,centroid,width,max_density,total,packet_centroid\n";
    auto emit = [&](const Diagnostics& d) {
        out << format_double(d.t) << "," << format_double(d.centroid) << ","
            << format_double(d.width) << "," << format_double(d.max_density) << ","
            << format_double(d.total) << "," << format_double(packet_centroid(st, ec))
            << "\n";
    };
    emit(d0);
    for (int s = 1; s <= steps; ++s) {
        if (!step(st, ec)) break;
        if (s % every == 0 || s == steps) emit(diagnostics(st, ec));
        if (snap_every > 0 && s % snap_every == 0) {
            Grid g;
            g.n = {1, 1, 1, ec.N};
            g.h = {1, 1, 1, ec.dx()};
            Field<Spinor> f(g);
            f.v = st.psi;
            write_snapshot_binary(snapshot_of(f),
                                  (fs::path(args.out_dir)
                                   / ("state_" + std::to_string(s) + ".dgf"))
                                      .string());
        }
    }
    emit(diagnostics(st, ec));
    out.close();

    const Diagnostics d1 = diagnostics(st, ec);
    nlohmann::json sum;
    sum["manifest"] = man.hash();
    sum["status"] = st.status == EvolveStatus::caustic ? "caustic" : "ok";
    if (st.status == EvolveStatus::caustic) sum["stop_time"] = st.stop_time;
    sum["steps_done"] = st.step_count;
    sum["total_drift"] = d1.total - d0.total;
    sum["packet_drift"] = packet_centroid(st, ec) - c0;
    if (ec.bump_amplitude != 0.0) {
        const bool toward = (packet_centroid(st, ec) - c0)
                                * (ec.bump_center - ec.packet_center)
                            > 0.0;
        sum["refraction_toward_bump"] = toward;
        std::cout << "refraction: packet drift " << (toward ? "toward" : "away from")
                  << " the density bump (" << packet_centroid(st, ec) - c0 << ")\n";
    }
    if (st.status == EvolveStatus::caustic)
        std::cout << "caustic stop at t = " << st.stop_time << "\n";
    std::ofstream(summary_path) << sum.dump(2) << "\n";

    man.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(man, (fs::path(args.out_dir) / "evolve_manifest.json").string());
    return 0;
}

int cmd_tetrad(const CommonArgs& args)
{
    Config cfg = Config::parse_file(args.config_path);
    const std::string input = cfg.require("input");
    const std::string format = cfg.get("format", "csv");
    FieldSnapshot snap = format == "binary" ? read_snapshot_binary(input)
                                            : read_snapshot_csv(input);
    Field<Spinor> psi = spinor_field_of(snap);
    const Grid& g = psi.grid;

    RunManifest man;
    man.command = "tetrad";
    man.config_path = args.config_path;
    man.seed = args.seed;
    man.tol_scale = args.tol_scale;
    fs::create_directories(args.out_dir);
    const std::string tetrad_path = (fs::path(args.out_dir) / "tetrad.csv").string();
    man.outputs = {"tetrad.csv"};

    Field<Tetrad> tets(g);
    Field<MetricPoint> mets(g);
    FieldSnapshot outsnap;
    outsnap.grid = g;
    outsnap.arity = 2 + 16 + 16;
    outsnap.values.reserve(g.size() * outsnap.arity);
    for (std::size_t p = 0; p < g.size(); ++p) {
        BilinearSet b = bilinears(psi.v[p]);
        tets.v[p] = build_tetrad(b);
        mets.v[p] = metric_from_tetrad(tets.v[p]);
        outsnap.values.push_back(b.R);
        outsnap.values.push_back(b.Upsilon);
        for (int a = 0; a < 4; ++a)
            for (int mu = 0; mu < 4; ++mu) outsnap.values.push_back(tets.v[p].e(a, mu));
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) outsnap.values.push_back(mets.v[p].g(mu, nu));
    }
    write_snapshot_csv(outsnap, tetrad_path, man.hash());

    // differential layer when the grid supports stencils
    bool differentiable = true;
    for (int ax = 0; ax < 4; ++ax)
        if (g.n[ax] > 1 && g.n[ax] < 5) differentiable = false;
    if (differentiable) {
        auto gam = christoffel(mets);
        auto om = rotation_coefficients(tets, mets, gam);
        auto cur = riemann(mets, gam, tets, om);
        FieldSnapshot geo;
        geo.grid = g;
        geo.arity = 64 + 4 + 4 + 1;
        geo.values.reserve(g.size() * geo.arity);
        for (std::size_t p = 0; p < g.size(); ++p) {
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int c = 0; c < 4; ++c)
                        geo.values.push_back(om.v[p].o[a][b][c]);
            for (int a = 0; a < 4; ++a) geo.values.push_back(om.v[p].w[a]);
            for (int a = 0; a < 4; ++a) geo.values.push_back(om.v[p].k[a]);
            geo.values.push_back(cur.v[p].scalar);
        }
        const std::string geo_path = (fs::path(args.out_dir) / "geometry.csv").string();
        write_snapshot_csv(geo, geo_path, man.hash());
        man.outputs.push_back("geometry.csv");
        std::cout << "tetrad, metric and curvature written for " << g.size()
                  << " nodes\n";
    } else {
        std::cout << "tetrad and metric written for " << g.size()
                  << " nodes (grid too small for stencils)\n";
    }
    write_manifest(man, (fs::path(args.out_dir) / "tetrad_manifest.json").string());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"numerical laboratory for Dirac-field bilinears, the induced "
                 "tetrad geometry, radial bound states and 1+1d evolution"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    CommonArgs args;
    app.add_option("--config", args.config_path, "configuration file (key = value)");
    app.add_option("--seed", args.seed, "random seed");
    app.add_option("--out", args.out_dir, "output directory");
    app.add_option("--tol-scale", args.tol_scale, "tolerance scale factor");
    app.add_flag("--corrupt-matrices", args.corrupt_matrices)->group(""); // test hook

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    auto* radial = app.add_subcommand("radial", "solve the separated radial system");
    auto* evolve = app.add_subcommand("evolve", "run the 1+1d evolution demo");
    auto* tetrad =
        app.add_subcommand("tetrad", "tetrad/metric/curvature from a field file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(args);
        if (radial->parsed()) return cmd_radial(args);
        if (evolve->parsed()) return cmd_evolve(args);
        if (tetrad->parsed()) return cmd_tetrad(args);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
