#include <mmsim/checks.hpp>

#include <mmsim/coriolis.hpp>
#include <mmsim/hydrostatics.hpp>
#include <mmsim/sampling.hpp>

#include <fmt/format.h>

#include <cmath>

namespace mmsim {

namespace {

CheckResult verdict(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

double finite_difference_error(const VehicleParams &p, const Vec3 &r_p, const Vec9 &nu_prime) {
    const Mat9 m = build_M_S(p) + build_M_A(p) + build_M_P(p.m_p, r_p);
    const EnergyGradients g = energy_gradients(p, r_p, nu_prime);
    Vec9 analytic;
    analytic << g.dT_dv, g.dT_dw, g.dT_dvp;
    const double h = 1e-6 * (1.0 + nu_prime.norm());
    Vec9 numeric;
    for (Eigen::Index i = 0; i < 9; ++i) {
        Vec9 up = nu_prime, down = nu_prime;
        up(i) += h;
        down(i) -= h;
        numeric(i) = (kinetic_energy(m, up) - kinetic_energy(m, down)) / (2.0 * h);
    }
    return (numeric - analytic).norm() / std::max(analytic.norm(), 1e-300);
}

} // namespace

std::vector<CheckResult> run_builtin_checks(std::uint64_t seed, std::size_t samples) {
    Rng rng(seed);
    double worst_kirchhoff = 0.0, worst_nullity = 0.0, worst_gradient = 0.0, worst_symmetry = 0.0;
    double worst_split = 0.0;
    bool all_definite = true;
    for (std::size_t i = 0; i < samples; ++i) {
        const VehicleParams p = (i % 2 == 0) ? random_params(rng) : random_remus_like_params(rng);
        const SimState s = random_state(rng);
        const Vec9 nu_prime = s.nu_prime();

        const Mat9 c_total = build_C(p, nu_prime) + build_C_P(p.m_p, s.r_p, nu_prime);
        const Vec9 matrix_form = c_total * nu_prime;
        const Vec9 kirchhoff = kirchhoff_force(energy_gradients(p, s.r_p, nu_prime), nu_prime);
        worst_kirchhoff = std::max(worst_kirchhoff, (matrix_form - kirchhoff).norm() / std::max(kirchhoff.norm(), 1e-300));

        const Mat9 m = build_M_S(p) + build_M_A(p) + build_M_P(p.m_p, s.r_p);
        const double scale = nu_prime.squaredNorm() * m.norm();
        worst_nullity = std::max(worst_nullity, std::abs(nu_prime.dot(matrix_form)) / scale);
        worst_symmetry = std::max(worst_symmetry, (m - m.transpose()).cwiseAbs().maxCoeff());
        worst_gradient = std::max(worst_gradient, finite_difference_error(p, s.r_p, nu_prime));

        const Vec3 rail_rp(uniform(rng, -0.05, 0.05), 0.0, 0.05);
        all_definite = all_definite && Eigen::LLT<Mat9>(build_M_S(p) + build_M_A(p) + build_M_P(p.m_p, rail_rp)).info() ==
                                           Eigen::Success;

        const HydrostaticEnv env = make_env(p);
        const auto [g, g_p] = restoring_split(env, p, s.eta, s.r_p);
        worst_split = std::max(worst_split, (g + g_p - restoring_full(env, p, s.eta, s.r_p)).cwiseAbs().maxCoeff());
    }

    std::vector<CheckResult> results;
    results.push_back(verdict("kirchhoff-equivalence", worst_kirchhoff < 1e-10,
                              fmt::format("max relative difference {:.3e} (limit 1e-10)", worst_kirchhoff)));
    results.push_back(verdict("energy-rate-nullity", worst_nullity < 1e-12,
                              fmt::format("max normalized nu'^T C' nu' {:.3e} (limit 1e-12)", worst_nullity)));
    results.push_back(verdict("energy-gradient", worst_gradient < 1e-6,
                              fmt::format("max relative finite-difference error {:.3e} (limit 1e-6)", worst_gradient)));
    results.push_back(verdict("mass-matrix-symmetry", worst_symmetry < 1e-13,
                              fmt::format("max |M' - M'^T| {:.3e} (limit 1e-13)", worst_symmetry)));
    results.push_back(verdict("mass-matrix-definite", all_definite, "Cholesky of M' on rail positions"));
    results.push_back(verdict("restoring-split", worst_split == 0.0,
                              fmt::format("max |g + g_P - g'| {:.3e}", worst_split)));

    const VehicleParams remus = remus_params(remus100_source());
    ScenarioSpec spec = remus_scenario();
    spec.duration = 3.0;
    const ScenarioResult run = run_scenario(remus, spec, Formulation::NewtonEuler);
    CheckResult rail = check_records(run.records, spec);
    if (run.error) {
        rail.passed = false;
        rail.detail += "; run aborted: " + *run.error;
    }
    results.push_back(rail);
    return results;
}

CheckResult check_records(const std::vector<TrajectoryRecord> &records, const ScenarioSpec &spec) {
    std::size_t violations = 0;
    ForceScheduleState sched;
    for (const auto &r : records) {
        const Vec3 along = spec.rail.origin + spec.rail.axis.dot(r.r_p - spec.rail.origin) * spec.rail.axis;
        const double s = spec.rail.axis.dot(r.r_p - spec.rail.origin);
        const bool on_rail = r.r_p == along && s >= spec.rail.stroke_min && s <= spec.rail.stroke_max;

        SimState probe;
        probe.eta.position.z() = r.eta(2);
        Vec9 tau;
        std::tie(tau, sched) = force_schedule(spec, probe, sched, r.t);
        const bool schedule_ok = r.tau_X == spec.surge_force && r.tau_Xp == spec.rail.axis.dot(tau.segment<3>(6));
        violations += !(on_rail && schedule_ok);
    }
    return verdict("rail-and-schedule", violations == 0 && !records.empty(),
                   fmt::format("{} samples, {} violations", records.size(), violations));
}

CheckResult check_trajectory_csv(const CsvTable &table, const ScenarioSpec &spec) {
    const std::size_t ix = table.column("x_p"), itx = table.column("tau_X"), itp = table.column("tau_Xp");
    std::size_t violations = 0;
    for (const auto &row : table.rows) {
        const bool stroke = row[ix] >= spec.rail.origin.x() + spec.rail.stroke_min &&
                            row[ix] <= spec.rail.origin.x() + spec.rail.stroke_max;
        const bool forces = row[itx] == spec.surge_force && std::abs(row[itp]) == spec.mass_force_magnitude;
        violations += !(stroke && forces);
    }
    return verdict("csv-rail-and-schedule", violations == 0 && !table.rows.empty(),
                   fmt::format("{} rows, {} violations", table.rows.size(), violations));
}

} // namespace mmsim
