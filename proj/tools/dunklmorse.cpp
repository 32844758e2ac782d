// Command-line front end: bound-state spectra, vibrational thermodynamics,
// angular eigenfunctions, the verification suite, and the reference-table
// reproduction harness. Output is deterministic plot-ready CSV (shortest
// round-trip number formatting) with a provenance comment line.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dunklmorse/dunklmorse.hpp"
#include "dunklmorse/highprec.hpp"
#include "dunklmorse/reference_tables.hpp"

using namespace dunklmorse;
using json = nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct CommonConfig {
    std::string molecule;
    double inline_p = 0.0, inline_d = 0.0, inline_alpha = 0.0;
    double mu1 = 0.0, mu2 = 0.0, mu3 = 0.0;
    double mu_all = std::numeric_limits<double>::quiet_NaN();
    std::string variant = "paper";
    std::string out;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--molecule", molecule, "built-in molecule name (H2, HCl, I2)");
        cmd->add_option("--P", inline_p, "inline kinetic prefactor hbar^2/(2 M r_e^2), cm^-1");
        cmd->add_option("--D", inline_d, "inline well depth, cm^-1");
        cmd->add_option("--alpha", inline_alpha, "inline width parameter");
        cmd->add_option("--mu1", mu1, "deformation strength mu1");
        cmd->add_option("--mu2", mu2, "deformation strength mu2");
        cmd->add_option("--mu3", mu3, "deformation strength mu3");
        cmd->add_option("--mu", mu_all, "set mu1 = mu2 = mu3 at once");
        cmd->add_option("--variant", variant, "centrifugal closure coefficients: paper|taylor")
            ->check(CLI::IsMember({"paper", "taylor"}));
        cmd->add_option("--out", out, "output path (default: stdout)");
    }

    Molecule resolve_molecule() const {
        if (!molecule.empty()) {
            Molecule m = find_molecule(molecule);
            if (inline_p > 0.0) m.P = inline_p;
            if (inline_d > 0.0) m.D = inline_d;
            if (inline_alpha > 0.0) m.alpha = inline_alpha;
            return m;
        }
        if (inline_p > 0.0 && inline_d > 0.0 && inline_alpha > 0.0)
            return Molecule("inline", inline_p, inline_d, inline_alpha);
        throw std::invalid_argument(
            "no molecule: pass --molecule or all of --P, --D, --alpha");
    }

    DunklParams resolve_dunkl() const {
        if (!std::isnan(mu_all)) return DunklParams::uniform(mu_all);
        return DunklParams(mu1, mu2, mu3);
    }

    pekeris::PekerisVariant resolve_variant() const {
        return variant == "taylor" ? pekeris::PekerisVariant::taylor_matched
                                   : pekeris::PekerisVariant::paper;
    }

    std::string provenance(const std::string& cmd, const Molecule& mol,
                           const DunklParams& p) const {
        std::ostringstream os;
        os << "# dunklmorse " << version_string << " | " << cmd
           << " molecule=" << mol.name << " P=" << fmt(mol.P) << " D=" << fmt(mol.D)
           << " alpha=" << fmt(mol.alpha) << " mu1=" << fmt(p.mu1)
           << " mu2=" << fmt(p.mu2) << " mu3=" << fmt(p.mu3) << " variant=" << variant;
        return os.str();
    }
};

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output path: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

std::vector<double> build_t_grid(double tmin, double tmax, int tpoints,
                                 const std::string& tscale) {
    if (!(tmin > 0.0) || !(tmax > tmin) || tpoints < 2)
        throw std::invalid_argument("temperature grid: need 0 < tmin < tmax and tpoints >= 2");
    std::vector<double> g(tpoints);
    for (int i = 0; i < tpoints; ++i) {
        const double f = static_cast<double>(i) / (tpoints - 1);
        g[i] = tscale == "log" ? tmin * std::pow(tmax / tmin, f)
                               : tmin + f * (tmax - tmin);
    }
    return g;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const CommonConfig& cfg, int n_max, double ell, double m) {
    const Molecule mol = cfg.resolve_molecule();
    const DunklParams p = cfg.resolve_dunkl();
    const auto variant = cfg.resolve_variant();
    const auto window = pekeris::bound_state_range(mol, p, ell, m, variant);

    Output out(cfg.out);
    auto& os = out.stream();
    os << cfg.provenance("spectrum", mol, p) << " ell=" << fmt(ell) << " m=" << fmt(m)
       << " n_max=" << n_max << "\n";
    if (p.mu1 == 0.0 && p.mu2 == 0.0 && p.mu3 == 0.0)
        os << "# standard_morse_reduction = true (mu_i = 0: levels equal the "
              "undeformed rotating-Morse ladder with L = 2(ell+m))\n";
    os << "# bound_window = [" << fmt(window.lo) << ", " << fmt(window.hi) << "]\n";
    os << "n,ell,m,E_cm,E_eV,in_window\n";
    for (int n = 0; n <= n_max; ++n) {
        const auto lev = pekeris::energy(mol, p, n, ell, m, variant);
        const bool in_window = !window.empty() && n >= window.n_min && n <= window.n_max;
        os << n << ',' << fmt(ell) << ',' << fmt(m) << ',' << fmt(lev.e_cm) << ','
           << fmt(lev.e_ev) << ',' << (in_window ? 1 : 0) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ thermo

int cmd_thermo(const CommonConfig& cfg, double tmin, double tmax, int tpoints,
               const std::string& tscale) {
    const Molecule mol = cfg.resolve_molecule();
    const DunklParams p = cfg.resolve_dunkl();
    const auto tp = thermo::thermo_params(mol, p, cfg.resolve_variant());
    const auto grid = build_t_grid(tmin, tmax, tpoints, tscale);

    const auto direct = thermo::thermal_functions(tp, grid, thermo::ThermoMethod::direct_sum);
    const auto closed = thermo::thermal_functions(tp, grid, thermo::ThermoMethod::closed_form);

    Output out(cfg.out);
    auto& os = out.stream();
    os << cfg.provenance("thermo", mol, p) << " tmin=" << fmt(tmin) << " tmax=" << fmt(tmax)
       << " tpoints=" << tpoints << " tscale=" << tscale << "\n";
    os << "# levels = " << thermo::vibrational_levels(tp).size()
       << ", lambda_max = " << fmt(tp.lambda_max) << "\n";
    os << "# energies in cm^-1; S and Cv in cm^-1/K\n";
    os << "T,beta,Z_closed,Z_direct,F_closed,F_direct,U_closed,U_direct,"
          "S_closed,S_direct,Cv_closed,Cv_direct\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        os << fmt(grid[i]) << ',' << fmt(direct[i].beta) << ',' << fmt(closed[i].Z) << ','
           << fmt(direct[i].Z) << ',' << fmt(closed[i].F) << ',' << fmt(direct[i].F) << ','
           << fmt(closed[i].U) << ',' << fmt(direct[i].U) << ',' << fmt(closed[i].S) << ','
           << fmt(direct[i].S) << ',' << fmt(closed[i].Cv) << ',' << fmt(direct[i].Cv)
           << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- angular

int cmd_angular(const CommonConfig& cfg, const std::string& family, int s1, int s2,
                int s3, double m, double ell, int grid) {
    const DunklParams p = cfg.resolve_dunkl();
    const double pi = std::acos(-1.0);

    Output out(cfg.out);
    auto& os = out.stream();
    if (family == "azimuthal") {
        const angular::AzimuthalWave wave({s1, s2, s3}, m, p);
        os << "# dunklmorse " << version_string << " | angular family=azimuthal s1=" << s1
           << " s2=" << s2 << " m=" << fmt(m) << " mu1=" << fmt(p.mu1) << " mu2="
           << fmt(p.mu2) << " mu3=" << fmt(p.mu3)
           << " lambda2=" << fmt(angular::azimuthal_eigenvalue(m, p)) << "\n";
        os << "phi,Phi,s1,s2,m\n";
        for (int j = 0; j < grid; ++j) {
            const double phi = (j + 0.5) * 2.0 * pi / grid;
            os << fmt(phi) << ',' << fmt(wave(phi)) << ',' << s1 << ',' << s2 << ','
               << fmt(m) << "\n";
        }
    } else if (family == "polar") {
        const angular::PolarWave wave(s3, ell, m, p);
        os << "# dunklmorse " << version_string << " | angular family=polar s3=" << s3
           << " ell=" << fmt(ell) << " m=" << fmt(m) << " mu1=" << fmt(p.mu1)
           << " mu2=" << fmt(p.mu2) << " mu3=" << fmt(p.mu3)
           << " varpi2=" << fmt(angular::polar_eigenvalue(ell, m, p)) << "\n";
        os << "theta,Theta,s3,ell,m\n";
        for (int j = 0; j < grid; ++j) {
            const double th = (j + 0.5) * pi / grid;
            os << fmt(th) << ',' << fmt(wave(th)) << ',' << s3 << ',' << fmt(ell) << ','
               << fmt(m) << "\n";
        }
    } else {
        throw std::invalid_argument("angular: --family must be azimuthal or polar");
    }
    return 0;
}

// ------------------------------------------------------------------ verify

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

void report(std::ostream& os, std::vector<CheckResult>& all, CheckResult r) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    all.push_back(std::move(r));
}

int cmd_verify(const CommonConfig& cfg, int grid) {
    Output out(cfg.out);
    auto& os = out.stream();
    std::vector<CheckResult> results;
    os << "# dunklmorse " << version_string << " | verify grid=" << grid << "\n";

    {  // special functions against the 50-digit references
        double worst = 0.0;
        const double xs[] = {1e-3, 0.5, 1.5, 3.7, 10.3, 127.25, 1e4, 1e6};
        for (double x : xs)
            worst = std::max(worst, std::abs(specfun::ln_gamma(x) - highprec::ref_ln_gamma(x)) /
                                        std::abs(highprec::ref_ln_gamma(x)));
        for (int n : {1, 3, 5, 12, 20})
            for (double x : {-0.9, -0.3, 0.45, 0.95}) {
                const double ref = highprec::ref_jacobi(n, 0.3, -0.45, x);
                worst = std::max(worst, std::abs(specfun::jacobi(n, 0.3, -0.45, x) - ref) /
                                            std::max(1.0, std::abs(ref)));
            }
        for (double z : {-30.0, -4.2, 0.5, 11.0, 30.0}) {
            const double ref = highprec::ref_kummer_1f1(0.7, 1.9, z);
            worst = std::max(worst, std::abs(specfun::kummer_1f1(0.7, 1.9, z) - ref) /
                                        std::abs(ref));
        }
        for (double x : {0.25, 1.0, 2.0, 5.0, 10.0, 26.0})
            worst = std::max(worst, std::abs(specfun::erfi(x) - highprec::ref_erfi(x)) /
                                        highprec::ref_erfi(x));
        for (double x : {0.5, 2.0, 10.0, 50.0})
            worst = std::max(worst, std::abs(specfun::dawson(x) - highprec::ref_dawson(x)) /
                                        highprec::ref_dawson(x));
        report(os, results,
               {"specfun vs extended-precision references", worst <= 1e-10,
                "max rel dev = " + fmt(worst) + " (tol 1e-10)"});
    }

    {  // erfi/dawson identity
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double x = 0.05 + i * (4.95 / 100.0);
            const double lhs = specfun::erfi(x);
            const double rhs = specfun::two_over_sqrt_pi * std::exp(x * x) * specfun::dawson(x);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
        report(os, results,
               {"erfi/dawson identity", worst <= 1e-12,
                "max rel dev = " + fmt(worst) + " (tol 1e-12)"});
    }

    {  // angular operator residuals across all six families
        double worst_az = 0.0, worst_po = 0.0;
        for (double mu_i : {-0.4, 0.0, 0.4}) {
            const DunklParams p = DunklParams::uniform(mu_i);
            const ParityLabels sectors[] = {{1, 1, 1}, {-1, -1, 1}, {1, -1, 1}, {-1, 1, 1}};
            for (const auto& sec : sectors) {
                const bool integer_m = sec.s1 * sec.s2 == 1;
                for (double m = integer_m ? (sec.s1 == -1 ? 1.0 : 0.0) : 0.5; m <= 3.0; m += 1.0)
                    worst_az = std::max(worst_az,
                                        angular::verify_azimuthal_eigen(sec, m, p, grid));
            }
            for (int s3 : {1, -1})
                for (double ell = s3 == 1 ? 0.0 : 0.5; ell <= 3.0; ell += 1.0)
                    for (double m : {0.0, 0.5, 1.0, 2.0})
                        worst_po = std::max(worst_po,
                                            angular::verify_polar_eigen(s3, ell, m, p, grid));
        }
        report(os, results,
               {"azimuthal eigen residual", worst_az <= 1e-6,
                "max residual = " + fmt(worst_az) + " (tol 1e-6)"});
        report(os, results,
               {"polar eigen residual", worst_po <= 1e-5,
                "max residual = " + fmt(worst_po) + " (tol 1e-5)"});
    }

    {  // azimuthal orthonormality
        double worst = 0.0;
        const DunklParams p = DunklParams::uniform(0.4);
        for (const ParityLabels& sec : {ParityLabels{1, 1, 1}, ParityLabels{1, -1, 1}}) {
            std::vector<angular::AzimuthalWave> waves;
            const bool integer_m = sec.s1 * sec.s2 == 1;
            for (double m = integer_m ? 0.0 : 0.5; m <= 4.0; m += 1.0)
                waves.emplace_back(sec, m, p);
            for (std::size_t i = 0; i < waves.size(); ++i)
                for (std::size_t j = i; j < waves.size(); ++j) {
                    const double target = i == j ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(angular::azimuthal_overlap(
                                                         waves[i], waves[j]) -
                                                     target));
                }
        }
        report(os, results,
               {"azimuthal orthonormality", worst <= 1e-8,
                "max dev from delta_mm' = " + fmt(worst) + " (tol 1e-8)"});
    }

    {  // eigensolver vs the closed-form ladder
        const Molecule& h2 = find_molecule("H2");
        double worst = 0.0;
        for (double mu_i : {-0.4, 0.4}) {
            const DunklParams p = DunklParams::uniform(mu_i);
            const double A = pekeris::angular_coefficient(p, 1.0, 1.0);
            const auto evals = oracle::radial_eigensolve_auto(h2, p, A,
                                                              pekeris::PekerisVariant::paper, 6);
            for (int n = 0; n <= 5; ++n) {
                const auto lev = pekeris::energy(h2, p, n, 1.0, 1.0,
                                                 pekeris::PekerisVariant::paper);
                worst = std::max(worst, std::abs(evals[n] - lev.e_cm) / std::abs(lev.e_cm));
            }
        }
        report(os, results,
               {"finite-difference eigenvalues vs closed form", worst <= 1e-4,
                "max rel dev = " + fmt(worst) + " (tol 1e-4, n <= 5)"});
    }

    {  // radial ODE residual, consistent vs as-printed argument
        const Molecule& h2 = find_molecule("H2");
        const DunklParams p = DunklParams::uniform(-0.4);
        const double A = pekeris::angular_coefficient(p, 1.0, 1.0);
        const auto sp = pekeris::spectral_params(h2, p, A, pekeris::PekerisVariant::paper);
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n)
            worst = std::max(worst, oracle::ode_residual(sp, n, 0.2, 2.5, 2048));
        const double printed = oracle::ode_residual(
            sp, 1, 0.2, 2.5, 2048, pekeris::RadialWavefunction::Argument::as_printed);
        report(os, results,
               {"radial ODE residual (argument 2*gamma*rho)", worst <= 1e-6,
                "max residual = " + fmt(worst) + " (tol 1e-6); as-printed argument gives " +
                    fmt(printed)});
    }

    {  // thermodynamic dual path
        const Molecule& h2 = find_molecule("H2");
        const auto tp = thermo::thermo_params(h2, DunklParams::uniform(0.4),
                                              pekeris::PekerisVariant::paper);
        const auto grid_t = build_t_grid(100.0, 5000.0, 17, "log");
        const auto agree = thermo::derivative_consistency(tp, grid_t);
        report(os, results,
               {"thermo finite-difference vs moment formulas",
                agree.max_rel_u <= 1e-6 && agree.max_rel_cv <= 1e-6,
                "max rel dev U = " + fmt(agree.max_rel_u) + ", Cv = " +
                    fmt(agree.max_rel_cv) + " (tol 1e-6)"});
    }

    int fails = 0;
    for (const auto& r : results)
        if (!r.pass) ++fails;
    os << "# " << (results.size() - fails) << "/" << results.size() << " checks passed\n";
    return fails == 0 ? 0 : 1;
}

// -------------------------------------------------------- reproduce-tables

struct TableRow {
    const reference::ReferenceEnergy* ref;
    double paper_ev, taylor_ev;
    double paper_rel, paper_abs, taylor_rel, taylor_abs;
    bool paper_strict, taylor_strict, paper_relaxed, taylor_relaxed;
};

int cmd_reproduce_tables(const CommonConfig& cfg, bool strict, std::string annex_path) {
    constexpr double rel_strict = 0.01, rel_relaxed = 0.03, abs_gate = 0.005;

    std::vector<TableRow> rows;
    for (const auto& ref : reference::energy_table) {
        const Molecule& mol = find_molecule(ref.molecule);
        const DunklParams p = DunklParams::uniform(ref.mu_i);
        TableRow row;
        row.ref = &ref;
        row.paper_ev = pekeris::energy(mol, p, ref.n, 1.0, 1.0,
                                       pekeris::PekerisVariant::paper).e_ev;
        row.taylor_ev = pekeris::energy(mol, p, ref.n, 1.0, 1.0,
                                        pekeris::PekerisVariant::taylor_matched).e_ev;
        row.paper_abs = std::abs(row.paper_ev - ref.e_ev);
        row.taylor_abs = std::abs(row.taylor_ev - ref.e_ev);
        row.paper_rel = row.paper_abs / std::abs(ref.e_ev);
        row.taylor_rel = row.taylor_abs / std::abs(ref.e_ev);
        row.paper_strict = row.paper_rel <= rel_strict || row.paper_abs <= abs_gate;
        row.taylor_strict = row.taylor_rel <= rel_strict || row.taylor_abs <= abs_gate;
        row.paper_relaxed = row.paper_rel <= rel_relaxed || row.paper_abs <= abs_gate;
        row.taylor_relaxed = row.taylor_rel <= rel_relaxed || row.taylor_abs <= abs_gate;
        rows.push_back(row);
    }

    struct TableVerdict {
        bool strict_paper = true, strict_taylor = true;
        bool relaxed_paper = true, relaxed_taylor = true;
        bool strict_ok() const { return strict_paper || strict_taylor; }
        bool relaxed_ok() const { return relaxed_paper || relaxed_taylor; }
    };
    TableVerdict verdicts[2];  // index 0: mu_i = -0.4, 1: mu_i = +0.4
    for (const auto& row : rows) {
        auto& v = verdicts[row.ref->mu_i < 0 ? 0 : 1];
        v.strict_paper &= row.paper_strict;
        v.strict_taylor &= row.taylor_strict;
        v.relaxed_paper &= row.paper_relaxed;
        v.relaxed_taylor &= row.taylor_relaxed;
    }

    Output out(cfg.out);
    auto& os = out.stream();
    os << "# dunklmorse " << version_string
       << " | reproduce-tables variant=both gate: rel<=1% or abs<=0.005 eV "
          "(relaxed: rel<=3%)\n";
    os << "mu_i,molecule,n,expected_eV,paper_eV,paper_rel,paper_abs,paper_strict,"
          "taylor_eV,taylor_rel,taylor_abs,taylor_strict\n";
    for (const auto& row : rows) {
        os << fmt(row.ref->mu_i) << ',' << row.ref->molecule << ',' << row.ref->n << ','
           << fmt(row.ref->e_ev) << ',' << fmt(row.paper_ev) << ',' << fmt(row.paper_rel)
           << ',' << fmt(row.paper_abs) << ',' << (row.paper_strict ? 1 : 0) << ','
           << fmt(row.taylor_ev) << ',' << fmt(row.taylor_rel) << ',' << fmt(row.taylor_abs)
           << ',' << (row.taylor_strict ? 1 : 0) << "\n";
    }

    bool need_annex = false;
    bool all_ok = true;
    for (int t = 0; t < 2; ++t) {
        const auto& v = verdicts[t];
        const char* mu = t == 0 ? "-0.4" : "+0.4";
        if (v.strict_ok()) {
            os << "# table mu_i=" << mu << ": strict gate met (variant "
               << (v.strict_paper ? "paper" : "taylor") << ")\n";
        } else if (v.relaxed_ok()) {
            need_annex = true;
            os << "# table mu_i=" << mu << ": strict gate NOT met; relaxed 3% gate met (variant "
               << (v.relaxed_paper ? "paper" : "taylor") << "); discrepancy annex emitted\n";
        } else {
            need_annex = true;
            all_ok = false;
            os << "# table mu_i=" << mu
               << ": NEITHER variant meets the relaxed 3% gate; discrepancy annex emitted\n";
        }
    }

    if (need_annex) {
        if (annex_path.empty())
            annex_path = cfg.out.empty() ? "reproduce_tables.annex.json" : cfg.out + ".annex.json";
        json annex;
        annex["tool"] = std::string("dunklmorse ") + version_string;
        annex["gate"] = {{"rel_strict", rel_strict},
                         {"rel_relaxed", rel_relaxed},
                         {"abs_eV", abs_gate}};
        annex["tables"] = json::object();
        for (int t = 0; t < 2; ++t) {
            const auto& v = verdicts[t];
            const char* mu = t == 0 ? "-0.4" : "+0.4";
            annex["tables"][mu] = {
                {"strict_variant",
                 v.strict_paper ? json("paper") : v.strict_taylor ? json("taylor") : json()},
                {"relaxed_variant",
                 v.relaxed_paper ? json("paper") : v.relaxed_taylor ? json("taylor") : json()},
            };
        }
        annex["entries_failing_strict"] = json::array();
        for (const auto& row : rows) {
            if (row.paper_strict && row.taylor_strict) continue;
            annex["entries_failing_strict"].push_back({
                {"mu_i", row.ref->mu_i},
                {"molecule", row.ref->molecule},
                {"n", row.ref->n},
                {"expected_eV", row.ref->e_ev},
                {"paper_eV", row.paper_ev},
                {"paper_rel", row.paper_rel},
                {"paper_abs_eV", row.paper_abs},
                {"paper_relaxed_pass", row.paper_relaxed},
                {"taylor_eV", row.taylor_ev},
                {"taylor_rel", row.taylor_rel},
                {"taylor_abs_eV", row.taylor_abs},
                {"taylor_relaxed_pass", row.taylor_relaxed},
            });
        }
        std::ofstream af(annex_path);
        if (!af) throw std::runtime_error("cannot open annex path: " + annex_path);
        af << annex.dump(2) << "\n";
        os << "# annex = " << annex_path << "\n";
    }

    if (strict && !all_ok) return 4;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dunkl-deformed Morse oscillator: spectra, angular eigenfunctions, "
                 "vibrational thermodynamics, and verification"};
    app.require_subcommand(1);
    app.set_config("--config")->description("flat key = value config file; flags override");

    CommonConfig cfg;

    auto* spectrum = app.add_subcommand("spectrum", "bound-state energy ladder as CSV");
    int n_max = 20;
    double ell = 0.0, m = 0.0;
    cfg.add_options(spectrum);
    spectrum->add_option("--n-max", n_max, "highest radial quantum number");
    spectrum->add_option("--ell", ell, "polar quantum number (half-integers allowed)");
    spectrum->add_option("--m", m, "azimuthal quantum number (half-integers allowed)");

    auto* th = app.add_subcommand("thermo", "vibrational thermodynamics as CSV");
    double tmin = 100.0, tmax = 5000.0;
    int tpoints = 64;
    std::string tscale = "log";
    cfg.add_options(th);
    th->add_option("--tmin", tmin, "lowest temperature, K");
    th->add_option("--tmax", tmax, "highest temperature, K");
    th->add_option("--tpoints", tpoints, "grid size");
    th->add_option("--tscale", tscale, "linear|log")->check(CLI::IsMember({"linear", "log"}));

    auto* ang = app.add_subcommand("angular", "angular eigenfunction samples as CSV");
    std::string family = "azimuthal";
    int s1 = 1, s2 = 1, s3 = 1, grid = 256;
    double ang_m = 0.0, ang_ell = 0.0;
    cfg.add_options(ang);
    ang->add_option("--family", family, "azimuthal|polar")
        ->check(CLI::IsMember({"azimuthal", "polar"}));
    ang->add_option("--s1", s1, "reflection parity s1 (+1/-1)");
    ang->add_option("--s2", s2, "reflection parity s2 (+1/-1)");
    ang->add_option("--s3", s3, "reflection parity s3 (+1/-1)");
    ang->add_option("--m", ang_m, "azimuthal quantum number");
    ang->add_option("--ell", ang_ell, "polar quantum number");
    ang->add_option("--grid", grid, "number of sample points");

    auto* ver = app.add_subcommand("verify", "run the oracle comparisons and report");
    int vgrid = 2048;
    cfg.add_options(ver);
    ver->add_option("--grid", vgrid, "residual grid size");

    auto* rep = app.add_subcommand("reproduce-tables",
                                   "compare computed energies against the embedded "
                                   "published reference values");
    bool strict_flag = false;
    std::string annex_path;
    cfg.add_options(rep);
    rep->add_flag("--strict", strict_flag, "exit 4 when the reproduction gate fails");
    rep->add_option("--annex", annex_path, "discrepancy annex path (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(cfg, n_max, ell, m);
        if (th->parsed()) return cmd_thermo(cfg, tmin, tmax, tpoints, tscale);
        if (ang->parsed()) return cmd_angular(cfg, family, s1, s2, s3, ang_m, ang_ell, grid);
        if (ver->parsed()) return cmd_verify(cfg, vgrid);
        if (rep->parsed()) return cmd_reproduce_tables(cfg, strict_flag, annex_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const differentiation_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::range_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const unphysical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const no_binding_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const domain_too_small_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
