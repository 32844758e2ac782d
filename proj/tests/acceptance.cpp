// Acceptance suite: every criterion at its stated tolerance, one PASS/FAIL
// line each, nonzero exit when any fails. Criterion 1 compares against the
// embedded published energy tables and reports honestly per variant.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "dunklmorse/dunklmorse.hpp"
#include "dunklmorse/highprec.hpp"
#include "dunklmorse/reference_tables.hpp"
#include "morse_reference.hpp"

using namespace dunklmorse;
using pekeris::PekerisVariant;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void line(int id, bool pass, const std::string& what, double secs, double budget) {
    const bool in_budget = secs < budget;
    if (!pass || !in_budget) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s%s)\n",
                pass && in_budget ? "PASS" : "FAIL", id, what.c_str(), secs, budget,
                in_budget ? "" : " EXCEEDED");
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

// 1. Table reproduction: per table, some variant puts every entry within
//    1% rel or 0.005 eV abs; failing that, the 3% relaxed gate applies and a
//    machine-readable discrepancy annex is mandatory.
void criterion_1() {
    Timer t;
    constexpr double rel_strict = 0.01, rel_relaxed = 0.03, abs_gate = 0.005;
    struct Verdict {
        bool sp = true, st = true, rp = true, rt = true;
    } v[2];
    struct Fail {
        const reference::ReferenceEnergy* ref;
        double pe, te, pr, tr, pa, ta;
    };
    std::vector<Fail> strict_fails;

    for (const auto& ref : reference::energy_table) {
        const Molecule& mol = find_molecule(ref.molecule);
        const DunklParams p = DunklParams::uniform(ref.mu_i);
        const double pe = pekeris::energy(mol, p, ref.n, 1.0, 1.0, PekerisVariant::paper).e_ev;
        const double te =
            pekeris::energy(mol, p, ref.n, 1.0, 1.0, PekerisVariant::taylor_matched).e_ev;
        const double pa = std::abs(pe - ref.e_ev), ta = std::abs(te - ref.e_ev);
        const double pr = pa / std::abs(ref.e_ev), tr = ta / std::abs(ref.e_ev);
        auto& vv = v[ref.mu_i < 0 ? 0 : 1];
        const bool ps = pr <= rel_strict || pa <= abs_gate;
        const bool ts = tr <= rel_strict || ta <= abs_gate;
        vv.sp &= ps;
        vv.st &= ts;
        vv.rp &= pr <= rel_relaxed || pa <= abs_gate;
        vv.rt &= tr <= rel_relaxed || ta <= abs_gate;
        if (!ps && !ts) strict_fails.push_back({&ref, pe, te, pr, tr, pa, ta});
    }

    bool pass = true;
    std::string detail = "table reproduction (66 entries, both variants):";
    const char* names[2] = {"mu=-0.4", "mu=+0.4"};
    bool annex_needed = false;
    for (int i = 0; i < 2; ++i) {
        if (v[i].sp || v[i].st) {
            detail += std::string(" [") + names[i] + " strict via " +
                      (v[i].sp ? "paper" : "taylor") + "]";
        } else if (v[i].rp || v[i].rt) {
            annex_needed = true;
            detail += std::string(" [") + names[i] + " relaxed-3% via " +
                      (v[i].rp ? "paper" : "taylor") + "]";
        } else {
            annex_needed = true;
            pass = false;
            detail += std::string(" [") + names[i] + " FAILS both variants at 3%]";
        }
    }
    if (annex_needed) {
        std::ofstream annex("acceptance_discrepancy_annex.json");
        annex << "{\n  \"entries_failing_strict\": [\n";
        for (std::size_t i = 0; i < strict_fails.size(); ++i) {
            const auto& f = strict_fails[i];
            annex << "    {\"mu_i\": " << f.ref->mu_i << ", \"molecule\": \""
                  << f.ref->molecule << "\", \"n\": " << f.ref->n
                  << ", \"expected_eV\": " << f.ref->e_ev << ", \"paper_eV\": " << f.pe
                  << ", \"paper_rel\": " << f.pr << ", \"taylor_eV\": " << f.te
                  << ", \"taylor_rel\": " << f.tr << "}"
                  << (i + 1 < strict_fails.size() ? ",\n" : "\n");
        }
        annex << "  ]\n}\n";
        detail += " annex=acceptance_discrepancy_annex.json";
    }
    line(1, pass, detail, t.seconds(), 1.0);
}

// 2. mu_i = 0 reduction against the independently coded standard ladder.
void criterion_2() {
    Timer t;
    double worst = 0.0;
    const DunklParams zero{};
    for (const char* name : {"H2", "HCl"}) {
        const Molecule& mol = find_molecule(name);
        for (int L = 0; L <= 6; ++L) {
            const double ell = L / 2.0;  // composite index L = 2(ell+m), m = 0
            for (int n = 0; n <= 10; ++n) {
                const double ours = pekeris::energy(mol, zero, n, ell, 0.0,
                                                    PekerisVariant::paper).e_cm;
                const double ref =
                    morse_reference::energy_cm(mol.P, mol.D, mol.alpha, L, n, true);
                worst = std::max(worst, std::abs(ours - ref) / std::abs(ref));
            }
        }
    }
    line(2, worst <= 1e-10,
         "undeformed reduction vs independent standard Morse ladder, max rel dev = " +
             std::to_string(worst),
         t.seconds(), 1.0);
}

// 3. Finite-difference eigensolver vs the closed form, plus second-order
//    grid convergence.
void criterion_3() {
    Timer t;
    const Molecule& h2 = find_molecule("H2");
    double worst = 0.0;
    for (double mu_i : {-0.4, 0.4}) {
        const DunklParams p = DunklParams::uniform(mu_i);
        const double A = pekeris::angular_coefficient(p, 1.0, 1.0);
        const auto evals = oracle::radial_eigensolve_auto(h2, p, A, PekerisVariant::paper, 6);
        for (int n = 0; n <= 5; ++n) {
            const double ref = pekeris::energy(h2, p, n, 1.0, 1.0, PekerisVariant::paper).e_cm;
            worst = std::max(worst, std::abs(evals[n] - ref) / std::abs(ref));
        }
    }

    const DunklParams p = DunklParams::uniform(-0.4);
    const double A = pekeris::angular_coefficient(p, 1.0, 1.0);
    const double exact = pekeris::energy(h2, p, 0, 1.0, 1.0, PekerisVariant::paper).e_cm;
    oracle::Discretization disc;
    disc.chi_max = 6.0 / h2.alpha;
    disc.n_points = 2049;
    const double d1 =
        std::abs(oracle::radial_eigensolve(h2, p, A, disc, PekerisVariant::paper, 1)[0] - exact);
    disc.n_points = 4097;
    const double d2 =
        std::abs(oracle::radial_eigensolve(h2, p, A, disc, PekerisVariant::paper, 1)[0] - exact);
    const double ratio = d1 / d2;

    line(3, worst <= 1e-4 && ratio > 3.5 && ratio < 4.5,
         "eigensolver vs closed form (max rel dev = " + std::to_string(worst) +
             ", tol 1e-4; h-halving ratio = " + std::to_string(ratio) + " in [3.5, 4.5])",
         t.seconds(), 30.0);
}

// 4. Angular eigenfunction residuals and azimuthal orthogonality.
void criterion_4() {
    Timer t;
    double worst_az = 0.0, worst_po = 0.0, worst_orth = 0.0;
    for (double mu_i : {-0.4, 0.0, 0.4}) {
        const DunklParams p = DunklParams::uniform(mu_i);
        const ParityLabels sectors[] = {{1, 1, 1}, {-1, -1, 1}, {1, -1, 1}, {-1, 1, 1}};
        for (const auto& sec : sectors) {
            const bool integer_m = sec.s1 * sec.s2 == 1;
            const double m0 = integer_m ? (sec.s1 == -1 ? 1.0 : 0.0) : 0.5;
            for (double m = m0; m <= 3.0; m += 1.0)
                worst_az = std::max(worst_az, angular::verify_azimuthal_eigen(sec, m, p, 2048));
        }
        for (int s3 : {1, -1})
            for (double ell = s3 == 1 ? 0.0 : 0.5; ell <= 3.0; ell += 1.0)
                for (double m : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0})
                    worst_po = std::max(worst_po,
                                        angular::verify_polar_eigen(s3, ell, m, p, 2048));

        for (const auto& sec : sectors) {
            const bool integer_m = sec.s1 * sec.s2 == 1;
            std::vector<angular::AzimuthalWave> waves;
            for (double m = integer_m ? (sec.s1 == -1 ? 1.0 : 0.0) : 0.5; m <= 4.0; m += 1.0)
                waves.emplace_back(sec, m, p);
            for (std::size_t i = 0; i < waves.size(); ++i)
                for (std::size_t j = i; j < waves.size(); ++j) {
                    const double target = i == j ? 1.0 : 0.0;
                    worst_orth = std::max(
                        worst_orth,
                        std::abs(angular::azimuthal_overlap(waves[i], waves[j]) - target));
                }
        }
    }
    line(4, worst_az <= 1e-6 && worst_po <= 1e-5 && worst_orth <= 1e-8,
         "angular residuals (azimuthal " + std::to_string(worst_az) + " <= 1e-6, polar " +
             std::to_string(worst_po) + " <= 1e-5) and orthogonality dev " +
             std::to_string(worst_orth) + " <= 1e-8",
         t.seconds(), 60.0);
}

// 5. Radial wavefunction: ODE residual and node counts.
void criterion_5() {
    Timer t;
    const Molecule& h2 = find_molecule("H2");
    const DunklParams p = DunklParams::uniform(-0.4);
    const double A = pekeris::angular_coefficient(p, 1.0, 1.0);
    const auto sp = pekeris::spectral_params(h2, p, A, PekerisVariant::paper);

    double worst = 0.0;
    bool nodes_ok = true;
    for (int n = 0; n <= 3; ++n) {
        worst = std::max(worst, oracle::ode_residual(sp, n, 0.2, 2.5, 4096));
        const pekeris::RadialWavefunction psi(sp, n);
        int nodes = 0;
        double last = psi(1e-3);
        const double hi = psi.rho_max() - 1e-3;
        for (int i = 1; i <= 40000; ++i) {
            const double rho = 1e-3 + i * ((hi - 1e-3) / 40000);
            const double v = psi(rho);
            if (std::signbit(v) != std::signbit(last)) ++nodes;
            last = v;
        }
        nodes_ok &= nodes == n;
    }
    line(5, worst <= 1e-6 && nodes_ok,
         "radial ODE residual max = " + std::to_string(worst) +
             " (tol 1e-6), node counts equal n for n <= 3",
         t.seconds(), 5.0);
}

// 6. Thermodynamic self-consistency and Cv shape.
void criterion_6() {
    Timer t;
    double worst_u = 0.0, worst_cv = 0.0;
    bool monotone_s = true, nonneg_cv = true;
    for (const char* name : {"H2", "HCl"}) {
        const Molecule& mol = find_molecule(name);
        const auto tp = thermo::thermo_params(mol, DunklParams::uniform(0.4),
                                              PekerisVariant::paper);
        const auto grid = log_grid(100.0, 5000.0, 33);
        const auto agree = thermo::derivative_consistency(tp, grid);
        worst_u = std::max(worst_u, agree.max_rel_u);
        worst_cv = std::max(worst_cv, agree.max_rel_cv);
        const auto pts = thermo::thermal_functions(tp, grid, thermo::ThermoMethod::direct_sum);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            nonneg_cv &= pts[i].Cv >= 0.0;
            if (i > 0) monotone_s &= pts[i].S >= pts[i - 1].S - 1e-12 * std::abs(pts[i].S);
        }
    }

    // unique interior Cv maximum for H2 on [10, 1e4] K
    const auto tp = thermo::thermo_params(find_molecule("H2"), DunklParams::uniform(0.4),
                                          PekerisVariant::paper);
    const auto grid = log_grid(10.0, 1e4, 64);
    const auto pts = thermo::thermal_functions(tp, grid, thermo::ThermoMethod::direct_sum);
    double cv_max = 0.0;
    std::size_t arg_max = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].Cv > cv_max) { cv_max = pts[i].Cv; arg_max = i; }
    bool unimodal = arg_max > 0 && arg_max + 1 < pts.size();
    const double eps = 1e-9 * cv_max;
    for (std::size_t i = 1; i <= arg_max && unimodal; ++i)
        unimodal = pts[i].Cv >= pts[i - 1].Cv - eps;
    for (std::size_t i = arg_max + 1; i < pts.size() && unimodal; ++i)
        unimodal = pts[i].Cv <= pts[i - 1].Cv + eps;

    line(6,
         worst_u <= 1e-6 && worst_cv <= 1e-6 && monotone_s && nonneg_cv && unimodal,
         "dual-path U/Cv agreement (max rel " + std::to_string(worst_u) + ", " +
             std::to_string(worst_cv) +
             ", tol 1e-6 floored at 1e-3 of grid max), Cv >= 0, S nondecreasing, "
             "single interior Cv peak",
         t.seconds(), 10.0);
}

// 7. Deformation trend of the partition function at fixed T.
void criterion_7() {
    Timer t;
    const Molecule& h2 = find_molecule("H2");
    const double beta = 1.0 / (thermo::kb_cm_per_k * 1000.0);
    double prev = 0.0;
    bool first = true, decreasing = true;
    for (double mu : {1.2, 4.5, 6.0}) {
        const auto tp = thermo::thermo_params(h2, DunklParams::uniform(mu / 3.0),
                                              PekerisVariant::paper);
        const auto levels = thermo::vibrational_levels(tp);
        const double lnz = thermo::ln_partition_direct(beta, levels);
        if (!first) decreasing &= lnz < prev;
        prev = lnz;
        first = false;
    }
    line(7, decreasing, "direct-sum Z(1000 K) strictly decreasing over mu = 1.2, 4.5, 6.0",
         t.seconds(), 5.0);
}

// 8. Special-function accuracy against the extended-precision references.
void criterion_8() {
    Timer t;
    double worst = 0.0;
    for (double x : {1e-3, 0.02, 0.5, 1.5, 3.7, 10.3, 127.25, 1e4, 1e6})
        worst = std::max(worst, std::abs(specfun::ln_gamma(x) - highprec::ref_ln_gamma(x)) /
                                    std::abs(highprec::ref_ln_gamma(x)));
    for (int n : {0, 1, 2, 5, 9, 14, 20})
        for (double a : {-0.45, 0.3, 1.7, 4.8})
            for (double b : {-0.2, 0.6, 2.4})
                for (double x : {-0.9, -0.35, 0.3, 0.72, 0.95}) {
                    const double ref = highprec::ref_jacobi(n, a, b, x);
                    worst = std::max(worst, std::abs(specfun::jacobi(n, a, b, x) - ref) /
                                                std::max(1.0, std::abs(ref)));
                }
    for (double a : {-3.0, -1.0, 0.7, 2.2})
        for (double b : {0.9, 1.9, 3.5})
            for (double z : {-30.0, -4.2, -1.0, 0.5, 3.0, 11.0, 30.0}) {
                const double ref = highprec::ref_kummer_1f1(a, b, z);
                worst = std::max(worst, std::abs(specfun::kummer_1f1(a, b, z) - ref) /
                                            std::abs(ref));
            }
    for (double x : {0.25, 1.0, 2.0, 5.0, 10.0, 18.0, 26.0})
        worst = std::max(worst,
                         std::abs(specfun::erfi(x) - highprec::ref_erfi(x)) / highprec::ref_erfi(x));
    for (double x : {0.1, 0.5, 1.0, 2.0, 3.5, 5.0, 6.9, 7.1, 10.0, 26.0, 50.0})
        worst = std::max(worst, std::abs(specfun::dawson(x) - highprec::ref_dawson(x)) /
                                    highprec::ref_dawson(x));

    double worst_id = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.025 + i * (4.975 / 200.0);
        const double lhs = specfun::erfi(x);
        const double rhs = specfun::two_over_sqrt_pi * std::exp(x * x) * specfun::dawson(x);
        worst_id = std::max(worst_id, std::abs(lhs - rhs) / std::abs(lhs));
    }
    line(8, worst <= 1e-10 && worst_id <= 1e-12,
         "specfun vs references max rel dev = " + std::to_string(worst) +
             " (tol 1e-10); erfi/dawson identity dev = " + std::to_string(worst_id) +
             " (tol 1e-12)",
         t.seconds(), 10.0);
}

}  // namespace

int main() {
    std::printf("dunklmorse %s acceptance suite\n", version_string);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("%d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
