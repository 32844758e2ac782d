#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "dunklmorse/angular.hpp"

using namespace dunklmorse;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("DunklParams derived quantities and bounds", "[angular]") {
    DunklParams p{0.3, 0.1, -0.2};
    CHECK_THAT(p.mu(), WithinAbs(0.2, 1e-15));
    CHECK_THAT(p.delta(), WithinAbs(-1.2, 1e-15));
    CHECK_THROWS_AS(DunklParams(-0.5, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(DunklParams(0.0, -0.6, 0.0), std::domain_error);
    CHECK_NOTHROW(DunklParams::uniform(-0.4));
}

TEST_CASE("separation constants", "[angular]") {
    const DunklParams zero{};
    CHECK(angular::azimuthal_eigenvalue(0.0, zero) == 0.0);
    CHECK_THAT(angular::azimuthal_eigenvalue(1.0, zero), WithinAbs(4.0, 1e-15));
    const DunklParams p = DunklParams::uniform(-0.4);
    CHECK_THAT(angular::azimuthal_eigenvalue(1.0, p), WithinRel(0.8, 1e-14));
    // lambda^2 may be negative in the half-odd sector close to the bound
    CHECK(angular::azimuthal_eigenvalue(0.5, p) < 0.0);
    CHECK_THROWS_AS(angular::azimuthal_eigenvalue(-1.0, zero), std::domain_error);

    CHECK(angular::polar_eigenvalue(0.0, 0.0, zero) == 0.0);
    CHECK_THAT(angular::polar_eigenvalue(1.0, 1.0, p), WithinRel(10.4, 1e-14));
    CHECK_THROWS_AS(angular::polar_eigenvalue(-0.5, 1.0, zero), std::domain_error);

    // mu_i -> 0: lambda^2 = 4 m^2, varpi^2 = L(L+1) with L = 2(ell+m)
    for (double m : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
        CHECK_THAT(angular::azimuthal_eigenvalue(m, zero), WithinAbs(4.0 * m * m, 1e-12));
        for (double ell : {0.0, 0.5, 1.0, 2.5}) {
            const double L = 2.0 * (ell + m);
            CHECK_THAT(angular::polar_eigenvalue(ell, m, zero),
                       WithinAbs(L * (L + 1.0), 1e-12));
        }
    }
}

TEST_CASE("azimuthal families: construction rules", "[angular]") {
    const DunklParams p{0.3, 0.1, 0.0};
    CHECK_THROWS_AS(angular::AzimuthalWave({+1, +1, +1}, 0.5, p), std::domain_error);
    CHECK_THROWS_AS(angular::AzimuthalWave({+1, -1, +1}, 1.0, p), std::domain_error);
    CHECK_THROWS_AS(angular::AzimuthalWave({-1, -1, +1}, 0.0, p), std::domain_error);
    CHECK_THROWS_AS(angular::AzimuthalWave({-1, +1, +1}, -0.5, p), std::domain_error);
    CHECK_THROWS_AS(angular::AzimuthalWave({2, 1, 1}, 1.0, p), std::domain_error);

    // (+,+) m=0 is constant
    const angular::AzimuthalWave flat({+1, +1, +1}, 0.0, p);
    const double v0 = flat(0.3);
    for (double phi : {0.0, 1.0, 2.2, 4.4, 6.1})
        CHECK_THAT(flat(phi), WithinRel(v0, 1e-13));
}

TEST_CASE("azimuthal frozen value and reflection parity", "[angular]") {
    const DunklParams p{0.3, 0.1, 0.0};
    const angular::AzimuthalWave wave({+1, +1, +1}, 2.0, p);
    // frozen: P_2^(-0.2,-0.4)(-cos 1.4) / sqrt(closed-form weighted norm)
    CHECK_THAT(wave(0.7), WithinRel(-0.62054377577002158, 1e-8));

    // R1: value at pi - phi = s1 * value at phi; R2: value at -phi = s2 * value
    const ParityLabels sectors[] = {{+1, +1, +1}, {-1, -1, +1}, {+1, -1, +1}, {-1, +1, +1}};
    const double ms[] = {2.0, 2.0, 1.5, 1.5};
    for (int i = 0; i < 4; ++i) {
        const angular::AzimuthalWave w(sectors[i], ms[i], p);
        for (double phi : {0.17, 0.9, 2.6, 3.9, 5.8}) {
            CHECK_THAT(w(pi - phi), WithinAbs(sectors[i].s1 * w(phi), 1e-12));
            CHECK_THAT(w(-phi), WithinAbs(sectors[i].s2 * w(phi), 1e-12));
        }
    }
}

TEST_CASE("azimuthal orthonormality under the Dunkl weight", "[angular]") {
    for (double mu_i : {-0.4, 0.0, 0.4}) {
        const DunklParams p = DunklParams::uniform(mu_i);
        const ParityLabels sector{+1, -1, +1};
        std::vector<angular::AzimuthalWave> waves;
        for (double m = 0.5; m <= 4.5; m += 1.0)
            waves.emplace_back(sector, m, p);
        for (std::size_t i = 0; i < waves.size(); ++i)
            for (std::size_t j = i; j < waves.size(); ++j) {
                const double ov = angular::azimuthal_overlap(waves[i], waves[j]);
                CHECK_THAT(ov, WithinAbs(i == j ? 1.0 : 0.0, 1e-8));
            }
    }
}

TEST_CASE("polar families: construction, parity, frozen value", "[angular]") {
    const DunklParams p = DunklParams::uniform(0.2);
    CHECK_THROWS_AS(angular::PolarWave(+1, 0.5, 0.0, p), std::domain_error);
    CHECK_THROWS_AS(angular::PolarWave(-1, 1.0, 0.0, p), std::domain_error);
    CHECK_THROWS_AS(angular::PolarWave(0, 1.0, 0.0, p), std::domain_error);

    const angular::PolarWave flat(+1, 0.0, 0.0, p);
    const double v0 = flat(0.4);
    for (double th : {0.1, 0.9, 1.8, 2.8})
        CHECK_THAT(flat(th), WithinRel(v0, 1e-13));

    const angular::PolarWave w1(+1, 1.0, 1.0, p);
    CHECK_THAT(w1(1.0), WithinRel(0.68337259219033993, 1e-8));

    for (int s3 : {+1, -1}) {
        const double ell = s3 == 1 ? 2.0 : 1.5;
        const angular::PolarWave w(s3, ell, 1.0, p);
        for (double th : {0.3, 0.8, 1.4})
            CHECK_THAT(w(pi - th), WithinAbs(s3 * w(th), 1e-12));
    }
}

TEST_CASE("polar orthonormality within a sector", "[angular]") {
    const DunklParams p = DunklParams::uniform(-0.4);
    std::vector<angular::PolarWave> waves;
    for (double ell = 0.0; ell <= 3.0; ell += 1.0)
        waves.emplace_back(+1, ell, 1.0, p);
    for (std::size_t i = 0; i < waves.size(); ++i)
        for (std::size_t j = i; j < waves.size(); ++j)
            CHECK_THAT(angular::polar_overlap(waves[i], waves[j]),
                       WithinAbs(i == j ? 1.0 : 0.0, 1e-8));
}

TEST_CASE("azimuthal operator residuals", "[angular]") {
    // constant eigenfunction: residual is pure rounding
    CHECK(angular::verify_azimuthal_eigen({+1, +1, +1}, 0.0, DunklParams::uniform(0.3), 256) < 1e-10);

    const DunklParams p = DunklParams::uniform(0.3);
    CHECK(angular::verify_azimuthal_eigen({+1, +1, +1}, 1.0, p, 2048) <= 1e-6);
    CHECK(angular::verify_azimuthal_eigen({-1, +1, +1}, 0.5, p, 2048) <= 1e-6);

    // residual falls with refinement
    const double coarse = angular::verify_azimuthal_eigen({-1, -1, +1}, 2.0, p, 256);
    const double fine = angular::verify_azimuthal_eigen({-1, -1, +1}, 2.0, p, 1024);
    CHECK(fine < coarse);

    // grids hitting a coordinate singularity are rejected (N = 2 mod 4 puts a
    // half-offset node exactly on pi/2)
    CHECK_THROWS_AS(angular::verify_azimuthal_eigen({+1, +1, +1}, 1.0, p, 1026),
                    std::domain_error);
    CHECK_THROWS_AS(angular::verify_azimuthal_eigen({+1, +1, +1}, 1.0, p, 32),
                    std::domain_error);
}

TEST_CASE("polar operator residuals", "[angular]") {
    const DunklParams p = DunklParams::uniform(0.3);
    CHECK(angular::verify_polar_eigen(+1, 0.0, 0.0, p, 256) < 1e-10);
    CHECK(angular::verify_polar_eigen(+1, 2.0, 1.0, p, 2048) <= 1e-5);
    CHECK(angular::verify_polar_eigen(-1, 1.5, 0.5, p, 2048) <= 1e-5);
    CHECK(angular::verify_polar_eigen(-1, 0.5, 2.0, DunklParams::uniform(-0.4), 2048) <= 1e-5);
}
