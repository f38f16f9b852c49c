#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ks/commands.hpp"
#include "ks/linear_analysis.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace ks;
using std::numbers::pi;

TEST_CASE("growth rate at landmark wavenumbers") {
    CHECK(growth_rate(0.0) == 0.0);
    CHECK(growth_rate(1.0) == 0.0);
    CHECK(growth_rate(1.0 / std::sqrt(2.0)) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("growth rate is even in k") {
    for (double k : {0.1, 0.5, 0.9, 1.3, 2.7})
        CHECK(growth_rate(k) == growth_rate(-k));
}

TEST_CASE("unstable mode census") {
    SUBCASE("L = 2 pi has none: k_1 = 1 is marginal") {
        CHECK(unstable_modes(Grid(2.0 * pi, 32)).empty());
    }

    SUBCASE("L = 4 has none: k_1 > 1") {
        CHECK(unstable_modes(Grid(4.0, 32)).empty());
    }

    SUBCASE("L = 32 pi has exactly the 30 modes n = +-1..15") {
        const Grid grid(32.0 * pi, 256);
        const auto modes = unstable_modes(grid);
        CHECK(modes.size() == 30);

        // Brute-force oracle: test every representable mode index directly.
        std::set<int> expected;
        for (int n = -grid.nyquist_index(); n <= grid.nyquist_index(); ++n) {
            if (n == 0) continue;
            const double k = grid.wavenumber(n);
            if (k * k - std::pow(k, 4) > 0.0) expected.insert(n);
        }
        std::set<int> got;
        for (const ModeInfo& m : modes) got.insert(m.n);
        CHECK(got == expected);
        CHECK(expected.count(15) == 1);
        CHECK(expected.count(16) == 0);
    }

    SUBCASE("rates are sorted descending") {
        const auto modes = unstable_modes(Grid(32.0 * pi, 256));
        for (size_t i = 1; i < modes.size(); ++i) CHECK(modes[i - 1].rate >= modes[i].rate);
    }

    SUBCASE("the census never shrinks as L grows") {
        size_t prev = 0;
        for (double L = 10.0; L <= 120.0; L += 10.0) {
            const size_t count = unstable_modes(Grid(L, 256)).size();
            CHECK(count >= prev);
            prev = count;
        }
    }
}

TEST_CASE("fastest mode") {
    SUBCASE("continuum maximizer") {
        const FastestMode f = fastest_mode(Grid(32.0 * pi, 256));
        CHECK(f.k_star == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(f.wavelength_star == doctest::Approx(std::pow(2.0, 1.5) * pi).epsilon(1e-15));
        // 0.1125 to four significant figures
        CHECK(std::abs(f.inverse_wavelength_star - 0.1125) < 5e-5);
    }

    SUBCASE("L = 32 pi picks n = 11 (argmax over the enumerated rates)") {
        const Grid grid(32.0 * pi, 256);
        int brute_best = 1;
        for (int n = 2; n <= grid.nyquist_index(); ++n) {
            if (growth_rate(grid.wavenumber(n)) > growth_rate(grid.wavenumber(brute_best)))
                brute_best = n;
        }
        CHECK(brute_best == 11);
        CHECK(fastest_mode(grid).discrete.n == 11);
    }

    SUBCASE("when k* is on the grid the discrete rate is exactly 1/4") {
        const Grid grid(3.0 * std::pow(2.0, 1.5) * pi, 48);  // k_3 = 1/sqrt(2)
        const FastestMode f = fastest_mode(grid);
        CHECK(f.discrete.n == 3);
        CHECK(f.discrete.rate == doctest::Approx(0.25).epsilon(1e-14));
    }
}

TEST_CASE("small-amplitude simulations reproduce the linear rates within 1%") {
    const Grid grid(32.0 * pi, 128);
    for (int n : {1, 5, 11, 15}) {
        const double theory = growth_rate(grid.wavenumber(n));
        const double measured = measured_mode_rate(grid, n, 0.05, 1.0, 1e-8);
        CHECK(std::abs(measured - theory) <= 0.01 * std::abs(theory));
    }
}

TEST_CASE("the marginal mode at L = 2 pi measures as rate zero") {
    const double measured = measured_mode_rate(Grid(2.0 * pi, 32), 1, 0.05, 1.0, 1e-8);
    CHECK(std::abs(measured) <= 1e-4);
}
