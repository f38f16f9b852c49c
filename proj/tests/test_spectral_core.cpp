#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ks/dynamics.hpp"
#include "ks/field.hpp"
#include "ks/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace ks;
using std::numbers::pi;

namespace {

double rel_max_err(const std::vector<double>& a, const std::vector<double>& b) {
    double err = 0.0, scale = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        err = std::max(err, std::abs(a[i] - b[i]));
        scale = std::max(scale, std::abs(a[i]));
    }
    return scale > 0.0 ? err / scale : err;
}

// Full complex reconstruction from the half spectrum; a real field must come
// back with negligible imaginary part.
double max_imag_of_reconstruction(const SpectralField& s) {
    const int n_points = s.grid.n_points;
    const int nyq = s.grid.nyquist_index();
    double worst = 0.0;
    for (int j = 0; j < n_points; ++j) {
        std::complex<double> sum = s.coeffs[0];
        for (int n = 1; n < nyq; ++n) {
            const double theta = 2.0 * pi * n * j / n_points;
            const std::complex<double> e(std::cos(theta), std::sin(theta));
            sum += s.coeffs[n] * e + std::conj(s.coeffs[n]) * std::conj(e);
        }
        sum += s.coeffs[nyq] * std::complex<double>(j % 2 == 0 ? 1.0 : -1.0, 0.0);
        worst = std::max(worst, std::abs(sum.imag()));
    }
    return worst;
}

// Independent oracle: rectangle-rule periodic convolution with the wrapped
// normalized Gaussian, entirely in physical space.
std::vector<double> brute_force_gaussian_convolution(const RealField& u, double sigma) {
    const int n = u.grid.n_points;
    const double L = u.grid.length;
    const double dx = u.grid.dx();
    std::vector<double> kernel(n);
    for (int m = 0; m < n; ++m) {
        double sum = 0.0;
        for (int q = -4; q <= 4; ++q) {
            const double y = u.grid.x(m) + q * L;
            sum += std::exp(-y * y / (2.0 * sigma * sigma)) /
                   (sigma * std::sqrt(2.0 * pi));
        }
        kernel[m] = sum;
    }
    std::vector<double> out(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += u.values[i] * kernel[(j - i + n) % n];
        out[j] = dx * acc;
    }
    return out;
}

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS(Grid(10.0, 15));   // odd
    CHECK_THROWS(Grid(10.0, 8));    // too small
    CHECK_THROWS(Grid(-1.0, 32));
    CHECK_THROWS(Grid(0.0, 32));
    const Grid g(2.0 * pi, 32);
    CHECK(g.wavenumber(1) == doctest::Approx(1.0));
    CHECK(g.dealias_cutoff() == 10);
}

TEST_CASE("zero field transforms to zero coefficients") {
    const Grid g(10.0, 32);
    const SpectralField s = to_spectral(RealField(g));
    for (const auto& c : s.coeffs) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("single cosine lands on mode 1 with coefficient 1/2") {
    const Grid g(5.0, 16);
    RealField f(g);
    for (int j = 0; j < 16; ++j) f.values[j] = std::cos(2.0 * pi * g.x(j) / g.length);
    const SpectralField s = to_spectral(f);
    CHECK(std::abs(s.coeffs[1] - std::complex<double>(0.5, 0.0)) < 1e-14);
    for (int n = 0; n <= 8; ++n) {
        if (n == 1) continue;
        CHECK(std::abs(s.coeffs[n]) < 1e-14);
    }
}

TEST_CASE("round trip reproduces random fields to 1e-12") {
    for (int n_points : {16, 48, 64, 100, 256, 1024}) {
        const Grid g(37.5, n_points);
        const RealField f = random_uniform_field(g, 1234 + n_points);
        const RealField back = to_real(to_spectral(f));
        CHECK(rel_max_err(f.values, back.values) <= 1e-12);
    }
}

TEST_CASE("mode zero is the mean before projection") {
    const Grid g(8.0, 64);
    RealField f = random_uniform_field(g, 7);
    for (double& v : f.values) v += 0.37;
    const SpectralField s = to_spectral(f);
    CHECK(s.coeffs[0].real() == doctest::Approx(f.mean()).epsilon(1e-12));
    CHECK(std::abs(s.coeffs[0].imag()) < 1e-15);
}

TEST_CASE("non-finite input is rejected with a diagnostic") {
    const Grid g(8.0, 32);
    RealField f(g);
    f.values[3] = std::nan("");
    CHECK_THROWS_AS(to_spectral(f), std::invalid_argument);
    f.values[3] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(to_spectral(f), std::invalid_argument);
}

TEST_CASE("project_zero_mean zeroes only the mean mode") {
    const Grid g(8.0, 32);
    SpectralField s(g);
    s.coeffs[0] = {5.0, 0.0};
    s.coeffs[1] = {0.0, 2.0};
    const SpectralField p = project_zero_mean(s);
    CHECK(p.coeffs[0] == std::complex<double>(0.0, 0.0));
    CHECK(p.coeffs[1] == std::complex<double>(0.0, 2.0));

    SUBCASE("idempotent") {
        const SpectralField pp = project_zero_mean(p);
        for (size_t n = 0; n < p.coeffs.size(); ++n) CHECK(pp.coeffs[n] == p.coeffs[n]);
    }

    SUBCASE("constant fields project to zero") {
        RealField c(g);
        for (double& v : c.values) v = 3.25;
        const RealField out = to_real(project_zero_mean(to_spectral(c)));
        CHECK(out.max_norm() < 1e-14);
    }
}

TEST_CASE("spectral derivative matches calculus on single modes") {
    const Grid g(2.0 * pi, 64);
    const double k1 = g.wavenumber(1);
    RealField f(g);
    for (int j = 0; j < 64; ++j) f.values[j] = std::sin(k1 * g.x(j));

    SUBCASE("first derivative of sin is k cos") {
        const RealField d = to_real(derivative(to_spectral(f), 1));
        for (int j = 0; j < 64; ++j)
            CHECK(d.values[j] == doctest::Approx(k1 * std::cos(k1 * g.x(j))).epsilon(1e-12));
    }

    SUBCASE("fourth derivative of sin is k^4 sin") {
        // Rounding leakage into mode n is amplified by n^4, so the sensible
        // bound is absolute at the field scale, not 1e-12 relative.
        const RealField d = to_real(derivative(to_spectral(f), 4));
        double err = 0.0;
        for (int j = 0; j < 64; ++j)
            err = std::max(err, std::abs(d.values[j] - std::pow(k1, 4) * std::sin(k1 * g.x(j))));
        CHECK(err <= 1e-10);
    }
}

TEST_CASE("derivative composition: d2 of d2 equals d4") {
    const Grid g(13.0, 64);
    const SpectralField s = to_spectral(random_uniform_field(g, 99));
    const RealField twice = to_real(derivative(derivative(s, 2), 2));
    const RealField direct = to_real(derivative(s, 4));
    CHECK(rel_max_err(direct.values, twice.values) <= 1e-12);
}

TEST_CASE("derivative zeroes the mean mode and the Nyquist mode") {
    const Grid g(9.0, 32);
    SpectralField s = to_spectral(random_uniform_field(g, 3));
    s.coeffs[0] = {1.5, 0.0};
    const SpectralField d = derivative(s, 1);
    CHECK(std::abs(d.coeffs[0]) == 0.0);
    CHECK(std::abs(d.coeffs[16]) == 0.0);
}

TEST_CASE("dealias zeroes exactly the modes above N/3") {
    const Grid g(10.0, 32);
    SpectralField s(g);
    s.coeffs[10] = {1.0, 0.5};
    s.coeffs[12] = {1.0, -0.25};
    const SpectralField d = dealias(s);
    CHECK(d.coeffs[10] == std::complex<double>(1.0, 0.5));  // 3*10 <= 32
    CHECK(std::abs(d.coeffs[12]) == 0.0);                   // 3*12 > 32

    SUBCASE("idempotent") {
        const SpectralField once = dealias(to_spectral(random_uniform_field(g, 11)));
        const SpectralField twice = dealias(once);
        for (size_t n = 0; n < once.coeffs.size(); ++n) CHECK(twice.coeffs[n] == once.coeffs[n]);
    }
}

TEST_CASE("gaussian multiplier maps the zero field to the zero field") {
    const Grid g(10.0, 32);
    const SpectralField out = gaussian_multiplier(SpectralField(g), 2.0);
    CHECK(out.max_abs_coeff() == 0.0);
}

TEST_CASE("gaussian multiplier damps a single mode by exp(-sigma^2 k^2 / 2)") {
    const Grid g(2.0 * pi, 32);
    RealField f(g);
    for (int j = 0; j < 32; ++j) f.values[j] = std::sin(g.x(j));
    const RealField smoothed = to_real(gaussian_multiplier(to_spectral(f), 2.0));
    const double factor = std::exp(-2.0);  // sigma = 2, k = 1
    for (int j = 0; j < 32; ++j)
        CHECK(smoothed.values[j] == doctest::Approx(factor * std::sin(g.x(j))).epsilon(1e-12));
}

TEST_CASE("gaussian multiplier matches brute-force wrapped convolution") {
    const Grid g(32.0, 64);
    const RealField u = random_uniform_field(g, 2024);
    const RealField spectral = to_real(gaussian_multiplier(to_spectral(u), 2.0));
    const std::vector<double> direct = brute_force_gaussian_convolution(u, 2.0);
    double err = 0.0;
    for (int j = 0; j < 64; ++j) err = std::max(err, std::abs(spectral.values[j] - direct[j]));
    CHECK(err <= 1e-8);
}

TEST_CASE("gaussian multiplier with tiny sigma is near identity on band-limited fields") {
    const Grid g(20.0, 128);
    const SpectralField band_limited = dealias(to_spectral(random_uniform_field(g, 5)));
    const RealField before = to_real(band_limited);
    const RealField after = to_real(gaussian_multiplier(band_limited, 1e-6));
    CHECK(rel_max_err(before.values, after.values) <= 1e-9);
}

TEST_CASE("gaussian multiplier requires positive sigma") {
    const Grid g(10.0, 32);
    const SpectralField s = to_spectral(random_uniform_field(g, 1));
    CHECK_THROWS_AS(gaussian_multiplier(s, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_multiplier(s, -1.0), std::invalid_argument);
}

TEST_CASE("every operation preserves Hermitian symmetry") {
    const Grid g(11.0, 64);
    const SpectralField s = to_spectral(random_uniform_field(g, 77));
    CHECK(max_imag_of_reconstruction(s) <= 1e-12);
    CHECK(max_imag_of_reconstruction(derivative(s, 1)) <= 1e-12);
    CHECK(max_imag_of_reconstruction(derivative(s, 2)) <= 1e-12);
    CHECK(max_imag_of_reconstruction(dealias(s)) <= 1e-12);
    CHECK(max_imag_of_reconstruction(gaussian_multiplier(s, 2.0)) <= 1e-12);
    CHECK(max_imag_of_reconstruction(project_zero_mean(s)) <= 1e-12);
}

TEST_CASE("project_zero_mean commutes with derivative") {
    const Grid g(17.0, 64);
    SpectralField s = to_spectral(random_uniform_field(g, 42));
    s.coeffs[0] = {0.9, 0.0};
    const SpectralField a = derivative(project_zero_mean(s), 2);
    const SpectralField b = project_zero_mean(derivative(s, 2));
    for (size_t n = 0; n < a.coeffs.size(); ++n)
        CHECK(std::abs(a.coeffs[n] - b.coeffs[n]) == 0.0);
}
