#include "pdmosc/errors.hpp"
#include "pdmosc/tridiag.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace pdmosc;

namespace {

// Toeplitz tridiag(-1, 2, -1): eigenvalues 2 - 2 cos(k pi / (N+1)).
SymTriMatrix laplacian(std::size_t n) {
    return SymTriMatrix(std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0));
}

}  // namespace

TEST_CASE("construction validates sizes") {
    CHECK_THROWS_AS(SymTriMatrix({1.0, 2.0}, {1.0, 2.0}), DomainError);
    CHECK_NOTHROW(SymTriMatrix({1.0}, {}));
}

TEST_CASE("discrete laplacian eigenvalues") {
    const std::size_t n = 200;
    const auto ev = eigenvalues_lowest(laplacian(n), 10, {0.0, 0.0});
    REQUIRE(ev.size() == 10);
    for (std::size_t k = 0; k < 10; ++k) {
        const double want = 2.0 - 2.0 * std::cos((k + 1) * std::numbers::pi / (n + 1));
        CHECK(std::abs(ev[k] - want) < 4e-16 * 4.0);
    }
}

TEST_CASE("sturm count brackets the spectrum") {
    const auto m = laplacian(50);
    const auto [lo, hi] = m.gershgorin_bounds();
    CHECK(lo <= 0.0);
    CHECK(hi >= 4.0);
    CHECK(sturm_count(m, lo - 1e-9) == 0);
    CHECK(sturm_count(m, hi + 1e-9) == 50);
    const double l3 = 2.0 - 2.0 * std::cos(3 * std::numbers::pi / 51);
    CHECK(sturm_count(m, l3 - 1e-9) == 2);
    CHECK(sturm_count(m, l3 + 1e-9) == 3);
}

TEST_CASE("reversed matrix has the same spectrum") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> d(40), e(39);
    for (auto& v : d) v = u(rng) * 3;
    for (auto& v : e) v = u(rng);
    const SymTriMatrix m(d, e);
    const auto a = eigenvalues_lowest(m, 40, {0.0, 0.0});
    const auto b = eigenvalues_lowest(m.reversed(), 40, {0.0, 0.0});
    for (std::size_t i = 0; i < 40; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
    double trace = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < 40; ++i) {
        trace += d[i];
        sum += a[i];
        if (i) CHECK(a[i] >= a[i - 1]);
    }
    CHECK(std::abs(trace - sum) < 1e-12);
}

TEST_CASE("2x2 closed form") {
    // [[a, b], [b, c]]
    const double a = 1.5, b = 0.75, c = -2.0;
    const auto ev = eigenvalues_lowest(SymTriMatrix({a, c}, {b}), 2, {0.0, 0.0});
    const double mid = 0.5 * (a + c), rad = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    CHECK(ev[0] == doctest::Approx(mid - rad).epsilon(1e-15));
    CHECK(ev[1] == doctest::Approx(mid + rad).epsilon(1e-15));
}

TEST_CASE("zero off-diagonal splits into the sorted diagonal") {
    const auto ev = eigenvalues_lowest(SymTriMatrix({3.0, -1.0, 2.0, 0.5}, {0.0, 0.0, 0.0}), 4, {0.0, 0.0});
    CHECK(ev == std::vector<double>{-1.0, 0.5, 2.0, 3.0});
}

TEST_CASE("default tolerance") {
    const auto ev = eigenvalues_lowest(laplacian(30), 3);
    for (std::size_t k = 0; k < 3; ++k) {
        const double want = 2.0 - 2.0 * std::cos((k + 1) * std::numbers::pi / 31);
        CHECK(std::abs(ev[k] - want) <= 1e-12);
    }
}

TEST_CASE("requesting more eigenvalues than the size throws") {
    CHECK_THROWS_AS(eigenvalues_lowest(laplacian(5), 6), DomainError);
}
