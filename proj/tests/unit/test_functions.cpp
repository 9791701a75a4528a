#include "test_helpers.hpp"

#include "loewner/integrate.hpp"

#include <doctest.h>

#include <numbers>

using namespace loewner;
using namespace loewner::testing;

TEST_CASE("catalog values and derivatives") {
    const FunctionSpec sqrt_fn = catalog_get("pow:0.5");
    CHECK(sqrt_fn.eval(4.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sqrt_fn.deriv(1, 4.0) == doctest::Approx(0.25).epsilon(1e-14));

    const FunctionSpec log_fn = catalog_get("log");
    CHECK(log_fn.deriv(2, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(log_fn.deriv(3, 2.0) == doctest::Approx(2.0 / 8.0).epsilon(1e-14));

    CHECK(catalog_get("square").eval(3.0) == doctest::Approx(9.0));
    CHECK(catalog_get("square_minus_one").eval(3.0) == doctest::Approx(8.0));
    CHECK(catalog_get("exp").deriv(4, 0.0) == doctest::Approx(1.0));
    CHECK(catalog_get("pow:-1").deriv(1, 2.0) == doctest::Approx(-0.25));
}

TEST_CASE("catalog flags") {
    CHECK(catalog_get("pow:0.5").operator_monotone);
    CHECK(catalog_get("pow:0").operator_monotone);
    CHECK(catalog_get("pow:1").operator_monotone);
    CHECK(catalog_get("log").operator_monotone);
    CHECK_FALSE(catalog_get("pow:1.5").operator_monotone);
    CHECK_FALSE(catalog_get("pow:-0.5").operator_monotone);
    CHECK_FALSE(catalog_get("exp").operator_monotone);
    CHECK_FALSE(catalog_get("square").operator_monotone);

    CHECK(catalog_get("pow:0.5").norm_deriv_convex);
    CHECK(catalog_get("pow:2.5").norm_deriv_convex);
    CHECK_FALSE(catalog_get("pow:1.5").norm_deriv_convex);
    CHECK(catalog_get("pow:1.5").s_convex_order == doctest::Approx(0.5));
    CHECK_FALSE(catalog_get("pow:0.5").s_convex_order.has_value());

    CHECK(catalog_get("pow:0.5").measure.has_value());
    CHECK(catalog_get("log").measure.has_value());
    CHECK_FALSE(catalog_get("pow:1").measure.has_value());
    CHECK_FALSE(catalog_get("exp").measure.has_value());
}

TEST_CASE("catalog id errors") {
    CHECK_THROWS_AS(catalog_get("cosh"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("pow:abc"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("pow:"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("product:log"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("product:log:nope"), std::invalid_argument);
}

TEST_CASE("product ids with parameterized factors") {
    const FunctionSpec cube = catalog_get("product:square:pow:1");
    CHECK(cube.eval(2.0) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(cube.deriv(1, 2.0) == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(cube.deriv(2, 2.0) == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(cube.deriv(3, 2.0) == doctest::Approx(6.0).epsilon(1e-14));

    const FunctionSpec mixed = catalog_get("product:pow:0.5:log");
    const double t = 3.0;
    CHECK(mixed.eval(t) == doctest::Approx(std::sqrt(t) * std::log(t)).epsilon(1e-14));
    const double expected_d1 = 0.5 * std::pow(t, -0.5) * std::log(t) + std::sqrt(t) / t;
    CHECK(mixed.deriv(1, t) == doctest::Approx(expected_d1).epsilon(1e-14));
}

TEST_CASE("domain enforcement") {
    const FunctionSpec sqrt_fn = catalog_get("pow:0.5");
    CHECK_THROWS_AS(sqrt_fn.eval(0.0), DomainError);
    CHECK_THROWS_AS(sqrt_fn.eval(-1.0), DomainError);
    CHECK_NOTHROW(catalog_get("square").eval(-1.0));
    CHECK_THROWS_AS(divided_difference(catalog_get("log"), {1.0, -2.0}), DomainError);
    CHECK_THROWS_AS(sqrt_fn.deriv(5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(divided_difference(sqrt_fn, {1.0, 2.0, 3.0, 4.0, 5.0}), std::invalid_argument);
}

TEST_CASE("divided differences") {
    CHECK(divided_difference(catalog_get("square"), {1.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(divided_difference(catalog_get("log"), {1.0, std::numbers::e}) ==
          doctest::Approx(1.0 / (std::numbers::e - 1.0)).epsilon(1e-14));
    // confluent cluster collapses to the derivative
    CHECK(divided_difference(catalog_get("pow:0.5"), {4.0, 4.0 + 1e-12}) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(divided_difference(catalog_get("square"), {3.0, 3.0, 3.0}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // third order for t^2 vanishes
    CHECK(divided_difference(catalog_get("square"), {1.0, 2.0, 4.0, 7.0}) ==
          doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("divided differences are symmetric in their points") {
    const std::vector<std::string> ids = {"pow:0.5", "log", "exp", "square", "product:pow:0.5:log"};
    for (const auto &id : ids) {
        const FunctionSpec f = catalog_get(id);
        const std::vector<double> pts = {0.7, 2.9, 1.3, 5.2};
        for (size_t order = 1; order < pts.size(); ++order) {
            std::vector<double> fwd(pts.begin(), pts.begin() + order + 1);
            std::vector<double> rev(fwd.rbegin(), fwd.rend());
            std::swap(rev[0], rev[order / 2]);
            const double a = divided_difference(f, fwd);
            const double b = divided_difference(f, rev);
            CHECK(rel_diff(a, b) <= 1e-9);
        }
    }
}

TEST_CASE("derivatives agree with finite differences of the previous order") {
    const std::vector<std::string> ids = {"pow:0.5",  "pow:0.3", "pow:1.5", "pow:-1", "log",
                                          "exp",      "square",  "square_minus_one",
                                          "product:pow:0.5:log"};
    for (const auto &id : ids) {
        const FunctionSpec f = catalog_get(id);
        for (int n = 1; n <= 4; ++n)
            for (double t : {0.6, 1.0, 1.7, 3.1, 6.4}) {
                const double h = 1e-4 * (1.0 + std::abs(t));
                const double fd = (f.deriv(n - 1, t + h) - f.deriv(n - 1, t - h)) / (2.0 * h);
                const double exact = f.deriv(n, t);
                if (std::abs(exact) < 1e-12) {
                    CHECK(std::abs(fd) < 1e-6);
                } else {
                    CHECK(rel_diff(fd, exact) <= 1e-5);
                }
            }
    }
}

TEST_CASE("operator monotone derivative signs alternate") {
    for (const auto &id : {"pow:0.3", "pow:0.5", "pow:0.7", "log"}) {
        const FunctionSpec f = catalog_get(id);
        for (double t : {0.2, 0.9, 2.7, 11.0}) {
            CHECK(f.deriv(1, t) > 0.0);
            CHECK(f.deriv(2, t) < 0.0);
            CHECK(f.deriv(3, t) > 0.0);
        }
    }
}

TEST_CASE("representation measures reproduce f'") {
    SUBCASE("sqrt at t = 4") {
        CHECK(rel_diff(measure_derivative(catalog_get("pow:0.5"), 4.0), 0.25) <= 1e-6);
    }
    SUBCASE("powers and log on a grid") {
        for (const auto &id : {"pow:0.3", "pow:0.5", "pow:0.7", "log"}) {
            const FunctionSpec f = catalog_get(id);
            for (double t : {0.5, 1.0, 2.0, 8.0})
                CHECK(rel_diff(measure_derivative(f, t), f.deriv(1, t)) <= 1e-6);
        }
    }
    SUBCASE("density matches the closed form") {
        const FunctionSpec f = catalog_get("pow:0.5");
        const double lambda = 2.3;
        CHECK(f.measure->density(lambda) ==
              doctest::Approx(std::sin(0.5 * std::numbers::pi) / std::numbers::pi *
                              std::sqrt(lambda)));
        CHECK(catalog_get("log").measure->density(lambda) == doctest::Approx(1.0));
    }
    SUBCASE("functions without a measure refuse") {
        CHECK_THROWS_AS(measure_derivative(catalog_get("exp"), 1.0), std::invalid_argument);
    }
}

TEST_CASE("adaptive quadrature handles smooth and kinked integrands") {
    const double smooth = integrate_adaptive([](double t) { return std::exp(t); }, 0.0, 1.0, 1e-10);
    CHECK(rel_diff(smooth, std::numbers::e - 1.0) <= 1e-10);
    const double kinked =
        integrate_adaptive([](double t) { return std::abs(t - 0.3); }, 0.0, 1.0, 1e-10);
    CHECK(rel_diff(kinked, 0.3 * 0.3 / 2.0 + 0.7 * 0.7 / 2.0) <= 1e-9);
}
