#include "test_helpers.hpp"

#include "loewner/checks.hpp"

#include <doctest.h>

using namespace loewner;
using namespace loewner::testing;

namespace {

const NormKind kOp = NormKind::operator_norm();

} // namespace

TEST_CASE("report margins and the pass rule") {
    Witness w;
    const IneqReport ok = make_report("t", 1.0, 2.0, w);
    CHECK(ok.margin == doctest::Approx(1.0));
    CHECK(ok.pass);
    const IneqReport edge = make_report("t", 1.0 + 1.5e-8, 1.0, w);
    CHECK(edge.pass); // within the relative slack
    const IneqReport bad = make_report("t", 1.1, 1.0, w);
    CHECK_FALSE(bad.pass);
}

TEST_CASE("quasi-convexity of the derivative norm map") {
    const FunctionSpec log_fn = catalog_get("log");
    SUBCASE("degenerate segment is an equality") {
        const HermitianMatrix a = random_pd(3, 0.3, 5.0, 100);
        for (int n : {1, 2, 3}) {
            const IneqReport r = check_quasiconvex_fn_norm(log_fn, a, a, 0.37, n);
            CHECK(r.pass);
            CHECK(std::abs(r.margin) <= 1e-12 * (1.0 + r.rhs));
        }
    }
    SUBCASE("diagonal example evaluates in closed form") {
        const IneqReport r =
            check_quasiconvex_fn_norm(log_fn, hdiag({1.0, 2.0}), hdiag({3.0, 4.0}), 0.5, 1);
        CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.pass);
    }
    SUBCASE("the square-minus-one counterexample fails as the theory predicts") {
        const FunctionSpec f = catalog_get("square_minus_one");
        const HermitianMatrix minus(Complex(-1.0, 0.0) * ComplexMatrix::identity(2));
        const HermitianMatrix plus(ComplexMatrix::identity(2));
        const IneqReport r = check_quasiconvex_fn_norm(f, minus, plus, 0.5, 0, true);
        CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.rhs == doctest::Approx(0.0).scale(1.0));
        CHECK_FALSE(r.pass);
        CHECK(r.expected_fail);
    }
    SUBCASE("gating") {
        const HermitianMatrix a = random_pd(2, 0.5, 2.0, 101);
        CHECK_THROWS_AS(check_quasiconvex_fn_norm(catalog_get("exp"), a, a, 0.5, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(check_quasiconvex_fn_norm(catalog_get("log"), a, a, 0.5, 0),
                        std::invalid_argument);
        CHECK_NOTHROW(check_quasiconvex_fn_norm(catalog_get("pow:2.5"), a, a, 0.5, 0));
    }
}

TEST_CASE("sampled Frechet norm bound") {
    SUBCASE("identity input in the operator norm is tight") {
        const HermitianMatrix eye(ComplexMatrix::identity(3));
        const IneqReport r = check_frechet_norm_bound(catalog_get("log"), eye, 1, kOp, 20, 3);
        CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.pass);
    }
    SUBCASE("power function on a diagonal") {
        const IneqReport r =
            check_frechet_norm_bound(catalog_get("pow:0.5"), hdiag({4.0, 9.0}), 1, kOp, 50, 4);
        CHECK(r.rhs == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(r.lhs <= 0.25 + 1e-8);
        CHECK(r.pass);
    }
    SUBCASE("second order over several norms") {
        const HermitianMatrix a = random_pd(3, 0.3, 5.0, 102);
        for (const char *kind : {"op", "tr", "fro", "s:3", "kf:2"}) {
            const IneqReport r = check_frechet_norm_bound(catalog_get("log"), a, 2,
                                                          NormKind::parse(kind), 60, 5);
            CHECK(r.pass);
        }
    }
    SUBCASE("non-monotone functions are refused") {
        const HermitianMatrix a = random_pd(2, 0.5, 2.0, 103);
        CHECK_THROWS_AS(check_frechet_norm_bound(catalog_get("square"), a, 1, kOp, 5, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("weighted mean defect bounds") {
    const FunctionSpec log_fn = catalog_get("log");
    SUBCASE("degenerate segment gives zero defect") {
        const HermitianMatrix a = random_pd(3, 0.4, 4.0, 110);
        const IneqReport r = check_hh_weighted(log_fn, a, a, 0.3, HHMode::QuasiConvex, 1.0, kOp);
        CHECK(r.lhs <= 1e-10);
        CHECK(r.pass);
    }
    SUBCASE("scalar closed form for log between 1 and 3") {
        const IneqReport r = check_hh_weighted(log_fn, hdiag({1.0, 1.0}), hdiag({3.0, 3.0}), 0.5,
                                               HHMode::QuasiConvex, 1.0, kOp);
        const double expected_lhs = std::log(3.0) - 1.0; // |log 3 / 2 - (3 log 3 - 2)/2|
        CHECK(r.lhs == doctest::Approx(expected_lhs).epsilon(1e-7));
        CHECK(r.rhs == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.pass);
    }
    SUBCASE("endpoint weights reduce to the half bound") {
        const HermitianMatrix a = random_pd(3, 0.3, 5.0, 111);
        const HermitianMatrix b = random_pd(3, 0.3, 5.0, 112);
        for (double nu : {0.0, 1.0})
            for (const char *kind : {"op", "tr"}) {
                const NormKind k = NormKind::parse(kind);
                const IneqReport r = check_hh_weighted(log_fn, a, b, nu, HHMode::QuasiConvex, 1.0, k);
                const double da = op_norm_fn_deriv(log_fn, 1, a);
                const double db = op_norm_fn_deriv(log_fn, 1, b);
                const double half_bound = 0.5 * norm(b - a, k) * std::max(da, db);
                CHECK(std::abs(r.rhs - half_bound) <= 1e-10 * (1.0 + half_bound));
                CHECK(r.pass);
            }
    }
    SUBCASE("convex and s-convex modes hold on random draws") {
        const HermitianMatrix a = random_pd(4, 0.2, 6.0, 113);
        const HermitianMatrix b = random_pd(4, 0.2, 6.0, 114);
        for (double nu : {0.0, 0.25, 0.6, 1.0}) {
            CHECK(check_hh_weighted(catalog_get("pow:0.5"), a, b, nu, HHMode::Convex, 1.0, kOp).pass);
            CHECK(check_hh_weighted(catalog_get("square_minus_one"), a, b, nu, HHMode::Convex, 1.0,
                                    kOp)
                      .pass);
            CHECK(check_hh_weighted(catalog_get("pow:1.5"), a, b, nu, HHMode::SConvex, 0.5, kOp)
                      .pass);
        }
    }
    SUBCASE("gating") {
        const HermitianMatrix a = random_pd(2, 0.5, 2.0, 115);
        CHECK_THROWS_AS(check_hh_weighted(log_fn, a, a, 0.5, HHMode::Convex, 1.0, kOp),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            check_hh_weighted(catalog_get("pow:0.5"), a, a, 0.5, HHMode::Convex, 1.0,
                              NormKind::trace()),
            std::invalid_argument);
        CHECK_THROWS_AS(check_hh_weighted(catalog_get("pow:1.5"), a, a, 0.5, HHMode::SConvex, 0.7,
                                          kOp),
                        std::invalid_argument);
        CHECK_THROWS_AS(check_hh_weighted(catalog_get("square"), a, a, 0.5, HHMode::QuasiConvex,
                                          1.0, NormKind::trace()),
                        std::invalid_argument);
    }
}

TEST_CASE("product-rule mean defect bound") {
    const FunctionSpec f = catalog_get("pow:0.5");
    const FunctionSpec g = catalog_get("log");
    SUBCASE("constant second factor reduces to the single-function bound") {
        const HermitianMatrix a = random_pd(3, 0.3, 5.0, 120);
        const HermitianMatrix b = random_pd(3, 0.3, 5.0, 121);
        const FunctionSpec one = catalog_get("pow:0");
        const IneqReport via_product = check_product_hh(f, one, a, b, 0.3, kOp);
        const IneqReport direct = check_hh_weighted(f, a, b, 0.3, HHMode::QuasiConvex, 1.0, kOp);
        CHECK(std::abs(via_product.lhs - direct.lhs) <= 1e-10 * (1.0 + direct.lhs));
        CHECK(std::abs(via_product.rhs - direct.rhs) <= 1e-10 * (1.0 + direct.rhs));
    }
    SUBCASE("degenerate segment gives zero defect") {
        const HermitianMatrix a = random_pd(3, 0.4, 4.0, 122);
        const IneqReport r = check_product_hh(f, g, a, a, 0.4, NormKind::trace());
        CHECK(r.lhs <= 1e-10);
        CHECK(r.pass);
    }
    SUBCASE("random pair in the trace norm") {
        const HermitianMatrix a = random_pd(4, 0.2, 5.0, 123);
        const HermitianMatrix b = random_pd(4, 0.2, 5.0, 124);
        CHECK(check_product_hh(f, g, a, b, 0.3, NormKind::trace()).pass);
    }
    SUBCASE("both factors must be operator monotone") {
        const HermitianMatrix a = random_pd(2, 0.5, 2.0, 125);
        CHECK_THROWS_AS(check_product_hh(f, catalog_get("exp"), a, a, 0.5, kOp),
                        std::invalid_argument);
    }
    SUBCASE("endpoint difference of the product function") {
        const HermitianMatrix a = random_pd(4, 0.2, 5.0, 126);
        const HermitianMatrix b = random_pd(4, 0.2, 5.0, 127);
        const IneqReport same = check_product_perturbation(f, g, a, a, kOp);
        CHECK(same.lhs <= 1e-10);
        for (const char *kind : {"op", "tr", "fro"})
            CHECK(check_product_perturbation(f, g, a, b, NormKind::parse(kind)).pass);
        CHECK_THROWS_AS(check_product_perturbation(f, catalog_get("square"), a, b, kOp),
                        std::invalid_argument);
    }
}

TEST_CASE("commutator bounds") {
    const HermitianMatrix a = random_pd(3, 0.3, 5.0, 130);
    const HermitianMatrix b = random_pd(3, 0.3, 5.0, 131);
    const ComplexMatrix x = random_complex(3, 132);
    const FunctionSpec f = catalog_get("pow:0.5");
    const FunctionSpec g = catalog_get("log");

    SUBCASE("zero X passes trivially") {
        const IneqReport r = check_commutator_bounds(f, g, a, b, ComplexMatrix(3), kOp,
                                                     CommutatorVariant::Product, {});
        CHECK(r.lhs == 0.0);
        CHECK(r.pass);
    }
    SUBCASE("balanced Heinz weight vanishes on both sides") {
        CommutatorParams p;
        p.nu = 0.5;
        const IneqReport r = check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, kOp,
                                                     CommutatorVariant::Heinz, p);
        CHECK(r.lhs == 0.0);
        CHECK(r.rhs == 0.0);
        CHECK(r.pass);
    }
    SUBCASE("scalar power-difference example") {
        const HermitianMatrix sa = hdiag({4.0});
        const HermitianMatrix sb = hdiag({9.0});
        ComplexMatrix sx(1);
        sx(0, 0) = 1.0;
        const IneqReport r =
            check_commutator_bounds(f, std::nullopt, sa, sb, sx, kOp, CommutatorVariant::Function, {});
        CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.rhs == doctest::Approx(1.25).epsilon(1e-12));
        CHECK(r.pass);
    }
    SUBCASE("weighted powers admit weights outside [0, 1] when alpha allows") {
        CommutatorParams p;
        p.alpha = 2.0;
        for (double nu : {-0.4, 1.25, 1.5}) {
            p.nu = nu;
            const IneqReport r = check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, kOp,
                                                         CommutatorVariant::KapilWeighted, p);
            CHECK(r.pass);
        }
        p.nu = 1.6; // beyond (1 + alpha)/2
        CHECK_THROWS_AS(check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, kOp,
                                                CommutatorVariant::KapilWeighted, p),
                        std::invalid_argument);
        CHECK_THROWS_AS(heinz_difference(a, b, x, 1.25), std::invalid_argument);
        CHECK((weighted_power_difference(a, b, x, 0.3) - heinz_difference(a, b, x, 0.3))
                  .frobenius_norm() == 0.0);
    }
    SUBCASE("unit alpha ties the weighted variants to their parents") {
        CommutatorParams p;
        p.nu = 0.25;
        p.alpha = 1.0;
        const IneqReport weighted = check_commutator_bounds(std::nullopt, std::nullopt, a, b, x,
                                                            kOp, CommutatorVariant::KapilWeighted, p);
        const IneqReport heinz = check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, kOp,
                                                         CommutatorVariant::Heinz, p);
        CHECK(weighted.lhs == doctest::Approx(heinz.lhs).epsilon(1e-10));
        CHECK(weighted.rhs == doctest::Approx(heinz.rhs).epsilon(1e-10));

        const IneqReport inverse = check_commutator_bounds(std::nullopt, std::nullopt, a, b, x,
                                                           kOp, CommutatorVariant::PowerLowerBound, p);
        CHECK(std::abs(inverse.margin) <= 1e-9 * (1.0 + inverse.rhs));
    }
    SUBCASE("random draws across variants and norms") {
        for (const char *kind : {"op", "tr", "fro"}) {
            const NormKind k = NormKind::parse(kind);
            CHECK(check_commutator_bounds(f, g, a, b, x, k, CommutatorVariant::Product, {}).pass);
            CHECK(check_commutator_bounds(g, std::nullopt, a, b, x, k, CommutatorVariant::Function, {})
                      .pass);
            CommutatorParams p;
            p.nu = 0.2;
            p.r = 0.7;
            p.alpha = 1.8;
            CHECK(check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, k,
                                          CommutatorVariant::Heinz, p)
                      .pass);
            CHECK(check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, k,
                                          CommutatorVariant::KapilPower, p)
                      .pass);
            CHECK(check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, k,
                                          CommutatorVariant::KapilWeighted, p)
                      .pass);
            CHECK(check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, k,
                                          CommutatorVariant::PowerLowerBound, p)
                      .pass);
        }
    }
    SUBCASE("scaling all inputs keeps the homogeneous variants stable") {
        for (double c : {0.5, 2.0}) {
            const HermitianMatrix ca = c * a;
            const HermitianMatrix cb = c * b;
            const ComplexMatrix cx = Complex(c, 0.0) * x;
            CommutatorParams p;
            p.nu = 0.2;
            p.r = 0.5;
            const bool heinz_base = check_commutator_bounds(std::nullopt, std::nullopt, a, b, x,
                                                            kOp, CommutatorVariant::Heinz, p)
                                        .pass;
            const bool heinz_scaled = check_commutator_bounds(std::nullopt, std::nullopt, ca, cb,
                                                              cx, kOp, CommutatorVariant::Heinz, p)
                                          .pass;
            CHECK(heinz_base == heinz_scaled);
            const bool fn_comm_base =
                check_commutator_bounds(f, std::nullopt, a, b, x, kOp, CommutatorVariant::Function, {})
                    .pass;
            const bool fn_comm_scaled =
                check_commutator_bounds(f, std::nullopt, ca, cb, cx, kOp, CommutatorVariant::Function, {})
                    .pass;
            CHECK(fn_comm_base == fn_comm_scaled);
        }
    }
    SUBCASE("parameter validation") {
        CommutatorParams p;
        p.r = 1.5;
        CHECK_THROWS_AS(check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, kOp,
                                                CommutatorVariant::KapilPower, p),
                        std::invalid_argument);
        p.alpha = 0.5;
        CHECK_THROWS_AS(check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, kOp,
                                                CommutatorVariant::PowerLowerBound, p),
                        std::invalid_argument);
        CHECK_THROWS_AS(check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, kOp,
                                                CommutatorVariant::Product, {}),
                        std::invalid_argument);
        CHECK_THROWS_AS(check_commutator_bounds(std::nullopt, std::nullopt, hdiag({1.0, -1.0, 1.0}),
                                                b, x, kOp, CommutatorVariant::Heinz, {}),
                        DomainError);
    }
}

TEST_CASE("perturbation bounds") {
    const FunctionSpec log_fn = catalog_get("log");
    const HermitianMatrix a = random_pd(4, 0.2, 6.0, 140);
    const HermitianMatrix b = random_pd(4, 0.2, 6.0, 141);

    SUBCASE("identical endpoints give a zero difference") {
        const IneqReport r = check_perturbation(log_fn, a, a, PerturbMode::QuasiConvex, 1.0, kOp);
        CHECK(r.lhs <= 1e-10);
        CHECK(r.pass);
    }
    SUBCASE("modes hold on random draws") {
        CHECK(check_perturbation(log_fn, a, b, PerturbMode::QuasiConvex, 1.0, NormKind::trace())
                  .pass);
        CHECK(check_perturbation(catalog_get("pow:0.5"), a, b, PerturbMode::Convex, 1.0, kOp).pass);
        CHECK(check_perturbation(catalog_get("pow:2.5"), a, b, PerturbMode::Convex, 1.0, kOp).pass);
        CHECK(check_perturbation(catalog_get("pow:1.5"), a, b, PerturbMode::SConvex, 0.5, kOp).pass);
    }
    SUBCASE("power bounds match their inverse-power closed form") {
        // r * max{||A^(r-1)||, ||B^(r-1)||} = r * max{||A^-1||, ||B^-1||}^(1-r)
        for (double r : {0.3, 0.5, 0.9}) {
            const double direct =
                r * std::max(norm(matrix_function(power_function(r - 1.0), a), kOp),
                             norm(matrix_function(power_function(r - 1.0), b), kOp));
            const double via_inverse =
                r * std::pow(std::max(norm(matrix_function(power_function(-1.0), a), kOp),
                                      norm(matrix_function(power_function(-1.0), b), kOp)),
                             1.0 - r);
            CHECK(rel_diff(direct, via_inverse) <= 1e-12);
        }
    }
    SUBCASE("refinement comparison is non-negative and annotated") {
        const IneqReport r = check_perturbation(log_fn, a, b, PerturbMode::Refinement, 1.0, kOp);
        CHECK(r.margin >= -1e-10);
        CHECK(r.witness.params.count("a") == 1);
        CHECK(r.witness.params.count("perturb_margin") == 1);
        CHECK(r.witness.params.at("perturb_margin") >= -1e-10);
    }
    SUBCASE("a floor strictly below both spectra separates the two bounds") {
        // rb^(r-1) < ra^(r-1) when the reference point a sits below b
        for (double r : {0.3, 0.5, 0.9}) {
            const FunctionSpec f = power_function(r);
            const double b_floor = 2.0, a_floor = 1.0;
            const double max_deriv_norm = f.deriv(1, b_floor);
            CHECK(max_deriv_norm < f.deriv(1, a_floor));
        }
    }
    SUBCASE("gating") {
        CHECK_THROWS_AS(check_perturbation(log_fn, a, b, PerturbMode::Convex, 1.0, kOp),
                        std::invalid_argument);
        CHECK_THROWS_AS(check_perturbation(catalog_get("exp"), a, b, PerturbMode::Refinement, 1.0,
                                           kOp),
                        std::invalid_argument);
        CHECK_THROWS_AS(check_perturbation(log_fn, hdiag({1.0, -1.0, 1.0, 1.0}), b,
                                           PerturbMode::QuasiConvex, 1.0, kOp),
                        DomainError);
    }
}

TEST_CASE("Simpson estimates against the reference integral") {
    const FunctionSpec log_fn = catalog_get("log");
    const HermitianMatrix a = random_pd(3, 0.3, 5.0, 150);
    const HermitianMatrix b = random_pd(3, 0.3, 5.0, 151);

    SUBCASE("degenerate segment has zero error") {
        const IneqReport r = check_simpson(log_fn, a, a, SimpsonRule::OneThird, kOp);
        CHECK(r.lhs <= 1e-10);
        CHECK(r.pass);
    }
    SUBCASE("constants are pinned") {
        const IneqReport r13 = check_simpson(log_fn, a, b, SimpsonRule::OneThird, kOp);
        CHECK(r13.witness.params.at("C") == 5.0 / 32.0);
        const IneqReport r38 = check_simpson(log_fn, a, b, SimpsonRule::ThreeEighth, kOp);
        CHECK(r38.witness.params.at("C") == 25.0 / 288.0);
    }
    SUBCASE("random draws across norms") {
        for (const char *kind : {"op", "tr", "fro", "s:3", "kf:2"})
            for (SimpsonRule rule : {SimpsonRule::OneThird, SimpsonRule::ThreeEighth})
                CHECK(check_simpson(log_fn, a, b, rule, NormKind::parse(kind)).pass);
    }
    SUBCASE("halving the segment cuts the error by at least a factor four") {
        // order check in the scaling regime: endpoints pulled close enough
        // that the quartic term dominates the defect
        for (const auto &id : {"log", "pow:0.5"})
            for (int rep = 0; rep < 6; ++rep) {
                const FunctionSpec f = catalog_get(id);
                const HermitianMatrix lo = random_pd(3, 0.4, 4.0, derive_seed(152, rep));
                const HermitianMatrix far = random_pd(3, 0.4, 4.0, derive_seed(153, rep));
                const HermitianMatrix hi = segment_point(lo, far, 0.4);
                const HermitianMatrix mid = segment_point(lo, hi, 0.5);
                const double whole = check_simpson(f, lo, hi, SimpsonRule::OneThird, kOp).lhs;
                const double left = check_simpson(f, lo, mid, SimpsonRule::OneThird, kOp).lhs;
                const double right = check_simpson(f, mid, hi, SimpsonRule::OneThird, kOp).lhs;
                if (left + right > 1e-13)
                    CHECK(whole / (left + right) >= 3.6);
            }
    }
}

TEST_CASE("block embedding agrees with the direct commutator") {
    const FunctionSpec f = catalog_get("pow:0.5");
    const FunctionSpec g = catalog_get("log");
    const FunctionSpec fg = product_function(f, g);
    for (int rep = 0; rep < 5; ++rep) {
        const HermitianMatrix a = random_pd(3, 0.3, 5.0, derive_seed(160, rep));
        const HermitianMatrix b = random_pd(3, 0.3, 5.0, derive_seed(161, rep));
        const ComplexMatrix x = random_complex(3, derive_seed(162, rep));
        for (const FunctionSpec &spec : {g, fg}) {
            const ComplexMatrix direct = commutator_map(spec, a, b, x);
            const ComplexMatrix embedded = commutator_via_embedding(spec, a, b, x);
            CHECK((direct - embedded).frobenius_norm() <=
                  1e-9 * (1.0 + direct.frobenius_norm()));
        }
    }
}

TEST_CASE("sweep configuration validation") {
    SweepConfig config;
    CHECK_NOTHROW(validate(config));
    SweepConfig empty_fns = config;
    empty_fns.functions.clear();
    CHECK_THROWS_AS(validate(empty_fns), std::invalid_argument);
    SweepConfig zero_samples = config;
    zero_samples.samples = 0;
    CHECK_THROWS_AS(validate(zero_samples), std::invalid_argument);
    SweepConfig bad_fn = config;
    bad_fn.functions = {"sinh"};
    CHECK_THROWS_AS(validate(bad_fn), std::invalid_argument);
    SweepConfig bad_nu = config;
    bad_nu.nu_grid = {1.2};
    CHECK_THROWS_AS(validate(bad_nu), std::invalid_argument);
    SweepConfig bad_range = config;
    bad_range.spectrum_lo = -1.0;
    CHECK_THROWS_AS(validate(bad_range), std::invalid_argument);
}

TEST_CASE("small sweeps are deterministic and bookkeep expected failures") {
    SweepConfig config;
    config.dims = {2};
    config.samples = 1;
    config.functions = {"pow:0.5", "square_minus_one"};
    config.norms = {kOp};
    config.nu_grid = {0.5};
    config.direction_samples = 4;

    const auto first = run_sweep(config);
    const auto second = run_sweep(config);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].check_id == second[i].check_id);
        CHECK(first[i].lhs == second[i].lhs);
        CHECK(first[i].rhs == second[i].rhs);
        CHECK(first[i].witness.seed == second[i].witness.seed);
    }

    const SweepSummary summary = summarize(first);
    CHECK(summary.unexpected == 0);
    CHECK(summary.expected_failed == 1);
    CHECK(summary.passed == static_cast<int>(first.size()) - 1);

    int counterexamples = 0;
    for (const auto &r : first)
        if (r.expected_fail) {
            ++counterexamples;
            CHECK_FALSE(r.pass);
            CHECK(r.check_id == "quasiconvex_fn_norm");
            CHECK(r.witness.functions == std::vector<std::string>{"square_minus_one"});
        }
    CHECK(counterexamples == 1);
}
