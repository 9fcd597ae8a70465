#include <doctest.h>

#include <random>

#include "kwong/exact_engine.hpp"
#include "kwong/generators.hpp"
#include "kwong/signs.hpp"

#include "../support/corpus.hpp"

using namespace kwong;
using namespace kwong::testsupport;

TEST_CASE("sign change counting") {
    CHECK(sign_changes(std::vector<Rational>{1, -1, 1}) == 2);
    CHECK(sign_changes(std::vector<Rational>{2, 0, -3}) == 1);
    CHECK(sign_changes(std::vector<Rational>{1, 1, 1}) == 0);
    CHECK(sign_changes(std::vector<double>{1.0, -1.0, 1.0}) == 2);
    // Relative deadband: a 1e-15 wobble between unit-scale entries is zero.
    CHECK(sign_changes(std::vector<double>{1.0, -1e-15, 2.0}) == 0);
}

TEST_CASE("g coefficient blocks") {
    const auto pts = validate_points<double>({1, 2, 3});
    const std::vector<double> c{1, 1, 1};
    const auto g = build_g_coeffs(pts, c, Exponent(3));
    REQUIRE(g.alpha.size() == 3);
    REQUIRE(g.beta.size() == 3);
    CHECK(g.alpha[0] == doctest::Approx(84));
    CHECK(g.alpha[1] == doctest::Approx(118));
    CHECK(g.alpha[2] == doctest::Approx(36));
    CHECK(g.beta[0] == doctest::Approx(11));
    CHECK(g.beta[1] == doctest::Approx(12));
    CHECK(g.beta[2] == doctest::Approx(3));

    const auto single = build_g_coeffs(validate_points<double>({2}), std::vector<double>{1},
                                       Exponent(4));
    CHECK(single.alpha == std::vector<double>{16.0});
    CHECK(single.beta == std::vector<double>{1.0});

    // First standard basis weight: beta holds prod_{j != 1}(x + p_j).
    const auto e1 = build_g_coeffs(pts, std::vector<double>{1, 0, 0}, Exponent(2));
    CHECK(e1.beta[0] == doctest::Approx(6));
    CHECK(e1.beta[1] == doctest::Approx(5));
    CHECK(e1.beta[2] == doctest::Approx(1));

    CHECK_THROWS_AS(build_g_coeffs(pts, std::vector<double>{0, 0, 0}, Exponent(2)),
                    AllZeroWeights);
}

TEST_CASE("descartes bound on the combined sequence") {
    const auto pts = validate_points<double>({1, 2, 3});
    CHECK(descartes_zero_bound(pts, std::vector<double>{1, 1, 1}, Exponent(3)) == 0);
    CHECK(descartes_zero_bound(pts, std::vector<double>{1, -1, 1}, Exponent(2.5)) <= 2);
    CHECK(descartes_zero_bound(pts, std::vector<double>{0.3, 2.0, 0.7}, Exponent(5)) == 0);

    CHECK_THROWS_AS(descartes_zero_bound(validate_points<double>({1, 2}),
                                         std::vector<double>{1, 1}, Exponent(3)),
                    PreconditionViolated);
    CHECK_THROWS_AS(descartes_zero_bound(pts, std::vector<double>{1, 1, 1}, Exponent(1.5)),
                    PreconditionViolated);
}

TEST_CASE("positive zero scan") {
    const auto pts = validate_points<double>({1, 2, 3});
    CHECK(count_positive_zeros_f(pts, std::vector<double>{1, 2, 0.5}, Exponent(3.5)).count == 0);

    std::mt19937 gen(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> c(3);
        for (auto& v : c) v = static_cast<double>(static_cast<int>(gen() % 2001) - 1000) / 500.0;
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
        const auto scan = count_positive_zeros_f(pts, c, Exponent(3.5));
        const int bound = descartes_zero_bound(pts, c, Exponent(3.5));
        CHECK(scan.count <= bound);
        CHECK(bound <= 2);
        // Each reported root is a genuine near-zero of f.
        for (double root : scan.roots) CHECK(root > 0.0);
    }
}

TEST_CASE("sign-regularity census") {
    const auto k3 = gen_kwong(squareplus_points(4), Exponent(3));
    const auto report = ssr_check(k3.dense(), 2);
    CHECK_FALSE(report.sign_regular);
    REQUIRE(report.orders.size() == 2);
    CHECK(report.orders[0].uniform);
    CHECK(report.orders[0].sign == 1);
    const auto& bad = report.orders[1];
    CHECK_FALSE(bad.uniform);
    REQUIRE(bad.witnesses.size() == 2);
    CHECK(bad.witnesses[0].rows == std::vector<std::size_t>{0, 1});
    CHECK(bad.witnesses[0].cols == std::vector<std::size_t>{0, 1});
    CHECK(bad.witnesses[0].value == Rational(-5));
    CHECK(bad.witnesses[1].rows == std::vector<std::size_t>{0, 1});
    CHECK(bad.witnesses[1].cols == std::vector<std::size_t>{2, 3});
    CHECK(bad.witnesses[1].value == Rational(35));

    // Order 3 at exponent 2: sign-regular through every order.
    const auto k2 = gen_kwong(iota_points(3), Exponent(2));
    CHECK(ssr_check(k2.dense(), 3).sign_regular);

    // The all-ones matrix dies on a zero 2x2 minor.
    SymMatrix<Rational> ones(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j <= i; ++j) ones.set(i, j, 1);
    const auto flat = ssr_check(ones.dense(), 2);
    CHECK_FALSE(flat.sign_regular);
    CHECK(flat.orders[1].witnesses.size() == 1);
    CHECK(flat.orders[1].witnesses[0].value == Rational(0));

    // fail-fast stops after the violating order.
    const auto quick = ssr_check(ones.dense(), 3, /*fail_fast=*/true);
    CHECK(quick.orders.size() == 2);

    Matrix<Rational> big(9, 9);
    CHECK_THROWS_AS(ssr_check(big, 2), OrderTooLarge);
}

TEST_CASE("order-2 cross determinant signs") {
    const auto p = validate_points<double>({1, 2});
    const auto q = validate_points<double>({1, 3});
    CHECK(cross_2x2_det_sign(p, q, Exponent(2)).sign == -1);
    CHECK(cross_2x2_det_sign(p, q, Exponent(0.5)).sign == 1);
    CHECK(cross_2x2_det_sign(p, q, Exponent(1)).sign == 0);
    CHECK(cross_2x2_det_sign(p, q, Exponent(2)).hypothesis_holds);

    const auto disjoint = cross_2x2_det_sign(p, validate_points<double>({5, 7}), Exponent(2));
    CHECK_FALSE(disjoint.hypothesis_holds);
}

TEST_CASE("companion expansion keeps the bound chain honest") {
    // For odd n and r > n-1: s + s0 <= 2n - 1 and s0 >= n on random weights.
    std::mt19937 gen(321);
    const auto pts = validate_points<double>({1, 2, 3});
    const int n = 3;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> c(3);
        bool all_zero = true;
        for (auto& v : c) {
            v = static_cast<double>(static_cast<int>(gen() % 2001) - 1000) / 250.0;
            all_zero &= v == 0.0;
        }
        if (all_zero) continue;
        for (double r : {2.5, 3.0, 5.5}) {
            const auto g = build_g_coeffs(pts, c, Exponent(r));
            const auto g0 = build_g0_coeffs(pts, c, Exponent(r));
            std::vector<double> seq = g.alpha;
            seq.insert(seq.end(), g.beta.begin(), g.beta.end());
            std::vector<double> seq0 = g0.alpha;
            seq0.insert(seq0.end(), g0.beta.begin(), g0.beta.end());
            const int s = sign_changes(seq);
            const int s0 = sign_changes(seq0);
            CHECK(s + s0 <= 2 * n - 1);
            CHECK(s0 >= n);
            CHECK(s <= n - 1);
        }
    }
}
