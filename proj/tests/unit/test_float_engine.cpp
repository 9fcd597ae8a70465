#include <doctest.h>

#include <cmath>
#include <limits>

#include "kwong/exact_engine.hpp"
#include "kwong/float_engine.hpp"
#include "kwong/generators.hpp"
#include "kwong/oracle.hpp"

#include "../support/corpus.hpp"

using namespace kwong;
using namespace kwong::testsupport;

namespace {

SymMatrix<double> sym_from(std::initializer_list<std::initializer_list<double>> rows) {
    SymMatrix<double> m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) {
            if (j <= i) m.set(i, j, v);
            ++j;
        }
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("eig_sym small spectra") {
    const auto d = eig_sym(sym_from({{3, 0}, {0, -1}}));
    CHECK(d.converged);
    CHECK(d.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(3.0));

    const auto h = eig_sym(sym_from({{0, 1}, {1, 0}}));
    CHECK(h.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(h.eigenvalues[1] == doctest::Approx(1.0));

    SymMatrix<double> ones(5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j <= i; ++j) ones.set(i, j, 1.0);
    const auto o = eig_sym(ones);
    CHECK(o.eigenvalues.back() == doctest::Approx(5.0));
    for (std::size_t i = 0; i + 1 < 5; ++i)
        CHECK(std::fabs(o.eigenvalues[i]) < 1e-12);
}

TEST_CASE("eig_sym meets the trace contract") {
    for (const auto& set : corpus(6)) {
        const auto pts = to_double_points(set);
        for (double r : {0.5, 2.0, 4.7}) {
            const auto m = gen_kwong(pts, Exponent(r));
            double trace = 0.0, frob = 0.0;
            for (std::size_t i = 0; i < 6; ++i) {
                trace += m.at(i, i);
                for (std::size_t j = 0; j < 6; ++j) frob += m.at(i, j) * m.at(i, j);
            }
            const auto eig = eig_sym(m);
            CHECK(eig.converged);
            double sum = 0.0;
            for (double v : eig.eigenvalues) sum += v;
            CHECK(std::fabs(sum - trace) <=
                  6.0 * std::pow(2.0, -40) * std::sqrt(frob) + 1e-300);
        }
    }
}

TEST_CASE("classify_inertia thresholds") {
    const auto forced = classify_inertia({-1.0, 1e-18, 2.0}, 2.0);
    CHECK(forced.inertia == Inertia{1, 1, 1});
    CHECK(forced.gap_ratio > 1e15);

    const auto clean = classify_inertia({-1.0, 1.0}, 1.0, 0);
    CHECK(clean.inertia == Inertia{1, 0, 1});
    CHECK(std::isinf(clean.gap_ratio));

    // Oracle-assisted split with an honest spectral gap.
    const auto assisted = classify_inertia({-2.0, 1e-14, 0.5}, 2.0, 1);
    CHECK(assisted.inertia == Inertia{1, 1, 1});

    // Requested nullity without a 10^3 gap must refuse loudly.
    CHECK_THROWS_AS(classify_inertia({-2.0, 1e-3, 0.5}, 2.0, 1), AmbiguousNullity);
}

TEST_CASE("float inertia of the kwong family") {
    const auto pts = to_double_points(iota_points(6));
    const FamilySpec<double> spec2(Family::Kwong, pts, Exponent(2.0));
    CHECK(inertia_float(spec2).inertia == Inertia{1, 0, 5});
    const FamilySpec<double> spec4(Family::Kwong, pts, Exponent(4.0));
    CHECK(inertia_float(spec4).inertia == Inertia{4, 0, 2});
    const FamilySpec<double> spec_half(Family::Kwong, pts, Exponent(0.5));
    CHECK(inertia_float(spec_half).inertia == Inertia{6, 0, 0});

    // Oracle-assisted nullity at a singular exponent.
    const auto s4 = to_double_points(squareplus_points(4));
    const auto rep = inertia_float(FamilySpec<double>(Family::Kwong, s4, Exponent(3.0)),
                                   RoutePolicy::Auto, 1);
    CHECK(rep.inertia == Inertia{1, 1, 2});
    CHECK(rep.gap_ratio > 1e3);
}

TEST_CASE("auto policy reroutes badly scaled problems through the cosh form") {
    const auto spread = validate_points<double>({0.01, 1.0, 40.0, 2000.0});
    const auto rep = inertia_float(FamilySpec<double>(Family::Kwong, spread, Exponent(2.5)));
    CHECK(rep.route == Route::CoshCongruence);
    CHECK(rep.inertia == predict_kwong_inertia(4, Exponent(2.5)).inertia);

    const auto tame = to_double_points(iota_points(4));
    CHECK(inertia_float(FamilySpec<double>(Family::Kwong, tame, Exponent(2.5))).route ==
          Route::Direct);
    CHECK(inertia_float(FamilySpec<double>(Family::Kwong, tame, Exponent(25.0))).route ==
          Route::CoshCongruence);
}

TEST_CASE("float classification matches the exact engine at desk scale") {
    for (std::size_t n = 2; n <= 7; ++n) {
        for (const auto& set : corpus(n)) {
            const auto dpts = to_double_points(set);
            for (long long r = 1; r <= 7; ++r) {
                const auto exact = inertia_exact(gen_kwong(set, Exponent(r))).inertia;
                const auto assist = predict_singular(static_cast<int>(n), Exponent(r))
                                        ? std::optional<int>(exact.zero)
                                        : std::nullopt;
                const auto rep = inertia_float(
                    FamilySpec<double>(Family::Kwong, dpts, Exponent(r)), RoutePolicy::Auto,
                    assist);
                CHECK(rep.inertia == exact);
            }
        }
    }
}

TEST_CASE("principal submatrix eigenvalues interlace") {
    for (const auto& set : {iota_points(6), squareplus_points(6)}) {
        const auto pts = to_double_points(set);
        for (double r : {0.5, 2.3, 4.0}) {
            const auto m = gen_kwong(pts, Exponent(r));
            const auto full = eig_sym(m).eigenvalues;
            double norm = std::max(std::fabs(full.front()), std::fabs(full.back()));
            const double tol = 8.0 * 6 * std::numeric_limits<double>::epsilon() * norm;

            SymMatrix<double> lead(5);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j <= i; ++j) lead.set(i, j, m.at(i, j));
            const auto sub = eig_sym(lead).eigenvalues;
            for (std::size_t i = 0; i < 5; ++i) {
                CHECK(sub[i] >= full[i] - tol);
                CHECK(sub[i] <= full[i + 1] + tol);
            }
        }
    }
}
