#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kwong/exponent.hpp"
#include "kwong/matrix.hpp"
#include "kwong/points.hpp"
#include "kwong/rational.hpp"

namespace kwong {

/// Strict sign alternations after deleting zeros. Exact scalars use true
/// zero; binary64 treats |x| < 1e-12 * max|seq| as zero so that the count
/// is a loud integer rather than a silently flipped one.
int sign_changes(std::span<const Rational> seq);
int sign_changes(std::span<const double> seq);

/// Coefficients of g(x) = sum_i c_i (x^r + p_i^r) prod_{j != i} (x + p_j),
/// split into the polynomial block (alpha, exponents 0..n-1) and the x^r
/// block (beta, exponents r..r+n-1). The blocks are disjoint and ordered
/// exactly when r > n - 1.
struct GeneralizedPolyCoeffs {
    std::vector<double> alpha; // h_2 = sum_i c_i p_i^r prod_{j != i}(x + p_j)
    std::vector<double> beta;  // h_1 = sum_i c_i prod_{j != i}(x + p_j)
    Exponent r;
};

GeneralizedPolyCoeffs build_g_coeffs(const Points<double>& pts, std::span<const double> c,
                                     const Exponent& r);

/// The companion expansion at the same weights with +p_i replaced by -p_i
/// throughout: g0(x) = sum_i c_i (x^r - p_i^r) prod_{j != i} (x - p_j).
GeneralizedPolyCoeffs build_g0_coeffs(const Points<double>& pts, std::span<const double> c,
                                      const Exponent& r);

/// Sign changes of the combined (alpha, beta) sequence; an upper bound on
/// the count of positive zeros of g when n is odd and r > n - 1 (the
/// required ordering of the exponent blocks).
int descartes_zero_bound(const Points<double>& pts, std::span<const double> c,
                         const Exponent& r);

struct ZeroScan {
    int count = 0;              // sign changes found on the grid
    std::vector<double> roots;  // each bracket refined by bisection
};

/// Lower bound on the number of zeros of
/// f(x) = sum_j c_j (x^r + p_j^r)/(x + p_j) on (0, infinity): counts sign
/// changes over a logarithmic grid reaching past 10 * max(points) and
/// refines each bracket by bisection to relative width 1e-12.
ZeroScan count_positive_zeros_f(const Points<double>& pts, std::span<const double> c,
                                const Exponent& r, std::size_t scan_grid = 4096);

/// Per-order minor sign census. An order k is sign-uniform when every k x k
/// subdeterminant is nonzero and of one sign; otherwise the verdict carries
/// witness minors (a zero minor, or two minors of opposite signs).
struct MinorWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Rational value;
};

struct OrderVerdict {
    std::size_t order = 0;
    bool uniform = false;
    int sign = 0; // meaningful when uniform
    std::vector<MinorWitness> witnesses;
};

struct SsrReport {
    std::vector<OrderVerdict> orders;
    bool sign_regular = false; // all requested orders uniform
};

/// Enumerates all minors up to max_order (combinatorial: order n <= 8).
/// With fail_fast set, stops at the first violating order.
SsrReport ssr_check(const Matrix<Rational>& m, std::size_t max_order, bool fail_fast = false);

struct CrossDetSign {
    int sign = 0;
    bool hypothesis_holds = false; // the two point pairs share a value
};

/// Sign of det[(p_i^r + q_j^r)/(p_i + q_j)] for two pairs. The sharp
/// statement (positive below r = 1, negative above) assumes the pairs
/// share a point; the computed sign is returned either way, flagged.
CrossDetSign cross_2x2_det_sign(const Points<double>& p, const Points<double>& q,
                                const Exponent& r);

} // namespace kwong
