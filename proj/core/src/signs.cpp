#include "kwong/signs.hpp"

#include <algorithm>
#include <cmath>

#include "kwong/errors.hpp"
#include "kwong/exact_engine.hpp"
#include "kwong/generators.hpp"

namespace kwong {

int sign_changes(std::span<const Rational> seq) {
    int changes = 0, last = 0;
    for (const Rational& v : seq) {
        const int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int sign_changes(std::span<const double> seq) {
    double scale = 0.0;
    for (double v : seq) scale = std::max(scale, std::fabs(v));
    const double dead = 1e-12 * scale;
    int changes = 0, last = 0;
    for (double v : seq) {
        if (std::fabs(v) < dead || v == 0.0) continue;
        const int s = v > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

namespace {

// coeffs ascending by exponent; multiply by (x + shift)
void mul_linear(std::vector<double>& coeffs, double shift) {
    coeffs.push_back(0.0);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k)
        coeffs[k] = coeffs[k - 1] + shift * coeffs[k];
    coeffs[0] *= shift;
}

// sum_i c_i * w_i * prod_{j != i} (x + s_j), degree n - 1
std::vector<double> lagrange_style_sum(std::span<const double> s, std::span<const double> c,
                                       std::span<const double> w) {
    const std::size_t n = s.size();
    std::vector<double> total(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] == 0.0) continue;
        std::vector<double> term{c[i] * w[i]};
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) mul_linear(term, s[j]);
        for (std::size_t k = 0; k < n; ++k) total[k] += term[k];
    }
    return total;
}

GeneralizedPolyCoeffs build_blocks(const Points<double>& pts, std::span<const double> c,
                                   const Exponent& r, double point_sign, double power_sign) {
    const std::size_t n = pts.size();
    if (c.size() != n) throw LengthMismatch("weight vector length must match points");
    if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; }))
        throw AllZeroWeights("weight vector is identically zero");
    std::vector<double> shifts(n), powers(n), ones(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        shifts[i] = point_sign * pts[i];
        powers[i] = power_sign * std::pow(pts[i], r.value());
    }
    GeneralizedPolyCoeffs out{.alpha = lagrange_style_sum(shifts, c, powers),
                              .beta = lagrange_style_sum(shifts, c, ones),
                              .r = r};
    return out;
}

} // namespace

GeneralizedPolyCoeffs build_g_coeffs(const Points<double>& pts, std::span<const double> c,
                                     const Exponent& r) {
    return build_blocks(pts, c, r, +1.0, +1.0);
}

GeneralizedPolyCoeffs build_g0_coeffs(const Points<double>& pts, std::span<const double> c,
                                      const Exponent& r) {
    return build_blocks(pts, c, r, -1.0, -1.0);
}

int descartes_zero_bound(const Points<double>& pts, std::span<const double> c,
                         const Exponent& r) {
    const std::size_t n = pts.size();
    if (n % 2 == 0)
        throw PreconditionViolated("the zero bound requires an odd number of points");
    if (!(r.value() > static_cast<double>(n - 1)))
        throw PreconditionViolated("the zero bound requires r > n - 1");
    const GeneralizedPolyCoeffs g = build_g_coeffs(pts, c, r);
    std::vector<double> seq = g.alpha;
    seq.insert(seq.end(), g.beta.begin(), g.beta.end());
    return sign_changes(seq);
}

ZeroScan count_positive_zeros_f(const Points<double>& pts, std::span<const double> c,
                                const Exponent& r, std::size_t scan_grid) {
    const std::size_t n = pts.size();
    if (c.size() != n) throw LengthMismatch("weight vector length must match points");
    const auto f = [&](double x) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            acc += c[j] * (std::pow(x, r.value()) + std::pow(pts[j], r.value())) / (x + pts[j]);
        return acc;
    };
    const double x_lo = pts.min() * 1e-4;
    const double x_hi = pts.max() * 10.0;
    const double step = std::log(x_hi / x_lo) / static_cast<double>(scan_grid - 1);

    ZeroScan scan;
    double prev_x = x_lo;
    double prev_f = f(prev_x);
    for (std::size_t k = 1; k < scan_grid; ++k) {
        const double x = x_lo * std::exp(step * static_cast<double>(k));
        const double fx = f(x);
        if (prev_f != 0.0 && fx != 0.0 && (prev_f > 0) != (fx > 0)) {
            double lo = prev_x, hi = x, flo = prev_f;
            while (hi - lo > 1e-12 * hi) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm > 0) == (flo > 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            scan.roots.push_back(0.5 * (lo + hi));
            ++scan.count;
        }
        prev_x = x;
        prev_f = fx;
    }
    return scan;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

Rational submatrix_det(const Matrix<Rational>& m, std::span<const std::size_t> rows,
                       std::span<const std::size_t> cols) {
    Matrix<Rational> sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    return det_exact(std::move(sub));
}

} // namespace

SsrReport ssr_check(const Matrix<Rational>& m, std::size_t max_order, bool fail_fast) {
    if (m.rows() != m.cols()) throw LengthMismatch("sign-regularity census needs a square matrix");
    const std::size_t n = m.rows();
    if (n > 8) throw OrderTooLarge("minor enumeration is limited to order 8");
    if (max_order > n) max_order = n;

    SsrReport report;
    report.sign_regular = true;
    for (std::size_t k = 1; k <= max_order; ++k) {
        OrderVerdict verdict;
        verdict.order = k;
        verdict.uniform = true;
        MinorWitness reference;
        bool have_reference = false;
        for (auto rows = first_combination(k); verdict.uniform;) {
            for (auto cols = first_combination(k); verdict.uniform;) {
                const Rational d = submatrix_det(m, rows, cols);
                const int s = sgn(d);
                if (s == 0) {
                    verdict.uniform = false;
                    verdict.witnesses.push_back({rows, cols, d});
                } else if (!have_reference) {
                    reference = {rows, cols, d};
                    have_reference = true;
                    verdict.sign = s;
                } else if (s != verdict.sign) {
                    verdict.uniform = false;
                    verdict.witnesses.push_back(reference);
                    verdict.witnesses.push_back({rows, cols, d});
                }
                if (!next_combination(cols, n)) break;
            }
            if (!next_combination(rows, n)) break;
        }
        if (!verdict.uniform) {
            verdict.sign = 0;
            report.sign_regular = false;
        }
        report.orders.push_back(std::move(verdict));
        if (fail_fast && !report.sign_regular) break;
    }
    return report;
}

CrossDetSign cross_2x2_det_sign(const Points<double>& p, const Points<double>& q,
                                const Exponent& r) {
    if (p.size() != 2 || q.size() != 2)
        throw LengthMismatch("the cross determinant sign is a 2 x 2 statement");
    CrossDetSign out;
    out.hypothesis_holds = p[0] == q[0] || p[0] == q[1] || p[1] == q[0] || p[1] == q[1];
    const Matrix<double> m = gen_cross_kwong(p, q, r);
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    double scale = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) scale = std::max(scale, std::fabs(m(i, j)));
    out.sign = std::fabs(det) <= 1e-12 * scale * scale ? 0 : (det > 0 ? 1 : -1);
    return out;
}

} // namespace kwong
