#include "kwong/structure.hpp"

#include <cmath>

#include "kwong/errors.hpp"

namespace kwong {

FactorizationCheck verify_vandermonde_factorization(const Points<Rational>& pts, long long r) {
    const auto pair = gen_vandermonde_pair<Rational>(pts, r);
    const Matrix<Rational> product = pair.w.transposed() * (pair.v * pair.w);
    const SymMatrix<Rational> k = gen_kwong(pts, Exponent(r));
    FactorizationCheck out;
    out.max_residual = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const Rational diff = abs(Rational(product(i, j) - k.at(i, j)));
            if (diff > out.max_residual) out.max_residual = diff;
        }
    out.holds = sgn(out.max_residual) == 0;
    return out;
}

SylvesterCheck generalized_sylvester_check(const SymMatrix<Rational>& a,
                                           const Matrix<Rational>& x) {
    const std::size_t r = a.order();
    const std::size_t n = x.cols();
    if (x.rows() != r) throw LengthMismatch("congruence factor must have one row per A row");
    if (rank_exact(x) != r)
        throw RankDeficient("congruence factor does not have full row rank");
    SylvesterCheck out;
    out.compressed = inertia_exact(congruence_transform(a, x)).inertia;
    out.expected = inertia_exact(a).inertia.plus({0, static_cast<int>(n - r), 0});
    out.holds = out.compressed == out.expected;
    return out;
}

bool verify_three_term_identity(const Points<Rational>& pts, long long r) {
    if (r < 2) throw std::invalid_argument("three-term identity needs r >= 2");
    const std::size_t n = pts.size();
    const SymMatrix<Rational> kr = gen_kwong(pts, Exponent(r));
    const SymMatrix<Rational> kprev = gen_kwong(pts, Exponent(r - 2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const Rational lhs = kr.at(i, j);
            const Rational rhs = pow_int(pts[i], r - 1) + pow_int(pts[j], r - 1) -
                                 pts[i] * kprev.at(i, j) * pts[j];
            if (lhs != rhs) return false;
        }
    return true;
}

bool verify_negative_exponent_congruence(const Points<Rational>& pts, long long r) {
    const std::size_t n = pts.size();
    const SymMatrix<Rational> kneg = gen_kwong(pts, Exponent(-r));
    const SymMatrix<Rational> kpos = gen_kwong(pts, Exponent(r));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const Rational rhs =
                pow_int(pts[i], -r) * kpos.at(i, j) * pow_int(pts[j], -r);
            if (kneg.at(i, j) != rhs) return false;
        }
    return true;
}

template <class T>
Matrix<T> basis_Hj_matrix(const Points<T>& pts, std::size_t j) {
    const std::size_t n = pts.size();
    if (j >= n) throw DepthOutOfRange("moment depth must be smaller than the order");

    // Moment matrix rows (p_1^t, ..., p_n^t), t = 0..j-1, reduced to RREF.
    Matrix<T> m(j, n);
    for (std::size_t c = 0; c < n; ++c) {
        T acc(1);
        for (std::size_t t = 0; t < j; ++t) {
            m(t, c) = acc;
            if (t + 1 < j) acc = acc * pts[c];
        }
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < j; ++col) {
        std::size_t piv = row;
        for (std::size_t i = row; i < j; ++i) {
            if (sign_of(m(i, col)) == 0) continue;
            if (sign_of(m(piv, col)) == 0 || abs_of(m(i, col)) > abs_of(m(piv, col))) piv = i;
        }
        if (sign_of(m(piv, col)) == 0) continue;
        if (piv != row)
            for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(row, c));
        const T inv = T(1) / m(row, col);
        for (std::size_t c = col; c < n; ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t i = 0; i < j; ++i) {
            if (i == row || sign_of(m(i, col)) == 0) continue;
            const T f = m(i, col);
            for (std::size_t c = col; c < n; ++c) m(i, c) = m(i, c) - f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    // Distinct positive points make the moment rows independent.
    if (pivots.size() != j) throw DepthOutOfRange("moment matrix lost rank");

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix<T> basis(n, n - j);
    std::size_t out_col = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis(c, out_col) = T(1);
        for (std::size_t t = 0; t < j; ++t) basis(pivots[t], out_col) = -m(t, c);
        ++out_col;
    }
    return basis;
}

template Matrix<Rational> basis_Hj_matrix(const Points<Rational>&, std::size_t);
template Matrix<double> basis_Hj_matrix(const Points<double>&, std::size_t);

SubspaceBasis basis_Hj(const Points<Rational>& pts, std::size_t j) {
    Matrix<Rational> basis = basis_Hj_matrix(pts, j);
    // Normalize each column to an integer vector with gcd 1 and positive
    // leading nonzero entry.
    const std::size_t n = basis.rows();
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        mpz_class lcm_den(1);
        for (std::size_t i = 0; i < n; ++i)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                    basis(i, c).get_den().get_mpz_t());
        mpz_class gcd_num(0);
        for (std::size_t i = 0; i < n; ++i) {
            basis(i, c) = basis(i, c) * Rational(lcm_den);
            basis(i, c).canonicalize();
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(),
                    basis(i, c).get_num().get_mpz_t());
        }
        int lead = 0;
        for (std::size_t i = 0; i < n && lead == 0; ++i) lead = sgn(basis(i, c));
        if (gcd_num == 0) continue;
        if (lead < 0) gcd_num = -gcd_num;
        for (std::size_t i = 0; i < n; ++i) {
            basis(i, c) = basis(i, c) / Rational(gcd_num);
            basis(i, c).canonicalize();
        }
    }
    return {j, std::move(basis)};
}

Inertia conditional_inertia(const SymMatrix<Rational>& m, const Points<Rational>& pts,
                            std::size_t j) {
    if (pts.size() != m.order()) throw LengthMismatch("points do not match matrix order");
    const SubspaceBasis basis = basis_Hj(pts, j);
    return inertia_exact(congruence_transform(m, basis.columns)).inertia;
}

Inertia conditional_inertia(const SymMatrix<double>& m, const Points<double>& pts,
                            std::size_t j) {
    if (pts.size() != m.order()) throw LengthMismatch("points do not match matrix order");
    const Matrix<double> basis = basis_Hj_matrix(pts, j);
    const SymMatrix<double> compressed = congruence_transform(m, basis);
    EigResult eig = eig_sym(compressed);
    double scale = 0.0;
    for (double v : eig.eigenvalues) scale = std::max(scale, std::fabs(v));
    return classify_inertia(std::move(eig.eigenvalues), scale).inertia;
}

} // namespace kwong
