#include "kwong/exact_engine.hpp"

#include <algorithm>

#include "kwong/errors.hpp"

namespace kwong {

Rational PivotLog::pivot_product() const {
    if (zero_block_dim > 0) return Rational(0);
    Rational prod(1);
    for (const auto& ev : events) prod *= ev.value;
    return prod;
}

ExactInertiaResult inertia_exact(const SymMatrix<Rational>& m) {
    const std::size_t n = m.order();
    Matrix<Rational> a = m.dense();
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    ExactInertiaResult res;
    auto& in = res.inertia;
    auto& log = res.log;

    while (!active.empty()) {
        // Largest-magnitude nonzero diagonal entry of the remaining block.
        std::size_t pivot_pos = active.size();
        for (std::size_t t = 0; t < active.size(); ++t) {
            const Rational& d = a(active[t], active[t]);
            if (sgn(d) == 0) continue;
            if (pivot_pos == active.size() ||
                cmp(abs(d), abs(a(active[pivot_pos], active[pivot_pos]))) > 0)
                pivot_pos = t;
        }

        if (pivot_pos < active.size()) {
            const std::size_t k = active[pivot_pos];
            const Rational d = a(k, k);
            in.positive += sgn(d) > 0;
            in.negative += sgn(d) < 0;
            log.events.push_back({PivotEvent::Kind::Diag, k, k, d});
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
            for (std::size_t s = 0; s < active.size(); ++s)
                for (std::size_t t = 0; t <= s; ++t) {
                    const std::size_t u = active[s], v = active[t];
                    Rational upd = a(u, v) - a(u, k) * a(v, k) / d;
                    a(u, v) = upd;
                    a(v, u) = std::move(upd);
                }
            continue;
        }

        // Remaining diagonal is entirely zero: take the largest-magnitude
        // off-diagonal entry as a hyperbolic 2x2 block, or stop on a zero
        // block.
        std::size_t bi = 0, bj = 0;
        bool found = false;
        for (std::size_t s = 0; s < active.size(); ++s)
            for (std::size_t t = s + 1; t < active.size(); ++t) {
                const Rational& e = a(active[s], active[t]);
                if (sgn(e) == 0) continue;
                if (!found || cmp(abs(e), abs(a(bi, bj))) > 0) {
                    bi = active[s];
                    bj = active[t];
                    found = true;
                }
            }
        if (!found) {
            log.zero_block_dim = active.size();
            in.zero += static_cast<int>(active.size());
            break;
        }

        const Rational b = a(bi, bj);
        in.positive += 1;
        in.negative += 1;
        log.events.push_back({PivotEvent::Kind::Block2x2, bi, bj, Rational(-b * b)});
        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](std::size_t u) { return u == bi || u == bj; }),
                     active.end());
        // Schur complement w.r.t. [[0, b], [b, 0]].
        for (std::size_t s = 0; s < active.size(); ++s)
            for (std::size_t t = 0; t <= s; ++t) {
                const std::size_t u = active[s], v = active[t];
                Rational upd = a(u, v) - (a(u, bi) * a(v, bj) + a(u, bj) * a(v, bi)) / b;
                a(u, v) = upd;
                a(v, u) = std::move(upd);
            }
    }
    return res;
}

std::vector<Rational> charpoly_exact(const SymMatrix<Rational>& m) {
    const std::size_t n = m.order();
    std::vector<Rational> coeffs(n + 1);
    coeffs[0] = 1;
    const Matrix<Rational> a = m.dense();
    Matrix<Rational> work = Matrix<Rational>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        work = a * work;
        Rational trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += work(i, i);
        coeffs[k] = -trace / Rational(static_cast<long>(k));
        for (std::size_t i = 0; i < n; ++i) work(i, i) += coeffs[k];
    }
    return coeffs;
}

Inertia inertia_from_charpoly(std::span<const Rational> coeffs) {
    if (coeffs.empty() || coeffs.front() != 1)
        throw std::invalid_argument("characteristic polynomial must be monic");
    const std::size_t n = coeffs.size() - 1;
    std::size_t zero = 0;
    while (zero < n && sgn(coeffs[n - zero]) == 0) ++zero;
    int changes = 0;
    int last = 1; // leading coefficient
    for (std::size_t k = 1; k + zero <= n; ++k) {
        const int s = sgn(coeffs[k]);
        if (s == 0) continue;
        if (s != last) ++changes;
        last = s;
    }
    Inertia in;
    in.zero = static_cast<int>(zero);
    in.positive = changes;
    in.negative = static_cast<int>(n - zero) - changes;
    return in;
}

namespace {

// Elimination with row pivoting; tracks the permutation sign.
Rational det_inplace(Matrix<Rational>& a) {
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a(piv, col)) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0) continue;
            const Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

} // namespace

Rational minor_exact(const SymMatrix<Rational>& m,
                     std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor needs equally many rows and columns");
    for (std::size_t r : rows)
        if (r >= m.order()) throw IndexOutOfRange("row index out of range");
    for (std::size_t c : cols)
        if (c >= m.order()) throw IndexOutOfRange("column index out of range");
    Matrix<Rational> sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m.at(rows[i], cols[j]);
    return det_inplace(sub);
}

Rational det_exact(Matrix<Rational> m) {
    if (m.rows() != m.cols()) throw LengthMismatch("determinant of a non-square matrix");
    return det_inplace(m);
}

std::size_t rank_exact(Matrix<Rational> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && sgn(m(piv, col)) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(rank, j));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (sgn(m(i, col)) == 0) continue;
            const Rational f = m(i, col) / m(rank, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace kwong
