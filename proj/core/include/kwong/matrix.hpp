#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kwong/errors.hpp"
#include "kwong/exponent.hpp"
#include "kwong/points.hpp"
#include "kwong/rational.hpp"

namespace kwong {

/// Dense general matrix, row-major. Used for rectangular factors,
/// non-symmetric cross matrices and basis columns.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw LengthMismatch("matrix product dimension mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

enum class Family { Kwong, Loewner, PowerAbsDiff, CoshKwong, Cauchy, CrossKwong };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Kwong: return "kwong";
        case Family::Loewner: return "loewner";
        case Family::PowerAbsDiff: return "absdiff";
        case Family::CoshKwong: return "cosh";
        case Family::Cauchy: return "cauchy";
        case Family::CrossKwong: return "cross";
    }
    return "?";
}

inline Family family_from_name(const std::string& s) {
    if (s == "kwong") return Family::Kwong;
    if (s == "loewner") return Family::Loewner;
    if (s == "absdiff") return Family::PowerAbsDiff;
    if (s == "cosh") return Family::CoshKwong;
    if (s == "cauchy") return Family::Cauchy;
    if (s == "cross") return Family::CrossKwong;
    throw std::invalid_argument("unknown matrix family: " + s);
}

/// Which matrix to build: family tag, node points and exponent. A second
/// point tuple is present exactly for the (non-symmetric) cross family.
template <class T>
struct FamilySpec {
    Family family;
    Points<T> points;
    std::optional<Points<T>> second_points;
    Exponent r;

    FamilySpec(Family f, Points<T> pts, Exponent expo)
        : family(f), points(std::move(pts)), r(expo) {
        if (f == Family::CrossKwong)
            throw LengthMismatch("cross family requires a second point tuple");
    }

    FamilySpec(Family f, Points<T> pts, Points<T> qts, Exponent expo)
        : family(f), points(std::move(pts)), second_points(std::move(qts)), r(expo) {
        if (f != Family::CrossKwong)
            throw LengthMismatch("second point tuple is only valid for the cross family");
    }
};

/// Real symmetric matrix; only the lower triangle is stored, so symmetry
/// holds by construction. The scalar mode (exact rational or binary64) is
/// the template parameter, fixed at construction.
template <class T>
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : order_(n), tri_(n * (n + 1) / 2) {}

    std::size_t order() const { return order_; }

    const T& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return i >= j ? tri_[idx(i, j)] : tri_[idx(j, i)];
    }

    void set(std::size_t i, std::size_t j, T v) {
        check(i, j);
        tri_[i >= j ? idx(i, j) : idx(j, i)] = std::move(v);
    }

    Matrix<T> dense() const {
        Matrix<T> out(order_, order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j <= i; ++j) out(i, j) = out(j, i) = tri_[idx(i, j)];
        return out;
    }

    /// Requires exact entrywise symmetry; use congruence_transform to build
    /// symmetric products without rounding asymmetry.
    static SymMatrix from_dense(const Matrix<T>& m) {
        if (m.rows() != m.cols()) throw LengthMismatch("matrix is not square");
        SymMatrix out(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                if (!(m(i, j) == m(j, i)))
                    throw std::invalid_argument("matrix is not symmetric");
                out.set(i, j, m(i, j));
            }
        return out;
    }

    const std::optional<FamilySpec<T>>& provenance() const { return provenance_; }
    void set_provenance(FamilySpec<T> spec) { provenance_ = std::move(spec); }

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.order_ == b.order_ && a.tri_ == b.tri_;
    }

private:
    static std::size_t idx(std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; }
    void check(std::size_t i, std::size_t j) const {
        if (i >= order_ || j >= order_) throw IndexOutOfRange("symmetric matrix index out of range");
    }

    std::size_t order_ = 0;
    std::vector<T> tri_;
    std::optional<FamilySpec<T>> provenance_;
};

/// X^T M X for X with M.order() rows. The result's lower triangle is
/// computed directly, so it is symmetric by construction in both scalar
/// modes (no float symmetrization step is needed).
template <class T>
SymMatrix<T> congruence_transform(const SymMatrix<T>& m, const Matrix<T>& x) {
    const std::size_t n = m.order();
    if (x.rows() != n) throw LengthMismatch("congruence factor has wrong row count");
    const std::size_t k = x.cols();
    Matrix<T> mx(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < k; ++a) {
            T acc(0);
            for (std::size_t j = 0; j < n; ++j) acc += m.at(i, j) * x(j, a);
            mx(i, a) = acc;
        }
    SymMatrix<T> out(k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            T acc(0);
            for (std::size_t i = 0; i < n; ++i) acc += x(i, a) * mx(i, b);
            out.set(a, b, std::move(acc));
        }
    return out;
}

/// P^T M P for a permutation given as an index map (entry i of the result
/// row/column layout takes original index perm[i]).
template <class T>
SymMatrix<T> permuted(const SymMatrix<T>& m, std::span<const std::size_t> perm) {
    if (perm.size() != m.order()) throw LengthMismatch("permutation length mismatch");
    SymMatrix<T> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j <= i; ++j) out.set(i, j, m.at(perm[i], perm[j]));
    return out;
}

/// x^T M x.
template <class T>
T quad_form(const SymMatrix<T>& m, std::span<const T> x) {
    if (x.size() != m.order()) throw LengthMismatch("vector length mismatch");
    T acc(0);
    for (std::size_t i = 0; i < m.order(); ++i) {
        T row(0);
        for (std::size_t j = 0; j < m.order(); ++j) row += m.at(i, j) * x[j];
        acc += x[i] * row;
    }
    return acc;
}

} // namespace kwong
