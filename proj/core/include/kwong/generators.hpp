#pragma once

#include <cmath>
#include <type_traits>
#include <vector>

#include "kwong/errors.hpp"
#include "kwong/matrix.hpp"

namespace kwong {

namespace detail {

/// p^r in the matrix's scalar mode. Exact mode supports integer exponents
/// only (negative ones via exact reciprocals); everything else is binary64.
template <class T>
T scalar_pow(const T& base, const Exponent& r) {
    if constexpr (std::is_same_v<T, Rational>) {
        if (!r.is_integer())
            throw ExactModeUnsupported("non-integer exponent requested in exact mode");
        return pow_int(base, r.as_integer());
    } else {
        return std::pow(base, r.value());
    }
}

/// log(cosh y), overflow-free for any finite y.
inline double log_cosh(double y) {
    const double a = std::fabs(y);
    return a + std::log1p(std::exp(-2.0 * a)) - 0.6931471805599453094; // ln 2
}

} // namespace detail

/// [(p_i^r + p_j^r) / (p_i + p_j)]; entrywise positive for all real r.
template <class T>
SymMatrix<T> gen_kwong(const Points<T>& pts, const Exponent& r) {
    const std::size_t n = pts.size();
    std::vector<T> powers(n);
    for (std::size_t i = 0; i < n; ++i) powers[i] = detail::scalar_pow(pts[i], r);
    SymMatrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            out.set(i, j, (powers[i] + powers[j]) / (pts[i] + pts[j]));
    out.set_provenance(FamilySpec<T>(Family::Kwong, pts, r));
    return out;
}

/// [2 / (p_i + p_j)]; coincides entrywise with the r = 0 case above.
template <class T>
SymMatrix<T> gen_cauchy(const Points<T>& pts) {
    const std::size_t n = pts.size();
    SymMatrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) out.set(i, j, T(2) / (pts[i] + pts[j]));
    out.set_provenance(FamilySpec<T>(Family::Cauchy, pts, Exponent(0)));
    return out;
}

/// [(p_i^r - p_j^r) / (p_i - p_j)] with the divided-difference limit
/// r * p_i^(r-1) on the diagonal.
template <class T>
SymMatrix<T> gen_loewner(const Points<T>& pts, const Exponent& r) {
    const std::size_t n = pts.size();
    std::vector<T> powers(n);
    for (std::size_t i = 0; i < n; ++i) powers[i] = detail::scalar_pow(pts[i], r);
    SymMatrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            out.set(i, j, (powers[i] - powers[j]) / (pts[i] - pts[j]));
        if constexpr (std::is_same_v<T, Rational>) {
            out.set(i, i, Rational(r.as_integer()) * pow_int(pts[i], r.as_integer() - 1));
        } else {
            out.set(i, i, r.value() * std::pow(pts[i], r.value() - 1.0));
        }
    }
    out.set_provenance(FamilySpec<T>(Family::Loewner, pts, r));
    return out;
}

/// [|p_i - p_j|^r], zero diagonal. Requires r > 0: the r = 0 diagonal would
/// need a 0^0 convention, so it is rejected rather than guessed.
template <class T>
SymMatrix<T> gen_power_absdiff(const Points<T>& pts, const Exponent& r) {
    if (!(r.value() > 0.0))
        throw NonpositiveExponent("absolute-difference family requires r > 0");
    const std::size_t n = pts.size();
    SymMatrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            out.set(i, j, detail::scalar_pow(pts[i] - pts[j], r));
        out.set(i, i, T(0));
    }
    out.set_provenance(FamilySpec<T>(Family::PowerAbsDiff, pts, r));
    return out;
}

/// [cosh(r(x_i - x_j)) / cosh(x_i - x_j)] at distinct real nodes, binary64
/// only. Entries are evaluated in the log domain, so the ratio stays finite
/// wherever it is representable even when either cosh alone would overflow.
inline SymMatrix<double> gen_cosh_kwong(std::vector<double> xs, const Exponent& r) {
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i] == xs[i + 1])
            throw DuplicatePoint("duplicate node " + format_double(xs[i]));
    const std::size_t n = xs.size();
    SymMatrix<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double d = xs[i] - xs[j];
            out.set(i, j, std::exp(detail::log_cosh(r.value() * d) - detail::log_cosh(d)));
        }
        out.set(i, i, 1.0);
    }
    return out;
}

/// The cosh form congruent to gen_kwong(pts, r) under the node map
/// x_i = ln(p_i) / 2; same inertia by construction.
inline SymMatrix<double> gen_cosh_kwong_from_points(const Points<double>& pts, const Exponent& r) {
    std::vector<double> xs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) xs[i] = 0.5 * std::log(pts[i]);
    auto out = gen_cosh_kwong(std::move(xs), r);
    out.set_provenance(FamilySpec<double>(Family::CoshKwong, pts, r));
    return out;
}

/// [(p_i^r + q_j^r) / (p_i + q_j)]; not symmetric unless q = p.
template <class T>
Matrix<T> gen_cross_kwong(const Points<T>& p, const Points<T>& q, const Exponent& r) {
    if (p.size() != q.size()) throw LengthMismatch("cross family requires equally long tuples");
    const std::size_t n = p.size();
    std::vector<T> pr(n), qr(n);
    for (std::size_t i = 0; i < n; ++i) {
        pr[i] = detail::scalar_pow(p[i], r);
        qr[i] = detail::scalar_pow(q[i], r);
    }
    Matrix<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = (pr[i] + qr[j]) / (p[i] + q[j]);
    return out;
}

/// W: r x n with rows (p_j^0, ..., p_j^(r-1)); V: r x r antidiagonal with
/// alternating +/-1 entries starting and ending at +1 (hence r odd). V is
/// symmetric and involutory, and W^T V W reproduces the r-exponent matrix
/// of gen_kwong on the same points.
template <class T>
struct VandermondePair {
    Matrix<T> w;
    Matrix<T> v;
};

template <class T>
VandermondePair<T> gen_vandermonde_pair(const Points<T>& pts, long long r) {
    const std::size_t n = pts.size();
    if (r < 1 || r % 2 == 0 || static_cast<std::size_t>(r) > n)
        throw BadExponent("factorization needs an odd exponent in [1, n]");
    const auto rr = static_cast<std::size_t>(r);
    Matrix<T> w(rr, n);
    for (std::size_t j = 0; j < n; ++j) {
        T acc(1);
        for (std::size_t i = 0; i < rr; ++i) {
            w(i, j) = acc;
            if (i + 1 < rr) acc = acc * pts[j];
        }
    }
    Matrix<T> v(rr, rr);
    for (std::size_t i = 0; i < rr; ++i) v(i, rr - 1 - i) = (i % 2 == 0) ? T(1) : T(-1);
    return {std::move(w), std::move(v)};
}

/// Builds the symmetric matrix described by a FamilySpec. The cross family
/// is not symmetric and must be built via gen_cross_kwong.
template <class T>
SymMatrix<T> build_symmetric(const FamilySpec<T>& spec) {
    switch (spec.family) {
        case Family::Kwong: return gen_kwong(spec.points, spec.r);
        case Family::Cauchy: return gen_cauchy(spec.points);
        case Family::Loewner: return gen_loewner(spec.points, spec.r);
        case Family::PowerAbsDiff: return gen_power_absdiff(spec.points, spec.r);
        case Family::CoshKwong:
            if constexpr (std::is_same_v<T, double>) {
                return gen_cosh_kwong_from_points(spec.points, spec.r);
            } else {
                throw ExactModeUnsupported("cosh family is binary64 only");
            }
        case Family::CrossKwong:
            throw std::invalid_argument("cross family is not symmetric");
    }
    throw std::invalid_argument("unknown family");
}

} // namespace kwong
