#pragma once

#include <cstddef>
#include <vector>

#include "kwong/exact_engine.hpp"
#include "kwong/float_engine.hpp"
#include "kwong/generators.hpp"
#include "kwong/inertia.hpp"
#include "kwong/matrix.hpp"

namespace kwong {

struct FactorizationCheck {
    bool holds = false;
    Rational max_residual; // largest |K - W^T V W| entry
};

/// Entrywise exact check that the odd-exponent matrix equals W^T V W for
/// the Vandermonde pair on the same points.
FactorizationCheck verify_vandermonde_factorization(const Points<Rational>& pts, long long r);

struct SylvesterCheck {
    bool holds = false;
    Inertia compressed; // inertia of X^T A X
    Inertia expected;   // inertia of A plus (0, n - r, 0)
};

/// For Hermitian A (r x r) and full-rank X (r x n): the inertia of X^T A X
/// must equal the inertia of A plus n - r extra zeros. Raises RankDeficient
/// when X does not have full row rank.
SylvesterCheck generalized_sylvester_check(const SymMatrix<Rational>& a,
                                           const Matrix<Rational>& x);

/// Exact check of the three-term recurrence
/// K_r = D^(r-1) E - D K_(r-2) D + E D^(r-1) with D = diag(points) and E the
/// all-ones matrix, for integer r >= 2.
bool verify_three_term_identity(const Points<Rational>& pts, long long r);

/// Exact check of K_(-r) = D^(-r) K_r D^(-r) for integer r.
bool verify_negative_exponent_congruence(const Points<Rational>& pts, long long r);

/// Basis of the subspace cut out by the first j vanishing moments
/// sum_i p_i^t x_i = 0, t = 0..j-1. Columns are integer vectors with gcd 1
/// and positive leading entry, so the basis is reproducible.
struct SubspaceBasis {
    std::size_t depth = 0;
    Matrix<Rational> columns; // n x (n - j)
};

SubspaceBasis basis_Hj(const Points<Rational>& pts, std::size_t j);

/// Same basis in an arbitrary scalar mode (no normalization for binary64).
template <class T>
Matrix<T> basis_Hj_matrix(const Points<T>& pts, std::size_t j);

/// Inertia of the compression P^T M P onto the depth-j moment subspace of
/// the given points; exact in exact mode, classified eigenvalues in
/// binary64 mode.
Inertia conditional_inertia(const SymMatrix<Rational>& m, const Points<Rational>& pts,
                            std::size_t j);
Inertia conditional_inertia(const SymMatrix<double>& m, const Points<double>& pts,
                            std::size_t j);

} // namespace kwong
