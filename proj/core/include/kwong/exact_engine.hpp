#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kwong/inertia.hpp"
#include "kwong/matrix.hpp"
#include "kwong/rational.hpp"

namespace kwong {

/// Audit trail of a congruence reduction to diagonal form: every pivot
/// taken, in order, plus the dimension of the final all-zero block. The
/// invariant holds that #Diag + 2 * #Block2x2 + zero_block_dim = n.
struct PivotEvent {
    enum class Kind { Diag, Block2x2 };
    Kind kind;
    std::size_t index;        // Diag: pivot row; Block2x2: first row
    std::size_t second_index; // Block2x2 only
    Rational value;           // Diag: pivot; Block2x2: block determinant
};

struct PivotLog {
    std::vector<PivotEvent> events;
    std::size_t zero_block_dim = 0;

    /// Product of all pivots and block determinants; equals det(M) (zero
    /// when a zero block remains).
    Rational pivot_product() const;
};

struct ExactInertiaResult {
    Inertia inertia;
    PivotLog log;
};

/// Inertia by congruence-preserving elimination: diagonal pivots contribute
/// their sign, each hyperbolic 2x2 block contributes (1,0,1), the trailing
/// zero block contributes its dimension to the zero count. Total on exact
/// symmetric input.
ExactInertiaResult inertia_exact(const SymMatrix<Rational>& m);

/// Monic characteristic polynomial det(lambda*I - M), coefficients from the
/// leading 1 down to the constant term (length n + 1). Computed by the
/// trace recurrence, independently of the elimination path above.
std::vector<Rational> charpoly_exact(const SymMatrix<Rational>& m);

/// Root sign counts from a characteristic polynomial all of whose roots are
/// real: the zero count is the trailing-zero multiplicity and the positive
/// count is the sign-change count of the deflated coefficients, which is
/// exact for real-rooted polynomials.
Inertia inertia_from_charpoly(std::span<const Rational> coeffs);

/// Exact determinant of the selected (not necessarily principal) submatrix.
Rational minor_exact(const SymMatrix<Rational>& m,
                     std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols);

/// Exact determinant / rank of a general matrix (Gaussian elimination).
Rational det_exact(Matrix<Rational> m);
std::size_t rank_exact(Matrix<Rational> m);

} // namespace kwong
