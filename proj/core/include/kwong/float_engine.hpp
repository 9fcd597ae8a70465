#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kwong/inertia.hpp"
#include "kwong/matrix.hpp"

namespace kwong {

enum class Route { Direct, CoshCongruence };
enum class RoutePolicy { Direct, CoshCongruence, Auto };

inline std::string route_name(Route r) {
    return r == Route::Direct ? "direct" : "cosh-congruence";
}

struct EigResult {
    std::vector<double> eigenvalues; // ascending
    bool converged = true;
    int sweeps = 0;
};

/// Eigenvalues of a binary64 symmetric matrix by cyclic Jacobi rotations.
/// Stops once the off-diagonal Frobenius norm falls below
/// sweep_tol * ||M||_F; if max_sweeps is exhausted first the best iterate is
/// returned with converged = false.
EigResult eig_sym(const SymMatrix<double>& m, double sweep_tol = 1e-15, int max_sweeps = 40);

/// Eigenvalues, the zero/nonzero split actually applied, and the resulting
/// inertia. gap_ratio = smallest magnitude classified nonzero over largest
/// magnitude classified zero (infinity when nothing was classified zero).
struct SpectrumReport {
    std::vector<double> eigenvalues; // ascending
    double zero_threshold = 0.0;
    Inertia inertia;
    double gap_ratio = 0.0;
    Route route = Route::Direct;
    bool converged = true;
};

/// Splits a sorted spectrum into negative / zero / positive. With no
/// expected nullity the threshold is 64 * n * eps * norm_scale. With an
/// expected nullity z, the z smallest-magnitude eigenvalues are classified
/// zero, and the split must be backed by a magnitude gap of at least 10^3
/// or AmbiguousNullity is raised.
SpectrumReport classify_inertia(std::vector<double> eigenvalues, double norm_scale,
                                std::optional<int> expected_nullity = std::nullopt);

/// Builds the requested family in binary64 and classifies its inertia.
/// Under the Auto policy, Kwong matrices with point spread above 10^3 or
/// r > 20 are evaluated through the congruent cosh form, whose entries are
/// far better scaled; the inertia is unchanged by the congruence.
SpectrumReport inertia_float(const FamilySpec<double>& spec,
                             RoutePolicy policy = RoutePolicy::Auto,
                             std::optional<int> expected_nullity = std::nullopt);

} // namespace kwong
