#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kwong/exponent.hpp"
#include "kwong/inertia.hpp"

namespace kwong {

/// Which branch of the closed-form inertia applies to a given (n, r), plus
/// the predicted triple. The branch is uniquely determined: negative r
/// reflects to |r|, order 1 and the [0, 1) band are positive definite, odd
/// integers r <= n are the singular cases, open bands between consecutive
/// odd integers below n carry constant nonsingular inertia, and beyond the
/// last covered band the inertia freezes at its order-n value.
enum class CaseTag {
    Order1,
    NegativeReflected,
    ZeroExponent,
    UnitInterval,
    OddInteger,
    OpenBand,
    TailOddN,
    TailEvenN,
};

struct PredictionCase {
    CaseTag tag;
    long long parameter = 0; // OddInteger: r; OpenBand: band's lower odd integer
    Inertia inertia;

    std::string tag_label() const;
};

/// Closed-form inertia of the n x n matrix [(p_i^r + p_j^r) / (p_i + p_j)];
/// the prediction does not depend on the choice of distinct positive points.
/// Total over all real r and every n >= 1.
PredictionCase predict_kwong_inertia(int n, const Exponent& r);

/// True exactly when |r| is an odd integer smaller than n.
bool predict_singular(int n, const Exponent& r);

/// The values of r at which the inertia changes: all odd integers <= n - 1.
std::vector<long long> flip_points(int n);

/// Inertia of [|p_i - p_j|^r] for r > 0; equals the Kwong prediction at
/// exponent r + 1.
Inertia predict_absdiff_inertia(int n, const Exponent& r);

/// The two Loewner ranges asserted here: (n,0,0) on 0 < r < 1 and
/// (1,0,n-1) on 1 < r < 2. Everything else is intentionally absent.
std::optional<Inertia> predict_loewner_inertia_partial(int n, const Exponent& r);

} // namespace kwong
