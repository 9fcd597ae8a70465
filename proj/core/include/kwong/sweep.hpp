#pragma once

#include <ostream>
#include <vector>

#include "kwong/float_engine.hpp"
#include "kwong/inertia.hpp"
#include "kwong/points.hpp"

namespace kwong {

struct SweepRecord {
    double r = 0.0;
    std::vector<double> eigenvalues; // ascending
    Inertia inertia;
    Route route = Route::Direct;
};

struct TransitionReport {
    double r_lo = 0.0;
    double r_hi = 0.0;
    Inertia before;
    Inertia after;
    double refined_location = 0.0;
    double width = 0.0;
};

/// One record per value of the uniform inclusive grid over [r_min, r_max].
/// Grid values within 1e-9 of an odd integer below n are classified with
/// the known nullity of that singular point; elsewhere the default
/// threshold applies.
std::vector<SweepRecord> sweep_inertia(const Points<double>& pts, double r_min, double r_max,
                                       std::size_t steps,
                                       RoutePolicy policy = RoutePolicy::Auto);

/// One report per adjacent record pair with differing inertia; the change
/// location is refined by bisection on the classified inertia until the
/// bracket is narrower than refine_tol.
std::vector<TransitionReport> detect_transitions(const Points<double>& pts,
                                                 const std::vector<SweepRecord>& records,
                                                 double refine_tol,
                                                 RoutePolicy policy = RoutePolicy::Auto);

/// CSV stream: header "r,lambda_1,...,lambda_n,pi,zeta,nu", one row per
/// record in grid order, full round-trip float precision.
void emit_trajectory(const std::vector<SweepRecord>& records, std::ostream& os);

} // namespace kwong
