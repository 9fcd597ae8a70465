#include "kwong/float_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kwong/errors.hpp"
#include "kwong/generators.hpp"

namespace kwong {

namespace {

double off_diag_norm(const std::vector<double>& a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) acc += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(acc);
}

} // namespace

EigResult eig_sym(const SymMatrix<double>& m, double sweep_tol, int max_sweeps) {
    const std::size_t n = m.order();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

    double frob = 0.0;
    for (double v : a) frob += v * v;
    frob = std::sqrt(frob);

    EigResult res;
    res.converged = false;
    const double stop = sweep_tol * frob;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diag_norm(a, n) <= stop) {
            res.converged = true;
            break;
        }
        res.sweeps = sweep + 1;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // Skip rotations that cannot change anything at this scale.
                if (std::fabs(apq) < std::numeric_limits<double>::min()) {
                    a[p * n + q] = a[q * n + p] = 0.0;
                    continue;
                }
                const double theta = 0.5 * (aqq - app) / apq;
                double t;
                if (std::fabs(theta) > 1e153) {
                    t = 0.5 / theta; // avoids theta^2 overflow; same limit
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = a[p * n + k] = akp - s * (akq + tau * akp);
                    a[k * n + q] = a[q * n + k] = akq + s * (akp - tau * akq);
                }
            }
        }
    }
    if (!res.converged && off_diag_norm(a, n) <= stop) res.converged = true;

    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = a[i * n + i];
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end());
    return res;
}

SpectrumReport classify_inertia(std::vector<double> eigenvalues, double norm_scale,
                                std::optional<int> expected_nullity) {
    const std::size_t n = eigenvalues.size();
    std::sort(eigenvalues.begin(), eigenvalues.end());
    SpectrumReport rep;
    rep.eigenvalues = std::move(eigenvalues);

    if (expected_nullity) {
        const int z = *expected_nullity;
        if (z < 0 || static_cast<std::size_t>(z) > n)
            throw std::invalid_argument("expected nullity out of range");
        std::vector<std::size_t> by_mag(n);
        for (std::size_t i = 0; i < n; ++i) by_mag[i] = i;
        std::stable_sort(by_mag.begin(), by_mag.end(), [&](std::size_t a, std::size_t b) {
            return std::fabs(rep.eigenvalues[a]) < std::fabs(rep.eigenvalues[b]);
        });
        const double largest_zero =
            z > 0 ? std::fabs(rep.eigenvalues[by_mag[static_cast<std::size_t>(z) - 1]]) : 0.0;
        const double smallest_nonzero =
            static_cast<std::size_t>(z) < n
                ? std::fabs(rep.eigenvalues[by_mag[static_cast<std::size_t>(z)]])
                : std::numeric_limits<double>::infinity();
        if (static_cast<std::size_t>(z) < n && smallest_nonzero == 0.0)
            throw AmbiguousNullity("an exactly zero eigenvalue was classified nonzero");
        rep.gap_ratio = z > 0 && largest_zero > 0.0
                            ? smallest_nonzero / largest_zero
                            : std::numeric_limits<double>::infinity();
        if (z > 0 && rep.gap_ratio < 1e3)
            throw AmbiguousNullity("requested nullity " + std::to_string(z) +
                                   " is not separated by a 10^3 magnitude gap");
        rep.zero_threshold = largest_zero;
        rep.inertia.zero = z;
        for (std::size_t t = static_cast<std::size_t>(z); t < n; ++t) {
            const double v = rep.eigenvalues[by_mag[t]];
            if (v > 0)
                ++rep.inertia.positive;
            else
                ++rep.inertia.negative;
        }
        return rep;
    }

    const double eps = std::numeric_limits<double>::epsilon();
    const double tau = 64.0 * static_cast<double>(n) * eps * norm_scale;
    rep.zero_threshold = tau;
    double largest_zero = 0.0;
    double smallest_nonzero = std::numeric_limits<double>::infinity();
    for (double v : rep.eigenvalues) {
        const double mag = std::fabs(v);
        if (mag <= tau) {
            ++rep.inertia.zero;
            largest_zero = std::max(largest_zero, mag);
        } else {
            smallest_nonzero = std::min(smallest_nonzero, mag);
            if (v > 0)
                ++rep.inertia.positive;
            else
                ++rep.inertia.negative;
        }
    }
    rep.gap_ratio = rep.inertia.zero == 0
                        ? std::numeric_limits<double>::infinity()
                        : (largest_zero > 0.0 ? smallest_nonzero / largest_zero
                                              : std::numeric_limits<double>::infinity());
    return rep;
}

SpectrumReport inertia_float(const FamilySpec<double>& spec, RoutePolicy policy,
                             std::optional<int> expected_nullity) {
    Route route = Route::Direct;
    if (policy == RoutePolicy::CoshCongruence) {
        if (spec.family != Family::Kwong && spec.family != Family::CoshKwong)
            throw std::invalid_argument("cosh route applies to the Kwong family only");
        route = Route::CoshCongruence;
    } else if (policy == RoutePolicy::Auto && spec.family == Family::Kwong) {
        const double spread = spec.points.max() / spec.points.min();
        if (spread > 1e3 || spec.r.value() > 20.0) route = Route::CoshCongruence;
    }
    if (spec.family == Family::CoshKwong) route = Route::CoshCongruence;

    SymMatrix<double> m = route == Route::CoshCongruence
                              ? gen_cosh_kwong_from_points(spec.points, spec.r)
                              : build_symmetric(spec);
    EigResult eig = eig_sym(m);
    double scale = 0.0;
    for (double v : eig.eigenvalues) scale = std::max(scale, std::fabs(v));
    SpectrumReport rep = classify_inertia(std::move(eig.eigenvalues), scale, expected_nullity);
    rep.route = route;
    rep.converged = eig.converged;
    return rep;
}

} // namespace kwong
