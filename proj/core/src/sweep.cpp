#include "kwong/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "kwong/oracle.hpp"

namespace kwong {

namespace {

std::optional<int> assisted_nullity(std::size_t n, double r) {
    const double nearest = std::round(r);
    if (std::fabs(r - nearest) >= 1e-9) return std::nullopt;
    const auto k = static_cast<long long>(nearest);
    if (k % 2 == 0 || std::llabs(k) >= static_cast<long long>(n)) return std::nullopt;
    return predict_kwong_inertia(static_cast<int>(n), Exponent(k)).inertia.zero;
}

SweepRecord evaluate(const Points<double>& pts, double r, RoutePolicy policy,
                     bool oracle_assist) {
    const FamilySpec<double> spec(Family::Kwong, pts, Exponent(r));
    const auto nullity = oracle_assist ? assisted_nullity(pts.size(), r) : std::nullopt;
    SpectrumReport rep = inertia_float(spec, policy, nullity);
    return {r, std::move(rep.eigenvalues), rep.inertia, rep.route};
}

} // namespace

std::vector<SweepRecord> sweep_inertia(const Points<double>& pts, double r_min, double r_max,
                                       std::size_t steps, RoutePolicy policy) {
    if (!(r_min < r_max)) throw std::invalid_argument("sweep needs r_min < r_max");
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    std::vector<SweepRecord> records;
    records.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double r =
            r_min + (static_cast<double>(i) * (r_max - r_min)) / static_cast<double>(steps - 1);
        records.push_back(evaluate(pts, r, policy, /*oracle_assist=*/true));
    }
    return records;
}

std::vector<TransitionReport> detect_transitions(const Points<double>& pts,
                                                 const std::vector<SweepRecord>& records,
                                                 double refine_tol, RoutePolicy policy) {
    std::vector<TransitionReport> out;
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        const SweepRecord& lo_rec = records[i];
        const SweepRecord& hi_rec = records[i + 1];
        if (lo_rec.inertia == hi_rec.inertia) continue;

        TransitionReport rep;
        rep.r_lo = lo_rec.r;
        rep.r_hi = hi_rec.r;
        rep.before = lo_rec.inertia;
        rep.after = hi_rec.inertia;

        // Bisect on the classification changing away from `before`; plain
        // threshold classification is enough here since the bracket never
        // needs to shrink to the scale where singular grid handling matters.
        double lo = lo_rec.r, hi = hi_rec.r;
        while (hi - lo > refine_tol) {
            const double mid = 0.5 * (lo + hi);
            const Inertia mid_in = evaluate(pts, mid, policy, /*oracle_assist=*/false).inertia;
            if (mid_in == rep.before)
                lo = mid;
            else
                hi = mid;
        }
        rep.refined_location = 0.5 * (lo + hi);
        rep.width = hi - lo;
        out.push_back(std::move(rep));
    }
    return out;
}

void emit_trajectory(const std::vector<SweepRecord>& records, std::ostream& os) {
    if (records.empty()) return;
    const std::size_t n = records.front().eigenvalues.size();
    os << "r";
    for (std::size_t i = 1; i <= n; ++i) os << ",lambda_" << i;
    os << ",pi,zeta,nu\n";
    for (const SweepRecord& rec : records) {
        os << format_double(rec.r);
        for (double v : rec.eigenvalues) os << ',' << format_double(v);
        os << ',' << rec.inertia.positive << ',' << rec.inertia.zero << ','
           << rec.inertia.negative << '\n';
    }
}

} // namespace kwong
