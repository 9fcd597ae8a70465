#include "kwong/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "kwong/errors.hpp"

namespace kwong {

namespace {

Inertia odd_integer_inertia(int n, long long r) {
    // r odd, 1 <= r <= n. Signature comes from the alternating antidiagonal
    // congruence factor: its trace is +1 when r = 1 (mod 4) and -1 when
    // r = 3 (mod 4); the remaining n - r dimensions are null.
    const auto low = static_cast<int>(r / 2);       // floor(r/2)
    const auto high = static_cast<int>(r / 2 + 1);  // ceil(r/2)
    if (r % 4 == 1) return {high, n - static_cast<int>(r), low};
    return {low, n - static_cast<int>(r), high};
}

Inertia open_band_inertia(int n, long long k) {
    // k odd, k < r < k + 2 < n: all n eigenvalues are nonzero and the
    // counts freeze at ceil(k/2) on one side.
    const auto kk = static_cast<int>((k + 1) / 2); // ceil(k/2)
    if (k % 4 == 1) return {kk, 0, n - kk};
    return {n - kk, 0, kk};
}

Inertia tail_inertia(int n) {
    if (n % 2 == 1) return odd_integer_inertia(n, n);
    return {n / 2, 0, n / 2};
}

long long greatest_odd_below(const Exponent& r) {
    long long f;
    if (r.is_integer()) {
        f = r.as_integer() - 1;
    } else {
        f = static_cast<long long>(std::floor(r.value()));
    }
    if (f % 2 == 0) f -= 1;
    return f;
}

} // namespace

std::string PredictionCase::tag_label() const {
    switch (tag) {
        case CaseTag::Order1: return "Order1";
        case CaseTag::NegativeReflected: return "NegativeReflected";
        case CaseTag::ZeroExponent: return "ZeroExponent";
        case CaseTag::UnitInterval: return "UnitInterval";
        case CaseTag::OddInteger: return "OddInteger(" + std::to_string(parameter) + ")";
        case CaseTag::OpenBand: return "OpenBand(" + std::to_string(parameter) + ")";
        case CaseTag::TailOddN: return "TailOddN";
        case CaseTag::TailEvenN: return "TailEvenN";
    }
    return "?";
}

PredictionCase predict_kwong_inertia(int n, const Exponent& r) {
    if (n < 1) throw std::invalid_argument("order must be at least 1");
    if (r.value() < 0.0) {
        PredictionCase inner = predict_kwong_inertia(n, r.negated());
        return {CaseTag::NegativeReflected, inner.parameter, inner.inertia};
    }
    if (n == 1) return {CaseTag::Order1, 0, {1, 0, 0}};
    if (r.is_integer() && r.as_integer() == 0) return {CaseTag::ZeroExponent, 0, {n, 0, 0}};
    if (r.value() < 1.0) return {CaseTag::UnitInterval, 0, {n, 0, 0}};
    if (r.is_odd_integer() && r.as_integer() <= n)
        return {CaseTag::OddInteger, r.as_integer(), odd_integer_inertia(n, r.as_integer())};

    const long long k = greatest_odd_below(r);
    if (k + 2 < n) return {CaseTag::OpenBand, k, open_band_inertia(n, k)};
    if (n % 2 == 1) return {CaseTag::TailOddN, k, tail_inertia(n)};
    return {CaseTag::TailEvenN, k, tail_inertia(n)};
}

bool predict_singular(int n, const Exponent& r) {
    if (!r.is_integer()) return false;
    const long long k = std::llabs(r.as_integer());
    return k % 2 == 1 && k < n;
}

std::vector<long long> flip_points(int n) {
    if (n < 2) throw std::invalid_argument("flip points need order at least 2");
    std::vector<long long> out;
    for (long long k = 1; k <= n - 1; k += 2) out.push_back(k);
    return out;
}

Inertia predict_absdiff_inertia(int n, const Exponent& r) {
    if (!(r.value() > 0.0))
        throw NonpositiveExponent("absolute-difference prediction requires r > 0");
    const Exponent shifted =
        r.is_integer() ? Exponent(r.as_integer() + 1) : Exponent(r.value() + 1.0);
    return predict_kwong_inertia(n, shifted).inertia;
}

std::optional<Inertia> predict_loewner_inertia_partial(int n, const Exponent& r) {
    const double v = r.value();
    const bool integral = r.is_integer();
    if (v > 0.0 && v < 1.0 && !integral) return Inertia{n, 0, 0};
    if (v > 1.0 && v < 2.0 && !integral) return Inertia{1, 0, n - 1};
    return std::nullopt;
}

} // namespace kwong
