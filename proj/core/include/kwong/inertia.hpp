#pragma once

#include <cstddef>
#include <string>

namespace kwong {

/// Eigenvalue sign counts of a real symmetric matrix: positive / zero /
/// negative. The three counts of a valid triple sum to the matrix order.
struct Inertia {
    int positive = 0;
    int zero = 0;
    int negative = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;

    int sum() const { return positive + zero + negative; }

    Inertia plus(const Inertia& other) const {
        return {positive + other.positive, zero + other.zero, negative + other.negative};
    }

    std::string str() const {
        return "(" + std::to_string(positive) + "," + std::to_string(zero) + "," +
               std::to_string(negative) + ")";
    }
};

inline bool inertia_sum_check(const Inertia& in, std::size_t n) {
    return in.positive >= 0 && in.zero >= 0 && in.negative >= 0 &&
           static_cast<std::size_t>(in.sum()) == n;
}

} // namespace kwong
