#pragma once

#include <cmath>
#include <stdexcept>

#include "kwong/rational.hpp"

namespace kwong {

/// A real exponent together with its integrality classification. Integrality
/// is decided exactly when constructed from an integer or a rational, and by
/// the tolerance |r - round(r)| < 1e-12 when constructed from binary64.
class Exponent {
public:
    static constexpr double kIntegerTolerance = 1e-12;

    Exponent(long long k) : value_(static_cast<double>(k)), integer_(k), has_integer_(true) {}
    Exponent(int k) : Exponent(static_cast<long long>(k)) {}

    Exponent(double v) : value_(v) {
        if (std::isfinite(v) && std::fabs(v) < 4.5e15) {
            const double r = std::round(v);
            if (std::fabs(v - r) < kIntegerTolerance) {
                integer_ = static_cast<long long>(r);
                has_integer_ = true;
                value_ = r;
            }
        }
    }

    static Exponent from_rational(const Rational& q) {
        if (is_integral(q)) {
            if (!q.get_num().fits_slong_p())
                throw std::overflow_error("exponent too large");
            return Exponent(static_cast<long long>(q.get_num().get_si()));
        }
        return Exponent(to_double(q));
    }

    double value() const { return value_; }
    bool is_integer() const { return has_integer_; }

    long long as_integer() const {
        if (!has_integer_) throw std::logic_error("exponent is not an integer");
        return integer_;
    }

    bool is_odd_integer() const { return has_integer_ && (integer_ % 2 != 0); }

    Exponent negated() const {
        if (has_integer_) return Exponent(-integer_);
        return Exponent(-value_);
    }

private:
    double value_;
    long long integer_ = 0;
    bool has_integer_ = false;
};

} // namespace kwong
