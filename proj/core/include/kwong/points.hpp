#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kwong/errors.hpp"
#include "kwong/rational.hpp"

namespace kwong {

template <class T>
class Points;

template <class T>
Points<T> validate_points(std::vector<T> raw);

/// Strictly increasing tuple of distinct positive scalars. Input is
/// canonicalized to ascending order at the boundary; duplicates and
/// nonpositive values are rejected.
template <class T>
class Points {
public:
    friend Points validate_points<T>(std::vector<T> raw);

    std::size_t size() const { return values_.size(); }
    const T& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<T>& values() const { return values_; }

    const T& min() const { return values_.front(); }
    const T& max() const { return values_.back(); }

    friend bool operator==(const Points&, const Points&) = default;

private:
    explicit Points(std::vector<T> sorted) : values_(std::move(sorted)) {}
    std::vector<T> values_;
};

template <class T>
Points<T> validate_points(std::vector<T> raw) {
    if (raw.empty()) throw NonpositivePoint("point list is empty");
    for (const T& v : raw) {
        if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(v) || !(v > 0.0))
                throw NonpositivePoint("point " + format_double(v) + " is not a positive finite value");
        } else {
            if (!(v > 0)) throw NonpositivePoint("point " + to_string(v) + " is not positive");
        }
    }
    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (raw[i] == raw[i + 1]) {
            if constexpr (std::is_same_v<T, double>)
                throw DuplicatePoint("duplicate point " + format_double(raw[i]));
            else
                throw DuplicatePoint("duplicate point " + to_string(raw[i]));
        }
    }
    return Points<T>(std::move(raw));
}

inline Points<double> to_double_points(const Points<Rational>& pts) {
    std::vector<double> vals;
    vals.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals.push_back(to_double(pts[i]));
    return validate_points(std::move(vals));
}

/// Comma-separated textual form; exact and round-trip safe in both modes.
template <class T>
std::string points_to_string(const Points<T>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ',';
        if constexpr (std::is_same_v<T, double>)
            out += format_double(pts[i]);
        else
            out += to_string(pts[i]);
    }
    return out;
}

namespace detail {
inline std::vector<std::string> split_csv(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}
} // namespace detail

inline Points<Rational> parse_points_rational(std::string_view text) {
    std::vector<Rational> vals;
    for (const auto& tok : detail::split_csv(text)) vals.push_back(parse_rational(tok));
    return validate_points(std::move(vals));
}

inline Points<double> parse_points_double(std::string_view text) {
    std::vector<double> vals;
    for (const auto& tok : detail::split_csv(text)) {
        if (tok.find('/') != std::string::npos) {
            vals.push_back(to_double(parse_rational(tok)));
        } else {
            vals.push_back(std::stod(tok));
        }
    }
    return validate_points(std::move(vals));
}

} // namespace kwong
