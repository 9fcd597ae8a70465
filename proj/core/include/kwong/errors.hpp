#pragma once

#include <stdexcept>
#include <string>

namespace kwong {

/// Base class for all domain errors raised by this library. `name()` returns
/// a stable machine-readable identifier used by the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define KWONG_DEFINE_ERROR(TYPE)                                \
    class TYPE : public Error {                                 \
    public:                                                     \
        explicit TYPE(const std::string& detail)                \
            : Error(#TYPE, detail) {}                           \
    }

KWONG_DEFINE_ERROR(DuplicatePoint);
KWONG_DEFINE_ERROR(NonpositivePoint);
KWONG_DEFINE_ERROR(ExactModeUnsupported);
KWONG_DEFINE_ERROR(NonpositiveExponent);
KWONG_DEFINE_ERROR(LengthMismatch);
KWONG_DEFINE_ERROR(BadExponent);
KWONG_DEFINE_ERROR(IndexOutOfRange);
KWONG_DEFINE_ERROR(AmbiguousNullity);
KWONG_DEFINE_ERROR(DepthOutOfRange);
KWONG_DEFINE_ERROR(RankDeficient);
KWONG_DEFINE_ERROR(AllZeroWeights);
KWONG_DEFINE_ERROR(PreconditionViolated);
KWONG_DEFINE_ERROR(OrderTooLarge);

#undef KWONG_DEFINE_ERROR

} // namespace kwong
