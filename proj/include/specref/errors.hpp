#pragma once

#include <stdexcept>
#include <string>

namespace specref {

// Every error class maps to its own process exit code (see README).
enum class ErrorCode : int {
    InvalidScheduleConfig = 3,
    ShapeMismatch = 4,
    NonFiniteInput = 5,
    NonBinaryMask = 6,
    EmptySourceMask = 7,
    DuplicateEntry = 8,
    MissingEntry = 9,
    EmptyMask = 10,
    DimensionMismatch = 11,
    MissingRecords = 12,
    IoError = 13,
    CorruptHeader = 14,
    TruncatedPayload = 15,
    UnsupportedFormat = 16,
    MalformedHeader = 17,
    ConsistencyError = 18,
    MissingTrajectoryEntry = 19,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

#define SPECREF_DEFINE_ERROR(NAME)                                                         \
    class NAME : public Error {                                                            \
    public:                                                                                \
        explicit NAME(const std::string& what) : Error(ErrorCode::NAME, what) {}           \
    }

SPECREF_DEFINE_ERROR(InvalidScheduleConfig);
SPECREF_DEFINE_ERROR(ShapeMismatch);
SPECREF_DEFINE_ERROR(NonFiniteInput);
SPECREF_DEFINE_ERROR(NonBinaryMask);
SPECREF_DEFINE_ERROR(EmptySourceMask);
SPECREF_DEFINE_ERROR(DuplicateEntry);
SPECREF_DEFINE_ERROR(MissingEntry);
SPECREF_DEFINE_ERROR(EmptyMask);
SPECREF_DEFINE_ERROR(DimensionMismatch);
SPECREF_DEFINE_ERROR(MissingRecords);
SPECREF_DEFINE_ERROR(IoError);
SPECREF_DEFINE_ERROR(CorruptHeader);
SPECREF_DEFINE_ERROR(TruncatedPayload);
SPECREF_DEFINE_ERROR(UnsupportedFormat);
SPECREF_DEFINE_ERROR(MalformedHeader);
SPECREF_DEFINE_ERROR(ConsistencyError);
SPECREF_DEFINE_ERROR(MissingTrajectoryEntry);

#undef SPECREF_DEFINE_ERROR

}  // namespace specref
