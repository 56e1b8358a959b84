#pragma once

#include <stdexcept>
#include <string>

namespace panelkit {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Panel construction / data errors
struct MissingCellError : Error { using Error::Error; };
struct DuplicateCellError : Error { using Error::Error; };
struct GapInPeriodsError : Error { using Error::Error; };
struct NonPositiveForLogError : Error { using Error::Error; };
struct MissingVariableError : Error { using Error::Error; };
struct MissingYearError : Error { using Error::Error; };

// Numeric kernel errors
struct SequenceTooShortError : Error { using Error::Error; };
struct RankDeficientError : Error { using Error::Error; };
struct TooFewObservationsError : Error { using Error::Error; };
struct TooFewPeriodsError : Error { using Error::Error; };
struct EmptySequenceError : Error { using Error::Error; };
struct NegativeBandwidthError : Error { using Error::Error; };
struct SingleEntityError : Error { using Error::Error; };

// Configuration / input errors
struct ParseError : Error { using Error::Error; };
struct InvalidParametersError : Error { using Error::Error; };

}  // namespace panelkit
