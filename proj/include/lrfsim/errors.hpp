#pragma once

#include <stdexcept>
#include <string>

namespace lrfsim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Spherical angles are undefined when the queried point coincides with the
/// LRF light-exit point.
struct ZeroRangeError : Error {
  using Error::Error;
};

/// Zenith steering outside [0, pi].
struct GimbalRangeError : Error {
  using Error::Error;
};

/// Sweep over an interval of non-positive width.
struct EmptyIntervalError : Error {
  using Error::Error;
};

/// Scene query outside [0, duration].
struct TimeRangeError : Error {
  using Error::Error;
};

/// Malformed scenario file; message carries field context.
struct SchemaError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

/// Map file with a bad magic, version, or truncated payload.
struct FormatVersionError : Error {
  using Error::Error;
};

}  // namespace lrfsim
