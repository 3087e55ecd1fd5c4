#ifndef AISOD_ERROR_HPP
#define AISOD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace aisod {

/// Malformed input data: bad framing, bad armoring, truncated payloads.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bit buffer shorter than the message type requires.
class TruncationError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A message type the decoder does not handle. Callers skip and count these.
class UnsupportedTypeError : public ParseError {
 public:
  UnsupportedTypeError(int type)
      : ParseError("unsupported AIS message type " + std::to_string(type)), type_(type) {}
  int type() const noexcept { return type_; }

 private:
  int type_;
};

/// Multipart reassembly failures (missing or duplicated fragments).
class ReassemblyError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Invalid user configuration: missing columns, bad thresholds, unknown presets.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated precondition on an in-memory value.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aisod

#endif  // AISOD_ERROR_HPP
