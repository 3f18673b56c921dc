#ifndef ISOKIT_ERROR_HPP
#define ISOKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace isokit {

enum class ErrorCode {
  NonFinite,
  DegenerateTriangle,
  NotScalene,
  BracketFailure,
  InvalidRegime,
  InvalidSides,
  InvalidArgument,
  UnboundedShape,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; `code()` lets
// callers branch without parsing the message.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isokit

#endif  // ISOKIT_ERROR_HPP
