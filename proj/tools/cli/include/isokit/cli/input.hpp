#ifndef ISOKIT_CLI_INPUT_HPP
#define ISOKIT_CLI_INPUT_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "isokit/geometry.hpp"

namespace isokit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitIo = 3,
};

// Bad flags, malformed documents, or values outside a command's domain.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable paths; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerticesInput {
  Triangle tri;
  friend bool operator==(const VerticesInput&, const VerticesInput&) = default;
};

// Side lengths in any order.
struct SidesInput {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  friend bool operator==(const SidesInput&, const SidesInput&) = default;
};

// Angles at A and B in radians; scale is |AB|.
struct AnglesInput {
  double alpha = 0.0;
  double beta = 0.0;
  double scale = 1.0;
  friend bool operator==(const AnglesInput&, const AnglesInput&) = default;
};

using TriangleInputSpec = std::variant<VerticesInput, SidesInput, AnglesInput>;

// Throws InputError naming the violated constraint.
Triangle resolve(const TriangleInputSpec& spec);

// Reads a {"triangle": ...} document. Throws IoError if the file cannot be
// read and InputError if its content is malformed.
TriangleInputSpec read_input_file(const std::string& path);

}  // namespace isokit::cli

#endif
