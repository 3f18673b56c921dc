#ifndef ISOKIT_CLI_COMMANDS_HPP
#define ISOKIT_CLI_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "isokit/cli/reports.hpp"
#include "isokit/tolerance.hpp"

namespace isokit::cli {

ContainersReport containers_report(const CanonicalTriangle& ct, const Tolerances& tol = {});
void print(const ContainersReport& r, std::ostream& out);

MinReport min_report(const CanonicalTriangle& ct, const Tolerances& tol = {});
void print(const MinReport& r, std::ostream& out);

// Cases are drawn sequentially from the seed, then verified on `threads`
// workers; results keep draw order.
VerifySummary run_verify(const VerifySettings& s, int threads = 1, const Tolerances& tol = {});
void print(const VerifySummary& r, std::ostream& out);

// mode is "sqrt2", "golden" or "alpha-star". A given beta (radians) or b
// replaces the default sweep of its mode.
ExtremalReport run_extremal(const std::string& mode, std::optional<double> beta,
                            std::optional<double> b, const Tolerances& tol = {});
void print(const ExtremalReport& r, std::ostream& out);

// args[0] is the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isokit::cli

#endif
