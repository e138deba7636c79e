#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bchyper/errors.hpp"
#include "bchyper/hyper.hpp"

namespace bchyper::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

inline constexpr const char* kReportVersion = "1";

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Executes one command line (argv[0] is the program name). Reports go to
/// `out`, diagnostics to `err`. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits on commas outside (), [] and {}.
std::vector<std::string> split_list(std::string_view text);

/// Parses "--pfq p,q" together with the alpha and beta lists; throws
/// UsageError on a count mismatch and ParseError on a bad literal.
PfqParams parse_params(const std::string& shape, const std::string& alphas,
                       const std::string& betas);

struct RegionPoint {
  double r1 = 0.0;
  double r2 = 0.0;
  bool converged = false;
};

/// True when the series sums at the real point r1 e1 + r2 e2 in both
/// idempotent components.
bool probe_converges(const PfqParams& params, double r1, double r2);

/// grid x grid cell centres over [0, rmax]^2. Throws UsageError unless
/// p = q + 1.
std::vector<RegionPoint> region_plot(const PfqParams& params, int grid, double rmax);

}  // namespace bchyper::cli
