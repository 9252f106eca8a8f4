#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qspec {

/// `n=6,k=2,p=1` or `parts=2,3`; a bare number extends the previous key.
using ClaimParams = std::map<std::string, std::vector<long long>>;

ClaimParams parse_params(std::string_view text);
std::string format_params(const ClaimParams &params);

struct VerificationReport {
  std::string claim;
  std::string params;
  /// Exact claims compare integer polynomials; deviation is then the largest
  /// absolute coefficient difference and the tolerance 0.5.
  bool exact = false;
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> closed_form;
  std::vector<std::string> oracle;
  std::string note;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string params;  // parameters and defaults
  std::string erratum; // empty unless the printed statement needed a fix
};

const std::vector<ClaimInfo> &claim_catalogue();

/// Throws UnknownClaim for ids outside the catalogue and InvalidParameters
/// for missing or out-of-range parameters.
VerificationReport verify_claim(std::string_view id, const ClaimParams &params);

} // namespace qspec
