#ifndef HANKELDET_VERIFY_HPP
#define HANKELDET_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankeldet/closed_forms.hpp"

namespace hankeldet {

struct IndexRecord {
  long index = 0;
  std::string oracle;       // brute-force determinant
  std::string closed_form;  // registry formula
  bool match = false;
  std::optional<bool> claimed_zero;  // vanishing claim at this index, if any
  bool claim_holds = true;           // oracle agrees with the claim
  double elapsed_ms = 0.0;

  bool ok() const { return match && claim_holds; }
  /// Equality ignoring elapsed_ms.
  bool same_result(const IndexRecord& o) const;
};

struct VerificationReport {
  std::string id;
  std::string sequence;
  Status status = Status::Asserted;
  ParamMap params;
  long max_index = 0;
  std::vector<IndexRecord> records;
  std::string error;  // non-empty if the run aborted

  long matched() const;
  long mismatched() const;
  /// False only for an Asserted identity with a mismatch, a failed
  /// vanishing claim or an error.
  bool passed() const;
  bool same_result(const VerificationReport& o) const;
};

/// Checks H_0..H_max of the identity's sequence against its closed form.
/// `max_index` defaults to the identity's default range. With x in
/// `params`, both sides are evaluated at that point. Throws UnknownIdentity.
VerificationReport verify_identity(std::string_view id, std::optional<long> max_index = std::nullopt,
                                   const ParamMap& params = {});

struct VerifyOptions {
  std::vector<std::string> ids;          // empty = whole registry
  std::optional<long> max_index;         // overrides every default range
  std::map<std::string, long> overrides;  // per-id ranges, applied last
  unsigned jobs = 0;                     // 0 = hardware concurrency
};

/// Reports in registry (or `ids`) order, independent of `jobs`.
std::vector<VerificationReport> verify_all(const VerifyOptions& options = {});

struct RunSummary {
  long identities = 0;
  long passed = 0;
  long asserted_failures = 0;
  long report_only = 0;
  bool ok() const { return asserted_failures == 0; }
};
RunSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace hankeldet

#endif  // HANKELDET_VERIFY_HPP
