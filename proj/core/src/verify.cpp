#include "hankeldet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "hankeldet/error.hpp"
#include "hankeldet/hankel.hpp"

namespace hankeldet {

bool IndexRecord::same_result(const IndexRecord& o) const {
  return index == o.index && oracle == o.oracle && closed_form == o.closed_form && match == o.match &&
         claimed_zero == o.claimed_zero && claim_holds == o.claim_holds;
}

long VerificationReport::matched() const {
  return static_cast<long>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.match; }));
}

long VerificationReport::mismatched() const { return static_cast<long>(records.size()) - matched(); }

bool VerificationReport::passed() const {
  if (status == Status::ReportOnly) return true;
  if (!error.empty()) return false;
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.ok(); });
}

bool VerificationReport::same_result(const VerificationReport& o) const {
  if (id != o.id || sequence != o.sequence || status != o.status || params != o.params || max_index != o.max_index ||
      error != o.error || records.size() != o.records.size()) {
    return false;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].same_result(o.records[i])) return false;
  }
  return true;
}

VerificationReport verify_identity(std::string_view id, std::optional<long> max_index, const ParamMap& params) {
  const ClosedFormIdentity& identity = find_identity(id);
  VerificationReport report;
  report.id = identity.id;
  report.sequence = identity.sequence;
  report.status = identity.status;
  report.params = params;
  report.max_index = max_index.value_or(identity.default_max);
  if (report.max_index < 0) throw Error(ErrorCode::OutOfRange, "range must be nonnegative", report.max_index);

  const auto x = params.find("x");
  try {
    const SequenceSpec spec = identity.spec();
    std::vector<SequenceTerm> terms = resolve_range(spec, 2 * report.max_index + 1);
    if (x != params.end()) {
      for (auto& t : terms) t = SequenceTerm(t.eval_at(x->second));
    }
    for (long n = 0; n <= report.max_index; ++n) {
      const auto start = std::chrono::steady_clock::now();
      const SequenceTerm oracle = hankel_det(terms, n).value;
      const SequenceTerm closed = eval_closed_form(identity, n, params);
      const auto stop = std::chrono::steady_clock::now();
      IndexRecord rec;
      rec.index = n;
      rec.oracle = oracle.to_string();
      rec.closed_form = closed.to_string();
      rec.match = oracle == closed;
      rec.claimed_zero = identity.vanishing ? identity.vanishing(n) : std::nullopt;
      if (rec.claimed_zero) rec.claim_holds = oracle.is_zero() == *rec.claimed_zero;
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      report.records.push_back(std::move(rec));
    }
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  return report;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
  std::vector<std::string> ids = options.ids;
  if (ids.empty()) {
    for (const auto& c : registry()) ids.push_back(c.id);
  }
  for (const auto& id : ids) find_identity(id);  // fail fast on unknown ids

  std::vector<VerificationReport> reports(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      std::optional<long> range = options.max_index;
      if (auto it = options.overrides.find(ids[i]); it != options.overrides.end()) range = it->second;
      reports[i] = verify_identity(ids[i], range);
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(ids.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return reports;
}

RunSummary summarize(const std::vector<VerificationReport>& reports) {
  RunSummary s;
  for (const auto& r : reports) {
    ++s.identities;
    if (r.status == Status::ReportOnly) {
      ++s.report_only;
    } else if (r.passed()) {
      ++s.passed;
    } else {
      ++s.asserted_failures;
    }
  }
  return s;
}

}  // namespace hankeldet
