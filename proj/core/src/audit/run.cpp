#include "vpv/audit.hpp"

#include "vpv/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#ifndef VPV_VERSION_STRING
#define VPV_VERSION_STRING "0.0.0"
#endif

namespace vpv::audit {

std::string version() { return VPV_VERSION_STRING; }

bool AuditReport::all_as_expected() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.as_expected(); });
}

std::size_t AuditReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

namespace {

ReportEntry execute(const IdentityCheck& check, std::uint64_t seed) {
  Outcome o;
  try {
    o = check.run(seed);
  } catch (const ResourceError& e) {
    o = Outcome{};
    o.status = Status::Skipped;
    o.params = check.params;
    o.notes = std::string("resource limit: ") + e.what();
  }
  // Statuses that make claims must carry their evidence.
  if (o.status == Status::FailsAsPrinted && o.counterexample.empty())
    throw ConsistencyError(check.id + ": FAILS_AS_PRINTED without a counterexample");
  if (o.status == Status::PassWithCorrection && o.corrected_form.empty())
    throw ConsistencyError(check.id + ": PASS_WITH_CORRECTION without corrected form");
  if (o.status == Status::Flagged && o.notes.find('"') == std::string::npos)
    throw ConsistencyError(check.id + ": FLAGGED without a quoted display");

  ReportEntry e;
  e.id = check.id;
  e.anchor = check.anchor;
  e.expected = check.expected;
  e.status = o.status;
  e.params = o.params.empty() ? check.params : o.params;
  e.samples = std::move(o.samples);
  e.max_residual = o.max_residual;
  e.counterexample = std::move(o.counterexample);
  e.corrected_form = std::move(o.corrected_form);
  e.notes = std::move(o.notes);
  return e;
}

}  // namespace

AuditReport run_audit(std::span<const std::string> ids, std::uint64_t seed, unsigned threads) {
  std::vector<const IdentityCheck*> selected;
  if (ids.empty()) {
    for (const auto& c : registry()) selected.push_back(&c);
  } else {
    for (const auto& id : ids) {
      const IdentityCheck* c = find_check(id);
      if (!c) throw UsageError("unknown audit id: " + id);
      if (std::find(selected.begin(), selected.end(), c) == selected.end()) selected.push_back(c);
    }
    std::sort(selected.begin(), selected.end(),
              [](const IdentityCheck* a, const IdentityCheck* b) { return natural_less(a->id, b->id); });
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));

  std::vector<ReportEntry> entries(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        entries[i] = execute(*selected[i], seed);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  AuditReport report;
  report.seed = seed;
  report.version = version();
  report.entries = std::move(entries);
  return report;
}

}  // namespace vpv::audit
