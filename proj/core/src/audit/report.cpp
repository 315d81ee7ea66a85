#include "vpv/audit.hpp"

#include "vpv/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace vpv::audit {

namespace {

std::string residual_text(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", r);
  return buf;
}

}  // namespace

std::string to_text(const AuditReport& report) {
  std::ostringstream os;
  os << "vpv audit report\n";
  os << "version: " << report.version << "\n";
  os << "seed: " << report.seed << "\n";
  os << "entries: " << report.entries.size() << "\n";
  for (const auto& e : report.entries) {
    os << "\n[" << e.id << "] " << to_string(e.status);
    if (!e.as_expected()) os << "  (UNEXPECTED, registry expects " << to_string(e.expected) << ")";
    os << "\n";
    os << "  anchor: \"" << e.anchor << "\"\n";
    os << "  params: " << e.params << "\n";
    os << "  max_residual: " << residual_text(e.max_residual) << "\n";
    for (const auto& s : e.samples) os << "  sample " << s.label << ": lhs=" << s.lhs << " rhs=" << s.rhs << "\n";
    if (!e.counterexample.empty()) os << "  counterexample: " << e.counterexample << "\n";
    if (!e.corrected_form.empty()) os << "  corrected: " << e.corrected_form << "\n";
    if (!e.notes.empty()) os << "  notes: " << e.notes << "\n";
  }
  os << "\nsummary:";
  for (auto s : {Status::Pass, Status::PassWithCorrection, Status::FailsAsPrinted, Status::Flagged, Status::Skipped})
    os << " " << to_string(s) << "=" << report.count(s);
  std::size_t unexpected = 0;
  for (const auto& e : report.entries) unexpected += e.as_expected() ? 0 : 1;
  os << " unexpected=" << unexpected << "\n";
  return os.str();
}

std::string to_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["version"] = report.version;
  j["seed"] = report.seed;
  auto& arr = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["anchor"] = e.anchor;
    je["status"] = std::string(to_string(e.status));
    je["expected"] = std::string(to_string(e.expected));
    je["params"] = e.params;
    auto& samples = je["samples"] = nlohmann::ordered_json::array();
    for (const auto& s : e.samples) samples.push_back({{"label", s.label}, {"lhs", s.lhs}, {"rhs", s.rhs}});
    // JSON has no inf/nan; an unbounded residual is written as null
    if (std::isfinite(e.max_residual))
      je["max_residual"] = e.max_residual;
    else
      je["max_residual"] = nullptr;
    je["counterexample"] = e.counterexample;
    je["corrected_form"] = e.corrected_form;
    je["notes"] = e.notes;
    je["seed"] = report.seed;
    je["version"] = report.version;
    arr.push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

AuditReport from_json(std::string_view text) {
  AuditReport report;
  try {
    const auto j = nlohmann::json::parse(text);
    report.version = j.at("version").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& je : j.at("entries")) {
      ReportEntry e;
      e.id = je.at("id").get<std::string>();
      e.anchor = je.at("anchor").get<std::string>();
      auto status = parse_status(je.at("status").get<std::string>());
      auto expected = parse_status(je.at("expected").get<std::string>());
      if (!status || !expected) throw UsageError("report entry " + e.id + " has an unknown status");
      e.status = *status;
      e.expected = *expected;
      e.params = je.at("params").get<std::string>();
      for (const auto& s : je.at("samples"))
        e.samples.push_back({s.at("label").get<std::string>(), s.at("lhs").get<std::string>(),
                             s.at("rhs").get<std::string>()});
      const auto& r = je.at("max_residual");
      e.max_residual = r.is_null() ? std::numeric_limits<double>::infinity() : r.get<double>();
      e.counterexample = je.at("counterexample").get<std::string>();
      e.corrected_form = je.at("corrected_form").get<std::string>();
      e.notes = je.at("notes").get<std::string>();
      report.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("malformed audit report: ") + ex.what());
  }
  return report;
}

}  // namespace vpv::audit
