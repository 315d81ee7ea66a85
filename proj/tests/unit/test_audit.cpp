#include <doctest.h>

#include "vpv/audit.hpp"
#include "vpv/errors.hpp"
#include "vpv/totients.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

using namespace vpv;
using namespace vpv::audit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string squash(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

const AuditReport& full_report() {
  static const AuditReport r = run_audit({}, 1, 0);
  return r;
}

}  // namespace

TEST_CASE("registry ids equal the documented list") {
  const std::string doc = slurp(std::string(VPV_SOURCE_DIR) + "/docs/registry.md");
  const std::regex row(R"(^\| `([a-z]+-[0-9.]+[a-z]?)` \|)");
  std::set<std::string> documented;
  std::istringstream is(doc);
  for (std::string line; std::getline(is, line);) {
    std::smatch m;
    if (std::regex_search(line, m, row)) documented.insert(m[1]);
  }
  std::set<std::string> compiled;
  for (const auto& c : registry()) compiled.insert(c.id);
  CHECK(documented == compiled);
  CHECK(compiled.size() == registry().size());
}

TEST_CASE("anchors are short verbatim quotes") {
  const std::string path = std::string(VPV_SOURCE_DIR) + "/paper.md";
  if (!std::ifstream(path)) {
    MESSAGE("source text not present; anchor lookup skipped");
    return;
  }
  const std::string paper = squash(slurp(path));
  for (const auto& c : registry()) {
    CAPTURE(c.id);
    std::istringstream words(c.anchor);
    std::size_t n = 0;
    for (std::string w; words >> w;) ++n;
    CHECK(n >= 3);
    CHECK(n <= 6);
    CHECK(paper.find(squash(c.anchor)) != std::string::npos);
  }
}

TEST_CASE("registry order and provenance") {
  const auto& reg = registry();
  for (std::size_t i = 1; i < reg.size(); ++i) CHECK(natural_less(reg[i - 1].id, reg[i].id));
  for (const auto& c : reg) {
    CAPTURE(c.id);
    CHECK((c.provenance.rfind("[DERIVED", 0) == 0 || c.provenance.rfind("[TRIVIAL", 0) == 0));
    CHECK(c.run);
  }
  CHECK(find_check("eq-4.13") != nullptr);
  CHECK(find_check("eq-99.1") == nullptr);
}

TEST_CASE("natural ordering of ids") {
  CHECK(natural_less("eq-4.9", "eq-4.10"));
  CHECK_FALSE(natural_less("eq-4.10", "eq-4.9"));
  CHECK(natural_less("cor-5.15a", "cor-5.15b"));
  CHECK(natural_less("cor-5.15", "cor-5.15a"));
  CHECK_FALSE(natural_less("eq-2.3", "eq-2.3"));
}

TEST_CASE("status names round trip") {
  for (auto s : {Status::Pass, Status::FailsAsPrinted, Status::PassWithCorrection, Status::Flagged, Status::Skipped})
    CHECK(parse_status(to_string(s)) == s);
  CHECK_FALSE(parse_status("UNKNOWN").has_value());
}

TEST_CASE("single entries") {
  const std::vector<std::string> ids = {"eq-4.13", "eq-2.6"};
  const auto r = run_audit(ids, 1, 1);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].id == "eq-2.6");
  CHECK(r.entries[0].status == Status::Flagged);
  CHECK(r.entries[0].notes.find('"') != std::string::npos);
  CHECK(r.entries[1].status == Status::Pass);
  const std::vector<std::string> bad = {"eq-99.1"};
  CHECK_THROWS_AS(run_audit(bad, 1), UsageError);
}

TEST_CASE("full audit: every entry as expected and well formed") {
  const auto& r = full_report();
  CHECK(r.entries.size() == registry().size());
  CHECK(r.all_as_expected());
  for (const auto& e : r.entries) {
    CAPTURE(e.id);
    CHECK(e.as_expected());
    if (e.status == Status::FailsAsPrinted) CHECK_FALSE(e.counterexample.empty());
    if (e.status == Status::PassWithCorrection) CHECK_FALSE(e.corrected_form.empty());
    if (e.status == Status::Flagged) CHECK(e.notes.find('"') != std::string::npos);
  }
}

TEST_CASE("reports are deterministic") {
  const auto& a = full_report();
  const auto b = run_audit({}, 1, 1);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_text(a) == to_text(b));
}

TEST_CASE("JSON round trip") {
  const auto& r = full_report();
  const std::string js = to_json(r);
  const auto back = from_json(js);
  CHECK(to_json(back) == js);
  CHECK(back.seed == 1);

  AuditReport tiny;
  tiny.version = "x";
  tiny.entries.push_back({});
  tiny.entries[0].id = "eq-1.1";
  tiny.entries[0].max_residual = std::numeric_limits<double>::infinity();
  CHECK(from_json(to_json(tiny)).entries[0].max_residual == std::numeric_limits<double>::infinity());

  CHECK_THROWS_AS(from_json("{"), UsageError);
  CHECK_THROWS_AS(from_json(R"({"version":"1","seed":0,"entries":[{"id":"a"}]})"), UsageError);
}

TEST_CASE("text report ends with a summary line") {
  const std::string t = to_text(full_report());
  const auto pos = t.rfind("summary:");
  REQUIRE(pos != std::string::npos);
  CHECK(t.find("unexpected=0", pos) != std::string::npos);
}

namespace {

ArithmeticFunction J(unsigned m) {
  return [m](std::uint64_t k) { return Rational(jordan(m, k)); };
}

ArithmeticFunction phi(unsigned t) {
  return [t](std::uint64_t k) { return phi_t(t, 2, k); };
}

}  // namespace

TEST_CASE("relation discovery") {
  const std::vector<std::uint64_t> fit23 = {2, 3};
  const auto d1 = discover_linear_relation(phi(1), {J(2), J(1)}, fit23, 200);
  REQUIRE(d1.coefficients);
  CHECK(*d1.coefficients == std::vector<Rational>{Rational(1), Rational(-1)});

  // a relation fitted on three points that the printed coefficients do not satisfy
  const std::vector<std::uint64_t> fit234 = {2, 3, 4};
  const auto printed = [](std::uint64_t k) -> Rational {
    return Rational(7, 12) * Rational(jordan(3, k)) - Rational(jordan(2, k)) + Rational(5, 12) * Rational(jordan(1, k));
  };
  CHECK(printed(3) != phi(2)(3));
  const auto d2 = discover_linear_relation(phi(2), {J(2), J(1)}, fit23, 200);
  REQUIRE(d2.coefficients);
  CHECK(*d2.coefficients == std::vector<Rational>{Rational(7, 6), Rational(-2)});
  const auto d3 = discover_linear_relation(phi(2), {J(3), J(2), J(1)}, fit234, 200);
  CHECK(d3.fitted.size() == 3);

  const std::vector<std::uint64_t> one = {5};
  const auto d4 = discover_linear_relation(J(2), {J(2)}, one, 100);
  REQUIRE(d4.coefficients);
  CHECK(*d4.coefficients == std::vector<Rational>{Rational(1)});

  const std::vector<std::uint64_t> dup = {2, 2};
  CHECK_THROWS_AS(discover_linear_relation(phi(1), {J(2), J(1)}, dup, 10), UsageError);
  CHECK_THROWS_AS(discover_linear_relation(phi(1), {J(2), J(1)}, one, 10), UsageError);
  const auto sing = discover_linear_relation(phi(1), {J(1), J(1)}, fit23, 10);
  CHECK(sing.singular);
  CHECK_FALSE(sing.coefficients);
}
