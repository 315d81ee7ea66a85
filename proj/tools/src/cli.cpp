#include "vpv/cli.hpp"

#include "vpv/analytic.hpp"
#include "vpv/audit.hpp"
#include "vpv/engine.hpp"
#include "vpv/errors.hpp"
#include "vpv/exact.hpp"
#include "vpv/series.hpp"
#include "vpv/totients.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numeric>
#include <ostream>
#include <regex>

namespace vpv::cli {

namespace {

constexpr std::size_t kMaxOrder = 1024;
constexpr std::uint64_t kMaxGridSide = 200;

struct Config {
  std::size_t order = kDefaultSeriesOrder;
  std::uint64_t K = 10'000;
  std::uint64_t seed = 0;
  std::string format = "text";

  // compute
  std::uint64_t k = 0;
  unsigned m = 1;
  unsigned t = 0;
  long s = 0;
  std::optional<double> dirichlet_s;
  std::vector<std::int64_t> n;
  std::uint64_t n_scalar = 0;
  unsigned j = 0;
  unsigned a = 0;
  std::string range = "half-open";

  // audit
  std::vector<std::string> ids;
  std::string out_path;
  unsigned threads = 0;

  // lattice
  unsigned dims = 2;
  std::uint64_t max = 8;

  // series
  std::string product;
  std::string exp_sum;
};

std::string join(const PowerSeries& ps) {
  std::string s;
  for (std::size_t i = 0; i <= ps.order(); ++i) s += (i ? "," : "") + to_string(ps[i]);
  return s;
}

// ---------------------------------------------------------------- compute

int compute(const std::string& kind, const Config& c, std::ostream& out) {
  if (kind == "ramanujan") {
    if (c.n.empty()) throw UsageError("compute ramanujan needs --n");
    if (c.dirichlet_s) {
      const auto r = dirichlet_partial_cohen(*c.dirichlet_s, c.n, c.K);
      char buf[160];
      std::snprintf(buf, sizeof buf, "partial=%.15g target=%.15g residual=%.3e K=%llu", r.partial, r.target, r.residual,
                    static_cast<unsigned long long>(c.K));
      out << buf << '\n';
      return kOk;
    }
    out << to_string(ramanujan_cohen(c.k, c.n)) << '\n';
  } else if (kind == "jordan") {
    out << to_string(jordan(c.m, c.k)) << '\n';
  } else if (kind == "phi") {
    Rational v;
    try {
      v = phi_t(c.t, c.m, c.k);
    } catch (const ResourceError&) {
      v = phi_t_closed(c.t, c.m, c.k);
    }
    out << to_string(v) << '\n';
  } else if (kind == "mphi") {
    const auto range = c.range == "closed" ? RangeConvention::Closed : RangeConvention::HalfOpen;
    out << m_phi(c.m, c.k, range) << '\n';
  } else if (kind == "sigma") {
    out << to_string(sigma(c.s, c.n_scalar)) << '\n';
  } else if (kind == "stirling") {
    out << to_string(stirling2(static_cast<unsigned>(c.n_scalar), c.j)) << '\n';
  } else if (kind == "bernoulli") {
    out << to_string(bernoulli(c.a)) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- audit

int audit(const Config& c, std::ostream& out, std::ostream& err) {
  const auto report = audit::run_audit(c.ids, c.seed, c.threads);
  const std::string body = c.format == "json" ? audit::to_json(report) : audit::to_text(report);

  if (c.out_path.empty()) {
    out << body;
  } else {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) {
      err << "vpv: cannot open " << c.out_path << " for writing\n";
      return kIo;
    }
    f << body;
    f.close();
    if (!f) {
      err << "vpv: write to " << c.out_path << " failed\n";
      return kIo;
    }
  }
  std::size_t unexpected = 0;
  for (const auto& e : report.entries)
    if (!e.as_expected()) ++unexpected;
  if (!c.out_path.empty() || c.format == "json") {
    std::ostream& summary = c.out_path.empty() ? err : out;
    summary << "audited " << report.entries.size() << " identities: PASS=" << report.count(audit::Status::Pass)
            << " PASS_WITH_CORRECTION=" << report.count(audit::Status::PassWithCorrection)
            << " FAILS_AS_PRINTED=" << report.count(audit::Status::FailsAsPrinted)
            << " FLAGGED=" << report.count(audit::Status::Flagged) << " SKIPPED=" << report.count(audit::Status::Skipped)
            << " unexpected=" << unexpected << '\n';
  }
  return report.all_as_expected() ? kOk : kUnexpectedStatus;
}

// ---------------------------------------------------------------- lattice

int lattice(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.dims == 2) {
    if (c.max > kMaxGridSide) {
      err << "vpv: a " << c.max << "x" << c.max << " grid is too large to render (max " << kMaxGridSide << ")\n";
      return kUsage;
    }
    for (const auto& row : render_visible_grid(c.max, c.max)) out << row << '\n';
    return kOk;
  }
  const auto region = RadialRegion::box(std::vector<std::uint64_t>(c.dims, c.max));
  std::uint64_t total = 0, visible = 0;
  for_each_lattice_point(region, [&](std::span<const std::uint64_t> p) {
    ++total;
    if (gcd_many(p) == 1) ++visible;
  });
  out << "dims=" << c.dims << " max=" << c.max << " points=" << total << " visible=" << visible
      << " multiples=" << total - visible << '\n';
  return kOk;
}

// ---------------------------------------------------------------- series

// "k^P z^k", "k z^k" or "z^k".
long parse_exp_sum(const std::string& spec) {
  static const std::regex re(R"(^\s*(?:k(?:\s*\^\s*(-?\d+))?\s*\*?\s*)?z\s*\^\s*k\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw UsageError("--exp-sum must look like \"k^P z^k\", got \"" + spec + "\"");
  if (!m[1].matched) return spec.find('k') < spec.find('z') ? 1 : 0;
  return std::stol(m[1].str());
}

int series(const Config& c, std::ostream& out) {
  if (c.order > kMaxOrder) throw UsageError("--order must be <= " + std::to_string(kMaxOrder));
  if (c.product.empty() == c.exp_sum.empty()) throw UsageError("series needs exactly one of --product and --exp-sum");
  const std::size_t N = c.order;
  if (!c.exp_sum.empty()) {
    const long p = parse_exp_sum(c.exp_sum);
    PowerSeries e(N);
    for (std::size_t k = 1; k <= N; ++k) e[k] = rpow(Rational(static_cast<long>(k)), p);
    out << join(ps_exp(e)) << '\n';
    return kOk;
  }
  std::map<std::uint64_t, Rational> exps;
  for (std::uint64_t k = 1; k <= N; ++k) {
    const Rational kk(static_cast<long>(k));
    if (c.product == "partition") {
      exps[k] = -1;
    } else if (c.product == "jordan") {
      exps[k] = -Rational(jordan(c.m, k)) / kk;
    } else if (c.product == "ramanujan") {
      if (c.n.empty()) throw UsageError("--product ramanujan needs --n");
      exps[k] = -Rational(ramanujan_cohen(k, c.n)) / kk;
    } else {
      throw UsageError("unknown product \"" + c.product + "\"");
    }
  }
  out << join(product_with_exponents(exps, N)) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Ramanujan-Cohen sums, Jordan totients and the vpv identity audit", "vpv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", audit::version());
  Config c;

  auto* compute_cmd = app.add_subcommand("compute", "Evaluate one arithmetic function exactly");
  compute_cmd->require_subcommand(1);
  std::string kind;
  auto kind_cmd = [&](const char* name, const char* help) {
    auto* sub = compute_cmd->add_subcommand(name, help);
    sub->callback([&kind, name] { kind = name; });
    return sub;
  };
  {
    auto* r = kind_cmd("ramanujan", "c_k(n_1,...,n_m)");
    r->add_option("--k", c.k, "Modulus k >= 1")->required();
    r->add_option("--n", c.n, "Comma-separated n_i (signs ignored)")->required()->delimiter(',')->allow_extra_args(false);
    r->add_option("--s", c.dirichlet_s, "Instead print sum_{k<=K} c_k(n)/k^{s+1} against its limit");
    r->add_option("--K", c.K, "Cutoff for --s")->capture_default_str();
    auto* j = kind_cmd("jordan", "Jordan totient J_m(k)");
    j->add_option("--m", c.m)->required();
    j->add_option("--k", c.k)->required();
    auto* p = kind_cmd("phi", "phi_t(m;k), selector sum of ((j_1+...+j_m)/k)^t");
    p->add_option("--t", c.t)->required();
    p->add_option("--m", c.m)->required();
    p->add_option("--k", c.k)->required();
    auto* mp = kind_cmd("mphi", "#{a : gcd(a, m, k) = 1} with m fixed");
    mp->add_option("--m", c.m, "Fixed coordinate")->required();
    mp->add_option("--k", c.k)->required();
    mp->add_option("--range", c.range, "Range of a")->check(CLI::IsMember({"half-open", "closed"}))->capture_default_str();
    auto* sg = kind_cmd("sigma", "sigma_s(n)");
    sg->add_option("--s", c.s)->required();
    sg->add_option("--n", c.n_scalar)->required();
    auto* st = kind_cmd("stirling", "Stirling number of the second kind S(n, j)");
    st->add_option("--n", c.n_scalar)->required();
    st->add_option("--j", c.j)->required();
    auto* b = kind_cmd("bernoulli", "Bernoulli number B_a with B_1 = -1/2");
    b->add_option("--a", c.a)->required();
  }

  auto* audit_cmd = app.add_subcommand("audit", "Run the identity audit");
  audit_cmd->add_option("--id", c.ids, "Identity ids, comma-separated or repeated (default: all)")->delimiter(',');
  audit_cmd->add_option("--seed", c.seed)->capture_default_str();
  audit_cmd->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  audit_cmd->add_option("--out", c.out_path, "Write the report here instead of stdout");
  audit_cmd->add_option("--threads", c.threads, "Worker threads (0: hardware concurrency)");

  auto* lattice_cmd = app.add_subcommand("lattice", "Visible lattice points in the box [1,max]^dims");
  lattice_cmd->add_option("--dims", c.dims)->check(CLI::Range(1u, 8u))->capture_default_str();
  lattice_cmd->add_option("--max", c.max)->check(CLI::PositiveNumber)->capture_default_str();

  auto* series_cmd = app.add_subcommand("series", "Coefficients c_0..c_N of a product or exponential");
  series_cmd->add_option("--product", c.product, "jordan | partition | ramanujan")
      ->check(CLI::IsMember({"jordan", "partition", "ramanujan"}));
  series_cmd->add_option("--exp-sum", c.exp_sum, "exp(sum_{k>=1} k^P z^k), written \"k^P z^k\"");
  series_cmd->add_option("--m", c.m, "Jordan order")->capture_default_str();
  series_cmd->add_option("--n", c.n, "Exponents for the Ramanujan product")->delimiter(',');
  series_cmd->add_option("--order", c.order)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute_cmd->parsed()) return compute(kind, c, out);
    if (audit_cmd->parsed()) return audit(c, out, err);
    if (lattice_cmd->parsed()) return lattice(c, out, err);
    if (series_cmd->parsed()) return series(c, out);
  } catch (const UsageError& e) {
    err << "vpv: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "vpv: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "vpv: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace vpv::cli
