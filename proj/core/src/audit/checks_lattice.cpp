#include "audit/checks.hpp"

#include "vpv/engine.hpp"

#include <cmath>

namespace vpv::audit::detail {

namespace {

Outcome check_partition(std::uint64_t) {
  struct Case {
    std::string label;
    RadialRegion region;
  };
  const std::vector<Case> cases = {
      {"box 10", RadialRegion::box({10})},
      {"box 8x8", RadialRegion::box({8, 8})},
      {"box 30x17", RadialRegion::box({30, 17})},
      {"box 5x5x5", RadialRegion::box({5, 5, 5})},
      {"box 12x12x12", RadialRegion::box({12, 12, 12})},
      {"box 6^4", RadialRegion::box({6, 6, 6, 6})},
      {"pyramid n=2 B=15 a_1>=1", RadialRegion::pyramid(2, 15, 1)},
      {"pyramid n=2 B=15 a_1>=0", RadialRegion::pyramid(2, 15, 0)},
      {"pyramid n=3 B=12 a_i>=0", RadialRegion::pyramid(3, 12, 0)},
  };
  Recorder rec(9);
  std::string bad;
  for (const auto& c : cases) {
    const bool ok = multiples_partition_check(c.region);
    const auto visible = visible_points(c.region).size();
    rec.sample(c.label, std::to_string(c.region.size()) + " points",
               std::to_string(visible) + " visible, partition " + (ok ? "exact" : "broken"));
    if (!ok && bad.empty()) bad = c.label + ": some lattice point is not a unique multiple of a visible point";
  }
  Outcome o;
  o.params = "boxes in dimensions 1 to 4 and pyramids in dimensions 2, 3";
  rec.into(o);
  o.status = bad.empty() ? Status::Pass : Status::FailsAsPrinted;
  o.counterexample = bad;
  o.notes = "every lattice point hit exactly once by j*v, v visible, j >= 1";
  return o;
}

Outcome check_figure(std::uint64_t) {
  // The figure transcribed row by row, Y = 8 at the top.
  const std::vector<std::string> figure = {
      "• x • x • x • x", "• • • • • • x •", "• x x x • x • x", "• • • • x • • •",
      "• x • x • x • x", "• • x • • x • •", "• x • x • x • x", "• • • • • • • •",
  };
  const auto rendered = render_visible_grid(8, 8);
  Recorder rec(8);
  std::string bad;
  std::size_t dots = 0;
  for (std::size_t r = 0; r < figure.size(); ++r) {
    rec.sample("Y=" + std::to_string(8 - r), figure[r], rendered[r]);
    if (figure[r] != rendered[r] && bad.empty()) bad = "row Y=" + std::to_string(8 - r) + " differs";
    for (std::size_t p = 0; (p = rendered[r].find("•", p)) != std::string::npos; ++p) ++dots;
  }
  Outcome o;
  o.params = "8x8 first-quadrant box";
  rec.into(o);
  o.status = bad.empty() ? Status::Pass : Status::FailsAsPrinted;
  o.counterexample = bad;
  o.notes = std::to_string(dots) + " visible points of 64";
  return o;
}

Outcome lemma_check(const char* id, std::uint64_t seed, unsigned m_lo, unsigned m_hi) {
  auto rng = rng_for(seed, id);
  std::uniform_int_distribution<int> qpick(1, 98);
  std::uniform_int_distribution<std::uint64_t> npick(1, 40);
  Recorder rec;
  std::string bad;
  for (unsigned m = m_lo; m <= m_hi; ++m) {
    for (int rep = 0; rep < 100; ++rep) {
      const std::uint64_t n = m >= 4 ? std::min<std::uint64_t>(npick(rng), 12) : npick(rng);
      auto a = random_sequence(rng, n, std::min<std::uint64_t>(n, 12));
      std::vector<double> q(m);
      for (auto& v : q) v = qpick(rng) / 100.0;
      const auto s = lemma_3_2_check(a, q);
      rec.residual(s.residual);
      if (rep == 0) rec.sample("m=" + std::to_string(m) + " n=" + std::to_string(n), s.lhs, s.rhs);
      if (!(s.residual < 1e-9) && bad.empty())
        bad = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " residual " + sci(s.residual);
    }
  }
  Outcome o;
  o.params = "m in [" + std::to_string(m_lo) + "," + std::to_string(m_hi) +
             "], 100 random finite sequences per m (support <= 12, n <= 40, n <= 12 for m=4), q_h in (0,1)";
  rec.into(o);
  o.status = bad.empty() ? Status::Pass : Status::FailsAsPrinted;
  o.counterexample = bad;
  o.notes = "relative residual threshold 1e-9";
  return o;
}

}  // namespace

void add_lattice_checks(std::vector<IdentityCheck>& out) {
  out.push_back({"lem-3.1", "set of positive integer multiples", "boxes and pyramids", "multiples_partition_check",
                 Status::Pass, "[DERIVED: brute-force marking over the bounding box]", check_partition});
  out.push_back({"fig-1", "visible-from-origin lattice points as the dots", "8x8", "render_visible_grid vs transcription",
                 Status::Pass, "[DERIVED: gcd test on every cell]", check_figure});
  out.push_back({"eq-3.1", "If $(a_k)$ is an arbitrary sequence", "m=1..4", "lemma_3_2_check",
                 Status::Pass, "[DERIVED: left side summed directly from the geometric factors]",
                 [](std::uint64_t s) { return lemma_check("eq-3.1", s, 1, 4); }});
  out.push_back({"eq-3.2", "The case with $m=1$ was given", "m=1", "lemma_3_2_check",
                 Status::Pass, "[DERIVED: left side summed directly from the geometric factors]",
                 [](std::uint64_t s) { return lemma_check("eq-3.2", s, 1, 1); }});
  out.push_back({"eq-3.3", "correspond to lemma 3.1 in", "m=2", "lemma_3_2_check",
                 Status::Pass, "[DERIVED: left side summed directly from the geometric factors]",
                 [](std::uint64_t s) { return lemma_check("eq-3.3", s, 2, 2); }});
  out.push_back({"eq-3.4", "The proof of each of", "m=3", "lemma_3_2_check",
                 Status::Pass, "[DERIVED: left side summed directly from the geometric factors]",
                 [](std::uint64_t s) { return lemma_check("eq-3.4", s, 3, 3); }});
}

}  // namespace vpv::audit::detail
