#include "vpv/engine.hpp"

#include "vpv/errors.hpp"

#include <numeric>

namespace vpv {

RadialRegion::RadialRegion(Shape shape, unsigned dims, std::vector<std::uint64_t> bounds, unsigned lower)
    : shape_(shape), dims_(dims), bounds_(std::move(bounds)), lower_(lower) {}

RadialRegion RadialRegion::box(std::vector<std::uint64_t> bounds) {
  if (bounds.empty()) throw UsageError("box region needs at least one dimension");
  for (auto b : bounds)
    if (b == 0) throw UsageError("box bounds must be >= 1");
  const auto dims = static_cast<unsigned>(bounds.size());
  return RadialRegion(Shape::Box, dims, std::move(bounds), 1);
}

RadialRegion RadialRegion::pyramid(unsigned dims, std::uint64_t apex_bound, unsigned lower) {
  if (dims == 0) throw UsageError("pyramid region needs at least one dimension");
  if (apex_bound == 0) throw UsageError("pyramid apex bound must be >= 1");
  if (lower > 1) throw UsageError("pyramid lower bound must be 0 or 1");
  return RadialRegion(Shape::Pyramid, dims, {apex_bound}, lower);
}

bool RadialRegion::contains(std::span<const std::uint64_t> p) const {
  if (p.size() != dims_) return false;
  if (shape_ == Shape::Box) {
    for (unsigned i = 0; i < dims_; ++i)
      if (p[i] < 1 || p[i] > bounds_[i]) return false;
    return true;
  }
  const std::uint64_t apex = p[dims_ - 1];
  if (apex < 1 || apex > bounds_[0]) return false;
  for (unsigned i = 0; i + 1 < dims_; ++i)
    if (p[i] < lower_ || p[i] >= apex) return false;
  return true;
}

namespace {

// Saturating arithmetic keeps size() meaningful for huge regions.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > UINT64_MAX - a ? UINT64_MAX : a + b; }

std::uint64_t sat_pow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out = sat_mul(out, base);
  return out;
}

// Per-axis inclusive ranges of the bounding box.
void bounding_box(const RadialRegion& r, std::vector<std::uint64_t>& lo, std::vector<std::uint64_t>& hi) {
  lo.assign(r.dims(), 1);
  hi.assign(r.dims(), 1);
  if (r.shape() == RadialRegion::Shape::Box) {
    hi = r.bounds();
    return;
  }
  const std::uint64_t B = r.bounds()[0];
  for (unsigned i = 0; i + 1 < r.dims(); ++i) {
    lo[i] = r.lower();
    hi[i] = B == 0 ? 0 : B - 1;
  }
  hi[r.dims() - 1] = B;
}

std::uint64_t point_gcd(std::span<const std::uint64_t> p) {
  std::uint64_t g = 0;
  for (auto v : p) g = std::gcd(g, v);
  return g;
}

}  // namespace

std::uint64_t RadialRegion::size() const {
  if (shape_ == Shape::Box) {
    std::uint64_t n = 1;
    for (auto b : bounds_) n = sat_mul(n, b);
    return n;
  }
  std::uint64_t n = 0;
  for (std::uint64_t apex = 1; apex <= bounds_[0] && n != UINT64_MAX; ++apex)
    n = sat_add(n, apex < lower_ ? 0 : sat_pow(apex - lower_, dims_ - 1));
  return n;
}

void for_each_lattice_point(const RadialRegion& region,
                            const std::function<void(std::span<const std::uint64_t>)>& visit,
                            std::uint64_t cap) {
  if (region.size() > cap)
    throw ResourceError("region has more than " + std::to_string(cap) + " lattice points");
  std::vector<std::uint64_t> lo, hi;
  bounding_box(region, lo, hi);
  for (unsigned i = 0; i < region.dims(); ++i)
    if (lo[i] > hi[i]) return;

  const unsigned d = region.dims();
  std::vector<std::uint64_t> p = lo;
  while (true) {
    if (region.contains(p)) visit(p);
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && p[i] == hi[i]) {
      p[i] = lo[i];
      --i;
    }
    if (i < 0) return;
    ++p[i];
  }
}

std::vector<Point> visible_points(const RadialRegion& region, std::uint64_t cap) {
  std::vector<Point> out;
  for_each_lattice_point(
      region,
      [&](std::span<const std::uint64_t> p) {
        if (point_gcd(p) == 1) out.emplace_back(p.begin(), p.end());
      },
      cap);
  return out;
}

bool multiples_partition_check(const RadialRegion& region, std::uint64_t cap) {
  std::vector<std::uint64_t> lo, hi;
  bounding_box(region, lo, hi);
  // Mixed-radix index over the bounding box.
  const unsigned d = region.dims();
  std::vector<std::uint64_t> stride(d);
  std::uint64_t cells = 1;
  for (int i = static_cast<int>(d) - 1; i >= 0; --i) {
    stride[i] = cells;
    cells = sat_mul(cells, hi[i] - lo[i] + 1);
  }
  if (cells > cap || region.size() > cap)
    throw ResourceError("region bounding box exceeds " + std::to_string(cap) + " cells");
  auto index = [&](std::span<const std::uint64_t> p) {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < d; ++i) idx += (p[i] - lo[i]) * stride[i];
    return idx;
  };

  std::vector<std::uint8_t> hits(cells, 0);
  bool ok = true;
  std::vector<std::uint64_t> multiple(d);
  for (const auto& v : visible_points(region, cap)) {
    for (std::uint64_t j = 1;; ++j) {
      for (unsigned i = 0; i < d; ++i) multiple[i] = j * v[i];
      if (!region.contains(multiple)) break;
      auto& h = hits[index(multiple)];
      if (h) ok = false;
      h = 1;
    }
  }
  for_each_lattice_point(
      region, [&](std::span<const std::uint64_t> p) { ok = ok && hits[index(p)] == 1; }, cap);
  return ok;
}

std::vector<std::string> render_visible_grid(std::uint64_t width, std::uint64_t height) {
  if (width == 0 || height == 0) throw UsageError("grid dimensions must be >= 1");
  std::vector<std::string> rows;
  for (std::uint64_t y = height; y >= 1; --y) {
    std::string row;
    for (std::uint64_t x = 1; x <= width; ++x) {
      if (x > 1) row += ' ';
      row += std::gcd(x, y) == 1 ? "•" : "x";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vpv
