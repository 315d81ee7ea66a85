#include <doctest.h>

#include "vpv/engine.hpp"
#include "vpv/errors.hpp"

#include <numeric>
#include <set>

using namespace vpv;

namespace {

std::uint64_t naive_visible_box2(std::uint64_t w, std::uint64_t h) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= w; ++a)
    for (std::uint64_t b = 1; b <= h; ++b) c += std::gcd(a, b) == 1;
  return c;
}

}  // namespace

TEST_CASE("8x8 figure transcription") {
  const std::vector<std::string> figure = {
      "• x • x • x • x", "• • • • • • x •", "• x x x • x • x", "• • • • x • • •",
      "• x • x • x • x", "• • x • • x • •", "• x • x • x • x", "• • • • • • • •",
  };
  CHECK(render_visible_grid(8, 8) == figure);
  CHECK(render_visible_grid(1, 1) == std::vector<std::string>{"•"});
}

TEST_CASE("visible counts against a naive gcd scan") {
  for (std::uint64_t w : {1u, 5u, 17u, 30u})
    for (std::uint64_t h : {1u, 8u, 13u}) CHECK(visible_points(RadialRegion::box({w, h})).size() == naive_visible_box2(w, h));
  CHECK(visible_points(RadialRegion::box({5, 5, 5})).size() == 115);
  CHECK(visible_points(RadialRegion::box({10})).size() == 1);
}

TEST_CASE("region sizes and membership") {
  CHECK(RadialRegion::box({3, 4, 5}).size() == 60);
  CHECK(RadialRegion::pyramid(2, 10, 1).size() == 45);  // sum (a-1)
  CHECK(RadialRegion::pyramid(2, 10, 0).size() == 55);  // sum a
  CHECK(RadialRegion::pyramid(3, 6, 0).size() == 1 + 4 + 9 + 16 + 25 + 36);
  const auto pyr = RadialRegion::pyramid(3, 6, 1);
  const std::vector<std::uint64_t> in = {1, 2, 3}, out = {3, 1, 3};
  CHECK(pyr.contains(in));
  CHECK_FALSE(pyr.contains(out));
  std::uint64_t visited = 0;
  for_each_lattice_point(pyr, [&](auto) { ++visited; });
  CHECK(visited == pyr.size());
}

TEST_CASE("every lattice point is a unique multiple of a visible point") {
  CHECK(multiples_partition_check(RadialRegion::box({12, 9})));
  CHECK(multiples_partition_check(RadialRegion::box({6, 6, 6, 6})));
  CHECK(multiples_partition_check(RadialRegion::pyramid(3, 12, 0)));

  // the same statement checked from scratch
  const auto region = RadialRegion::box({9, 7, 4});
  const auto vis = visible_points(region);
  std::set<Point> hit;
  std::size_t total = 0;
  for (const auto& v : vis)
    for (std::uint64_t j = 1;; ++j) {
      Point p = v;
      for (auto& c : p) c *= j;
      if (!region.contains(p)) break;
      hit.insert(p);
      ++total;
    }
  CHECK(total == hit.size());
  CHECK(total == region.size());
}

TEST_CASE("lattice enumeration cap") {
  CHECK_THROWS_AS(visible_points(RadialRegion::box({1000, 1000}), 1000), ResourceError);
}
