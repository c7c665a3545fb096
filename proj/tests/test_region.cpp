#include "doctest.h"

#include <vector>

#include "drazin/region.hpp"

using namespace drazin;
using namespace drazin::region;

namespace {

ConvergentSequence harmonic(bool includes_limit) {
  ConvergentSequence s;
  s.tag = "harmonic";
  for (std::size_t k = 0; k < 8; ++k) s.witnesses[k] = Complex(1.0 / double(k + 1), 0.0);
  s.limit = Complex(0, 0);
  s.includes_limit = includes_limit;
  return s;
}

}  // namespace

TEST_CASE("region construction validation") {
  CHECK_THROWS_AS(Region::circle(Complex(0, 0), 0.0), Error);
  CHECK_THROWS_AS(Region::disk(Complex(0, 0), -1.0), Error);
  ConvergentSequence bad = harmonic(false);
  bad.witnesses[3] = bad.limit;
  CHECK_THROWS_AS(Region::sequence(bad), Error);
  ConvergentSequence dup = harmonic(false);
  dup.witnesses[1] = dup.witnesses[0];
  CHECK_THROWS_AS(Region::sequence(dup), Error);
}

TEST_CASE("union and absorption") {
  Region r = Region::point(Complex(3, 0));
  CHECK(region_equal(region_union(Region::empty(), r), r));

  // Circle on the boundary of the matching disk is absorbed.
  Region u = region_union(Region::circle(Complex(0, 0), 1.0), Region::disk(Complex(0, 0), 1.0));
  CHECK(region_equal(u, Region::disk(Complex(0, 0), 1.0)));

  Region pts = region_union(Region::point(Complex(1, 0)), Region::point(Complex(2, 0)));
  CHECK(region_equal(pts, Region::points({Complex(1, 0), Complex(2, 0)})));

  // Point interior to a disk is absorbed.
  Region pd = region_union(Region::point(Complex(0.25, 0.25)), Region::disk(Complex(0, 0), 1.0));
  CHECK(region_equal(pd, Region::disk(Complex(0, 0), 1.0)));

  // Point equal to an excluded limit turns the limit on.
  Region ps = region_union(Region::point(Complex(0, 0)), Region::sequence(harmonic(false)));
  CHECK(region_equal(ps, Region::sequence(harmonic(true))));
}

TEST_CASE("undecidable configurations are refused") {
  CHECK_THROWS_AS(region_union(Region::disk(Complex(0, 0), 1.0), Region::disk(Complex(1.5, 0), 1.0)),
                  UndecidableRegionError);
  // A stray point inside the guard ball of a sequence.
  CHECK_THROWS_AS(
      region_union(Region::point(Complex(0.01, 0)), Region::sequence(harmonic(false))),
      UndecidableRegionError);
  // Circle partially overlapping a disk.
  CHECK_THROWS_AS(
      region_union(Region::circle(Complex(1.5, 0), 1.0), Region::disk(Complex(0, 0), 1.0)),
      UndecidableRegionError);
}

TEST_CASE("iso") {
  Region pts = Region::points({Complex(1, 0), Complex(2, 0), Complex(3, 0)});
  CHECK(region_equal(region_iso(pts), pts));
  CHECK(region_iso(Region::disk(Complex(0, 0), 1.0)).is_empty());
  CHECK(region_iso(Region::circle(Complex(0, 0), 1.0)).is_empty());
  CHECK(region_equal(region_iso(Region::sequence(harmonic(true))),
                     Region::sequence(harmonic(false))));
}

TEST_CASE("acc") {
  CHECK(region_acc(Region::points({Complex(1, 0), Complex(5, 2)})).is_empty());
  Region disk = Region::disk(Complex(0, 0), 2.0);
  CHECK(region_equal(region_acc(disk), disk));
  CHECK(region_equal(region_acc(Region::sequence(harmonic(true))), Region::point(Complex(0, 0))));
  // A sequence without its limit has no accumulation point inside itself.
  CHECK(region_acc(Region::sequence(harmonic(false))).is_empty());
}

TEST_CASE("iso and acc partition the region") {
  std::vector<Region> grid = {
      Region::empty(),
      Region::points({Complex(1, 0), Complex(-2, 3)}),
      Region::circle(Complex(0, 0), 1.0),
      Region::disk(Complex(4, 4), 0.5),
      Region::sequence(harmonic(true)),
      region_union(Region::disk(Complex(0, 0), 1.0), Region::point(Complex(5, 0))),
      region_union(Region::sequence(harmonic(true)), Region::circle(Complex(10, 0), 2.0)),
  };
  for (const auto& r : grid) {
    Region iso = region_iso(r);
    Region acc = region_acc(r);
    CHECK(region_equal(region_union(iso, acc), r));
    CHECK(region_intersect(iso, acc).is_empty());
    CHECK(region_equal(region_iso(iso), iso));  // iso is idempotent
    CHECK(region_equal(region_setminus(r, iso), acc));
  }
  // acc is idempotent on the sequence-free primitives (a sequence collapses to
  // its limit after one application, then to nothing).
  for (std::size_t i = 0; i < 4; ++i) {
    Region acc = region_acc(grid[i]);
    CHECK(region_equal(region_acc(acc), acc));
  }
}

TEST_CASE("boundary") {
  CHECK(region_equal(region_boundary(Region::disk(Complex(0, 0), 1.0)),
                     Region::circle(Complex(0, 0), 1.0)));
  Region p = Region::point(Complex(5, 0));
  CHECK(region_equal(region_boundary(p), p));
  Region mixed = region_union(Region::disk(Complex(0, 0), 1.0), Region::point(Complex(3, 0)));
  CHECK(region_equal(region_boundary(mixed),
                     region_union(Region::circle(Complex(0, 0), 1.0), Region::point(Complex(3, 0)))));
  Region seq = Region::sequence(harmonic(true));
  CHECK(region_equal(region_boundary(seq), seq));
}

TEST_CASE("subset and equal") {
  CHECK(region_subset(Region::circle(Complex(0, 0), 1.0), Region::disk(Complex(0, 0), 1.0)));
  CHECK_FALSE(region_subset(Region::disk(Complex(0, 0), 1.0), Region::circle(Complex(0, 0), 1.0)));
  CHECK(region_subset(Region::empty(), Region::point(Complex(1, 0))));
  CHECK(region_subset(Region::point(Complex(0.5, 0)), Region::disk(Complex(0, 0), 1.0)));
  CHECK(region_subset(Region::sequence(harmonic(false)), Region::sequence(harmonic(true))));
  CHECK_FALSE(region_subset(Region::sequence(harmonic(true)), Region::sequence(harmonic(false))));
  CHECK(region_subset(Region::sequence(harmonic(true)), Region::disk(Complex(0.5, 0), 0.7)));
  CHECK_FALSE(region_subset(Region::point(Complex(9, 9)), Region::disk(Complex(0, 0), 1.0)));

  CHECK(region_equal(Region::empty(), Region::empty()));
  CHECK_FALSE(region_equal(Region::circle(Complex(0, 0), 1.0), Region::disk(Complex(0, 0), 1.0)));
  // Orders are annotations, not set content.
  CHECK(region_equal(Region::point(Complex(1, 0), 2), Region::point(Complex(1, 0))));
}

TEST_CASE("member") {
  CHECK(region_member(Complex(0.5, 0), Region::disk(Complex(0, 0), 1.0)));
  CHECK_FALSE(region_member(Complex(0.5, 0), Region::circle(Complex(0, 0), 1.0)));
  CHECK(region_member(Complex(1, 0), Region::circle(Complex(0, 0), 1.0)));
  CHECK(region_member(Complex(0.5, 0), Region::sequence(harmonic(false))));
  CHECK(region_member(Complex(0, 0), Region::sequence(harmonic(true))));
  CHECK_FALSE(region_member(Complex(0, 0), Region::sequence(harmonic(false))));
  CHECK_FALSE(region_member(Complex(2, 2), Region::sequence(harmonic(false))));
  CHECK_THROWS_AS(region_member(Complex(0.05, 0), Region::sequence(harmonic(false))),
                  UndecidableRegionError);
}

TEST_CASE("intersect") {
  Region disk = Region::disk(Complex(0, 0), 1.0);
  CHECK(region_equal(region_intersect(disk, disk), disk));
  CHECK(region_intersect(disk, Region::disk(Complex(5, 0), 1.0)).is_empty());
  CHECK(region_equal(region_intersect(Region::circle(Complex(0, 0), 1.0), disk),
                     Region::circle(Complex(0, 0), 1.0)));
  CHECK(region_equal(region_intersect(Region::points({Complex(0.5, 0), Complex(3, 0)}), disk),
                     Region::point(Complex(0.5, 0))));
  CHECK(region_equal(
      region_intersect(Region::sequence(harmonic(true)), Region::sequence(harmonic(false))),
      Region::sequence(harmonic(false))));
  CHECK(region_equal(region_intersect(Region::point(Complex(0, 0)), Region::sequence(harmonic(true))),
                     Region::point(Complex(0, 0))));
  CHECK(
      region_intersect(Region::point(Complex(0, 0)), Region::sequence(harmonic(false))).is_empty());
}

TEST_CASE("setminus") {
  Region disk = Region::disk(Complex(0, 0), 1.0);
  CHECK(region_setminus(disk, disk).is_empty());
  CHECK(region_setminus(Region::circle(Complex(0, 0), 1.0), disk).is_empty());
  CHECK(region_equal(region_setminus(disk, Region::disk(Complex(9, 0), 1.0)), disk));
  CHECK(region_equal(
      region_setminus(Region::points({Complex(0.5, 0), Complex(3, 0)}), disk),
      Region::point(Complex(3, 0))));
  CHECK(region_equal(region_setminus(Region::sequence(harmonic(true)), Region::point(Complex(0, 0))),
                     Region::sequence(harmonic(false))));
  CHECK(region_equal(
      region_setminus(Region::sequence(harmonic(true)), Region::sequence(harmonic(false))),
      Region::point(Complex(0, 0))));
  CHECK(region_setminus(Region::sequence(harmonic(false)), Region::sequence(harmonic(true)))
            .is_empty());
  // Removing an interior point of a disk is not representable.
  CHECK_THROWS_AS(region_setminus(disk, Region::point(Complex(0.5, 0))), UndecidableRegionError);
}
