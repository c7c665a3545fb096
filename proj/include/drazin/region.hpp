#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drazin/matrix.hpp"

namespace drazin::region {

// Shared tolerance for point dedup and numeric membership.
inline constexpr double kRegionTol = 1e-8;

// A configuration the normalizer refuses to canonicalize (e.g. two partially
// overlapping distinct disks). Raising beats guessing: the decidable fragment
// is exactly what the catalog needs, and anything outside it is a bug.
struct UndecidableRegionError : Error {
  using Error::Error;
};

struct PointEntry {
  Complex value;
  std::optional<std::size_t> order;  // pole order annotation; ignored by set ops
};

struct FinitePoints {
  std::vector<PointEntry> points;
};

struct Circle {
  Complex center;
  double radius = 0.0;
};

struct ClosedDisk {
  Complex center;
  double radius = 0.0;
};

// A sequence of distinct points converging to `limit`. The tag identifies the
// sequence symbolically (finite witness data cannot decide equality); the
// eight witnesses are the first terms and support numeric membership. Tail
// points beyond the witnesses all lie strictly inside the guard ball around
// the limit, which is what makes the membership fragment decidable.
struct ConvergentSequence {
  std::string tag;
  std::array<Complex, 8> witnesses{};
  Complex limit;
  bool includes_limit = false;
  std::optional<std::size_t> order;  // common pole order of the sequence points

  double guard() const;  // min distance from a witness to the limit
};

using Primitive = std::variant<FinitePoints, Circle, ClosedDisk, ConvergentSequence>;

class Region {
 public:
  Region() = default;

  static Region empty();
  static Region point(Complex z, std::optional<std::size_t> order = {});
  static Region points(const std::vector<Complex>& zs);
  static Region circle(Complex center, double radius);
  static Region disk(Complex center, double radius);
  static Region sequence(ConvergentSequence s);

  const std::vector<Primitive>& primitives() const { return primitives_; }
  bool is_empty() const { return primitives_.empty(); }
  void add(Primitive p) { primitives_.push_back(std::move(p)); }

 private:
  std::vector<Primitive> primitives_;
};

// All operations normalize their inputs; results are in normal form.
Region normalize(const Region& r);
Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_setminus(const Region& a, const Region& b);
Region region_iso(const Region& r);
Region region_acc(const Region& r);
Region region_boundary(const Region& r);
bool region_equal(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b);
bool region_member(Complex z, const Region& r, double tol = kRegionTol);
std::string to_string(const Region& r);

}  // namespace drazin::region
