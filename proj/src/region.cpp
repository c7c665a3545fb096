#include "drazin/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace drazin::region {
namespace {

constexpr double tol = kRegionTol;

bool pt_eq(Complex a, Complex b) { return std::abs(a - b) <= tol; }

bool complex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

[[noreturn]] void undecidable(const std::string& what) {
  throw UndecidableRegionError("region algebra: undecidable configuration: " + what);
}

// --- pairwise relations -----------------------------------------------------

bool point_in_disk(Complex z, const ClosedDisk& d) {
  return std::abs(z - d.center) <= d.radius + tol;
}

bool point_on_circle(Complex z, const Circle& c) {
  return std::abs(std::abs(z - c.center) - c.radius) <= tol;
}

bool disk_in_disk(const ClosedDisk& a, const ClosedDisk& b) {
  return std::abs(a.center - b.center) + a.radius <= b.radius + tol;
}

bool disk_disjoint_disk(const ClosedDisk& a, const ClosedDisk& b) {
  return std::abs(a.center - b.center) > a.radius + b.radius + tol;
}

bool circle_eq_circle(const Circle& a, const Circle& b) {
  return pt_eq(a.center, b.center) && std::abs(a.radius - b.radius) <= tol;
}

bool circle_disjoint_circle(const Circle& a, const Circle& b) {
  const double d = std::abs(a.center - b.center);
  return d > a.radius + b.radius + tol ||
         d + std::min(a.radius, b.radius) < std::max(a.radius, b.radius) - tol;
}

bool circle_in_disk(const Circle& c, const ClosedDisk& d) {
  return std::abs(c.center - d.center) + c.radius <= d.radius + tol;
}

bool circle_disjoint_disk(const Circle& c, const ClosedDisk& d) {
  const double dist = std::abs(c.center - d.center);
  return dist - c.radius > d.radius + tol || dist + d.radius < c.radius - tol;
}

bool seq_same(const ConvergentSequence& a, const ConvergentSequence& b) {
  return a.tag == b.tag && pt_eq(a.limit, b.limit);
}

bool seq_in_disk(const ConvergentSequence& s, const ClosedDisk& d) {
  for (Complex w : s.witnesses)
    if (!point_in_disk(w, d)) return false;
  return std::abs(s.limit - d.center) + s.guard() <= d.radius + tol;
}

bool seq_disjoint_disk(const ConvergentSequence& s, const ClosedDisk& d) {
  for (Complex w : s.witnesses)
    if (std::abs(w - d.center) <= d.radius + tol) return false;
  return std::abs(s.limit - d.center) - s.guard() > d.radius + tol;
}

bool seq_disjoint_circle(const ConvergentSequence& s, const Circle& c) {
  for (Complex w : s.witnesses)
    if (point_on_circle(w, c)) return false;
  return std::abs(std::abs(s.limit - c.center) - c.radius) > s.guard() + tol;
}

bool seq_disjoint_seq(const ConvergentSequence& a, const ConvergentSequence& b) {
  if (pt_eq(a.limit, b.limit)) return false;
  for (Complex wa : a.witnesses)
    for (Complex wb : b.witnesses)
      if (pt_eq(wa, wb)) return false;
  if (std::abs(a.limit - b.limit) <= a.guard() + b.guard() + tol) return false;
  for (Complex wa : a.witnesses)
    if (std::abs(wa - b.limit) <= b.guard() + tol) return false;
  for (Complex wb : b.witnesses)
    if (std::abs(wb - a.limit) <= a.guard() + tol) return false;
  return true;
}

// Membership of a point in a sequence. Points strictly inside the guard ball
// that match neither a witness nor the limit cannot be classified from finite
// data.
bool point_in_seq(Complex z, const ConvergentSequence& s) {
  for (Complex w : s.witnesses)
    if (pt_eq(z, w)) return true;
  if (pt_eq(z, s.limit)) return s.includes_limit;
  if (std::abs(z - s.limit) < s.guard() - tol)
    undecidable("point inside the guard ball of sequence '" + s.tag +
                "' is indistinguishable from a tail term");
  return false;
}

struct Flattened {
  std::vector<PointEntry> pts;
  std::vector<Circle> circles;
  std::vector<ClosedDisk> disks;
  std::vector<ConvergentSequence> seqs;
};

Flattened flatten(const Region& r) {
  Flattened f;
  for (const auto& p : r.primitives()) {
    if (const auto* fp = std::get_if<FinitePoints>(&p))
      f.pts.insert(f.pts.end(), fp->points.begin(), fp->points.end());
    else if (const auto* c = std::get_if<Circle>(&p))
      f.circles.push_back(*c);
    else if (const auto* d = std::get_if<ClosedDisk>(&p))
      f.disks.push_back(*d);
    else
      f.seqs.push_back(std::get<ConvergentSequence>(p));
  }
  return f;
}

Region assemble(Flattened f) {
  std::sort(f.pts.begin(), f.pts.end(),
            [](const PointEntry& a, const PointEntry& b) { return complex_less(a.value, b.value); });
  std::sort(f.circles.begin(), f.circles.end(), [](const Circle& a, const Circle& b) {
    if (!pt_eq(a.center, b.center)) return complex_less(a.center, b.center);
    return a.radius < b.radius;
  });
  std::sort(f.disks.begin(), f.disks.end(), [](const ClosedDisk& a, const ClosedDisk& b) {
    if (!pt_eq(a.center, b.center)) return complex_less(a.center, b.center);
    return a.radius < b.radius;
  });
  std::sort(f.seqs.begin(), f.seqs.end(),
            [](const ConvergentSequence& a, const ConvergentSequence& b) { return a.tag < b.tag; });
  Region out;
  if (!f.pts.empty()) out.add(FinitePoints{std::move(f.pts)});
  for (auto& c : f.circles) out.add(c);
  for (auto& d : f.disks) out.add(d);
  for (auto& s : f.seqs) out.add(std::move(s));
  return out;
}

}  // namespace

double ConvergentSequence::guard() const {
  double g = std::numeric_limits<double>::infinity();
  for (Complex w : witnesses) g = std::min(g, std::abs(w - limit));
  return g;
}

Region Region::empty() { return Region{}; }

Region Region::point(Complex z, std::optional<std::size_t> order) {
  Region r;
  r.add(FinitePoints{{PointEntry{z, order}}});
  return r;
}

Region Region::points(const std::vector<Complex>& zs) {
  Region r;
  FinitePoints fp;
  for (Complex z : zs) fp.points.push_back({z, {}});
  r.add(std::move(fp));
  return r;
}

Region Region::circle(Complex center, double radius) {
  if (radius <= 0) throw Error("Region: circle radius must be positive");
  Region r;
  r.add(Circle{center, radius});
  return r;
}

Region Region::disk(Complex center, double radius) {
  if (radius <= 0) throw Error("Region: disk radius must be positive");
  Region r;
  r.add(ClosedDisk{center, radius});
  return r;
}

Region Region::sequence(ConvergentSequence s) {
  for (std::size_t i = 0; i < s.witnesses.size(); ++i) {
    if (pt_eq(s.witnesses[i], s.limit))
      throw Error("Region: sequence witness coincides with its limit");
    for (std::size_t j = i + 1; j < s.witnesses.size(); ++j)
      if (pt_eq(s.witnesses[i], s.witnesses[j]))
        throw Error("Region: sequence witnesses must be pairwise distinct");
  }
  Region r;
  r.add(std::move(s));
  return r;
}

Region normalize(const Region& r) {
  Flattened f = flatten(r);

  // Merge copies of the same sequence; distinct sequences must be provably
  // disjoint for the normal form to be canonical.
  std::vector<ConvergentSequence> seqs;
  for (auto& s : f.seqs) {
    bool merged = false;
    for (auto& t : seqs) {
      if (seq_same(t, s)) {
        t.includes_limit = t.includes_limit || s.includes_limit;
        if (!t.order) t.order = s.order;
        merged = true;
        break;
      }
    }
    if (!merged) seqs.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = i + 1; j < seqs.size(); ++j)
      if (!seq_disjoint_seq(seqs[i], seqs[j]))
        undecidable("two distinct sequences ('" + seqs[i].tag + "', '" + seqs[j].tag +
                    "') cannot be proved disjoint");
  f.seqs = std::move(seqs);

  // Disks: absorb nested ones; partial overlap is outside the fragment.
  std::vector<ClosedDisk> disks;
  for (const auto& d : f.disks) {
    bool absorbed = false;
    for (auto& kept : disks) {
      if (disk_in_disk(d, kept)) {
        absorbed = true;
        break;
      }
      if (disk_in_disk(kept, d)) {
        kept = d;
        absorbed = true;
        break;
      }
      if (!disk_disjoint_disk(d, kept)) undecidable("two partially overlapping disks");
    }
    if (!absorbed) disks.push_back(d);
  }
  f.disks = std::move(disks);

  // Circles: dedupe, absorb into disks.
  std::vector<Circle> circles;
  for (const auto& c : f.circles) {
    bool drop = false;
    for (const auto& kept : circles)
      if (circle_eq_circle(c, kept)) {
        drop = true;
        break;
      }
    for (const auto& d : f.disks) {
      if (drop) break;
      if (circle_in_disk(c, d))
        drop = true;
      else if (!circle_disjoint_disk(c, d))
        undecidable("circle partially overlapping a disk");
    }
    if (!drop) circles.push_back(c);
  }
  f.circles = std::move(circles);

  // Sequences against disks and circles.
  std::vector<ConvergentSequence> kept_seqs;
  for (auto& s : f.seqs) {
    bool drop = false;
    for (const auto& d : f.disks) {
      if (seq_in_disk(s, d)) {
        drop = true;
        break;
      }
      if (!seq_disjoint_disk(s, d)) undecidable("sequence partially inside a disk");
    }
    for (const auto& c : f.circles) {
      if (drop) break;
      if (!seq_disjoint_circle(s, c)) undecidable("sequence meeting a circle");
    }
    if (!drop) kept_seqs.push_back(std::move(s));
  }
  f.seqs = std::move(kept_seqs);

  // Points: dedupe, then absorb into the other primitives.
  std::vector<PointEntry> pts;
  for (const auto& p : f.pts) {
    bool drop = false;
    for (auto& kept : pts)
      if (pt_eq(kept.value, p.value)) {
        if (!kept.order) kept.order = p.order;
        drop = true;
        break;
      }
    for (const auto& d : f.disks) {
      if (drop) break;
      if (point_in_disk(p.value, d)) drop = true;
    }
    for (const auto& c : f.circles) {
      if (drop) break;
      if (point_on_circle(p.value, c)) drop = true;
    }
    for (auto& s : f.seqs) {
      if (drop) break;
      if (pt_eq(p.value, s.limit)) {
        s.includes_limit = true;
        drop = true;
      } else if (point_in_seq(p.value, s)) {
        drop = true;
      }
    }
    if (!drop) pts.push_back(p);
  }
  f.pts = std::move(pts);

  return assemble(std::move(f));
}

Region region_union(const Region& a, const Region& b) {
  Region joined;
  for (const auto& p : a.primitives()) joined.add(p);
  for (const auto& p : b.primitives()) joined.add(p);
  return normalize(joined);
}

bool region_member(Complex z, const Region& r, double member_tol) {
  Region n = normalize(r);
  for (const auto& p : n.primitives()) {
    if (const auto* fp = std::get_if<FinitePoints>(&p)) {
      for (const auto& e : fp->points)
        if (std::abs(z - e.value) <= member_tol) return true;
    } else if (const auto* c = std::get_if<Circle>(&p)) {
      if (std::abs(std::abs(z - c->center) - c->radius) <= member_tol) return true;
    } else if (const auto* d = std::get_if<ClosedDisk>(&p)) {
      if (std::abs(z - d->center) <= d->radius + member_tol) return true;
    } else {
      if (point_in_seq(z, std::get<ConvergentSequence>(p))) return true;
    }
  }
  return false;
}

Region region_iso(const Region& r) {
  Flattened f = flatten(normalize(r));
  Flattened out;
  out.pts = f.pts;  // normalized points are isolated from every other primitive
  for (auto s : f.seqs) {
    s.includes_limit = false;  // the limit is an accumulation point
    out.seqs.push_back(std::move(s));
  }
  return assemble(std::move(out));
}

Region region_acc(const Region& r) {
  Flattened f = flatten(normalize(r));
  Flattened out;
  out.circles = f.circles;
  out.disks = f.disks;
  for (const auto& s : f.seqs)
    if (s.includes_limit) out.pts.push_back({s.limit, {}});
  return assemble(std::move(out));
}

Region region_boundary(const Region& r) {
  Flattened f = flatten(normalize(r));
  Region out;
  if (!f.pts.empty()) out.add(FinitePoints{f.pts});
  for (const auto& c : f.circles) out.add(c);
  for (const auto& d : f.disks) out.add(Circle{d.center, d.radius});
  for (const auto& s : f.seqs) out.add(s);
  return normalize(out);
}

bool region_equal(const Region& a, const Region& b) {
  Flattened fa = flatten(normalize(a));
  Flattened fb = flatten(normalize(b));
  if (fa.pts.size() != fb.pts.size() || fa.circles.size() != fb.circles.size() ||
      fa.disks.size() != fb.disks.size() || fa.seqs.size() != fb.seqs.size())
    return false;
  for (std::size_t i = 0; i < fa.pts.size(); ++i)
    if (!pt_eq(fa.pts[i].value, fb.pts[i].value)) return false;
  for (std::size_t i = 0; i < fa.circles.size(); ++i)
    if (!circle_eq_circle(fa.circles[i], fb.circles[i])) return false;
  for (std::size_t i = 0; i < fa.disks.size(); ++i)
    if (!pt_eq(fa.disks[i].center, fb.disks[i].center) ||
        std::abs(fa.disks[i].radius - fb.disks[i].radius) > tol)
      return false;
  for (std::size_t i = 0; i < fa.seqs.size(); ++i) {
    const auto& sa = fa.seqs[i];
    const auto& sb = fb.seqs[i];
    if (!seq_same(sa, sb) || sa.includes_limit != sb.includes_limit) return false;
    for (std::size_t k = 0; k < sa.witnesses.size(); ++k)
      if (!pt_eq(sa.witnesses[k], sb.witnesses[k])) return false;
  }
  return true;
}

bool region_subset(const Region& a, const Region& b) {
  Flattened fa = flatten(normalize(a));
  Region nb = normalize(b);
  Flattened fb = flatten(nb);

  for (const auto& e : fa.pts)
    if (!region_member(e.value, nb)) return false;

  // A circle or a disk can only be covered by a single containing primitive:
  // the other shapes have empty interior or are disconnected.
  for (const auto& c : fa.circles) {
    bool covered = false;
    for (const auto& cb : fb.circles)
      if (circle_eq_circle(c, cb)) covered = true;
    for (const auto& db : fb.disks)
      if (circle_in_disk(c, db)) covered = true;
    if (!covered) return false;
  }
  for (const auto& d : fa.disks) {
    bool covered = false;
    for (const auto& db : fb.disks)
      if (disk_in_disk(d, db)) covered = true;
    if (!covered) return false;
  }

  for (const auto& s : fa.seqs) {
    for (Complex w : s.witnesses)
      if (!region_member(w, nb)) return false;
    if (s.includes_limit && !region_member(s.limit, nb)) return false;
    // The tail lives inside the guard ball; it is covered by the same
    // sequence or by a disk containing that ball.
    bool tail_covered = false;
    for (const auto& sb : fb.seqs)
      if (seq_same(s, sb)) tail_covered = true;
    for (const auto& db : fb.disks)
      if (std::abs(s.limit - db.center) + s.guard() <= db.radius + tol) tail_covered = true;
    if (!tail_covered) {
      bool tail_disjoint = true;
      for (const auto& db : fb.disks)
        if (!seq_disjoint_disk(s, db)) tail_disjoint = false;
      for (const auto& cb : fb.circles)
        if (!seq_disjoint_circle(s, cb)) tail_disjoint = false;
      for (const auto& sb : fb.seqs)
        if (!seq_disjoint_seq(s, sb)) tail_disjoint = false;
      if (tail_disjoint) return false;
      undecidable("sequence tail partially covered");
    }
  }
  return true;
}

namespace {

// Intersection of two primitives within the decidable fragment. Results are
// appended to `out`.
void prim_intersect(const Primitive& p, const Primitive& q, Region& out) {
  // Point sets: keep the members of the other primitive.
  if (const auto* fp = std::get_if<FinitePoints>(&p)) {
    Region other;
    other.add(q);
    FinitePoints keep;
    for (const auto& e : fp->points)
      if (region_member(e.value, other)) keep.points.push_back(e);
    if (!keep.points.empty()) out.add(std::move(keep));
    return;
  }
  if (std::holds_alternative<FinitePoints>(q)) {
    prim_intersect(q, p, out);
    return;
  }

  if (const auto* c = std::get_if<Circle>(&p)) {
    if (const auto* cq = std::get_if<Circle>(&q)) {
      if (circle_eq_circle(*c, *cq))
        out.add(*c);
      else if (!circle_disjoint_circle(*c, *cq))
        undecidable("intersection of two crossing circles");
      return;
    }
    if (const auto* dq = std::get_if<ClosedDisk>(&q)) {
      if (circle_in_disk(*c, *dq))
        out.add(*c);
      else if (!circle_disjoint_disk(*c, *dq))
        undecidable("intersection of a circle partially meeting a disk");
      return;
    }
    const auto& sq = std::get<ConvergentSequence>(q);
    if (!seq_disjoint_circle(sq, *c)) undecidable("intersection of a circle and a sequence");
    return;
  }
  if (std::holds_alternative<Circle>(q)) {
    prim_intersect(q, p, out);
    return;
  }

  if (const auto* d = std::get_if<ClosedDisk>(&p)) {
    if (const auto* dq = std::get_if<ClosedDisk>(&q)) {
      if (disk_in_disk(*d, *dq))
        out.add(*d);
      else if (disk_in_disk(*dq, *d))
        out.add(*dq);
      else if (!disk_disjoint_disk(*d, *dq))
        undecidable("intersection of two partially overlapping disks");
      return;
    }
    const auto& sq = std::get<ConvergentSequence>(q);
    if (seq_in_disk(sq, *d))
      out.add(sq);
    else if (!seq_disjoint_disk(sq, *d))
      undecidable("intersection of a disk and a partially contained sequence");
    return;
  }
  if (std::holds_alternative<ClosedDisk>(q)) {
    prim_intersect(q, p, out);
    return;
  }

  const auto& s = std::get<ConvergentSequence>(p);
  const auto& sq = std::get<ConvergentSequence>(q);
  if (seq_same(s, sq)) {
    ConvergentSequence merged = s;
    merged.includes_limit = s.includes_limit && sq.includes_limit;
    if (!merged.order) merged.order = sq.order;
    out.add(std::move(merged));
  } else if (!seq_disjoint_seq(s, sq)) {
    undecidable("intersection of two entangled sequences");
  }
}

// p minus q, within the fragment; appends the remainder to `out`.
void prim_setminus(const Primitive& p, const Primitive& q, Region& out) {
  if (const auto* fp = std::get_if<FinitePoints>(&p)) {
    Region other;
    other.add(q);
    FinitePoints keep;
    for (const auto& e : fp->points)
      if (!region_member(e.value, other)) keep.points.push_back(e);
    if (!keep.points.empty()) out.add(std::move(keep));
    return;
  }

  if (const auto* c = std::get_if<Circle>(&p)) {
    if (const auto* fq = std::get_if<FinitePoints>(&q)) {
      for (const auto& e : fq->points)
        if (point_on_circle(e.value, *c))
          undecidable("circle minus one of its points is not representable");
      out.add(*c);
      return;
    }
    if (const auto* cq = std::get_if<Circle>(&q)) {
      if (circle_eq_circle(*c, *cq)) return;
      if (!circle_disjoint_circle(*c, *cq)) undecidable("circle minus a crossing circle");
      out.add(*c);
      return;
    }
    if (const auto* dq = std::get_if<ClosedDisk>(&q)) {
      if (circle_in_disk(*c, *dq)) return;
      if (!circle_disjoint_disk(*c, *dq)) undecidable("circle minus a partially covering disk");
      out.add(*c);
      return;
    }
    if (!seq_disjoint_circle(std::get<ConvergentSequence>(q), *c))
      undecidable("circle minus a sequence meeting it");
    out.add(*c);
    return;
  }

  if (const auto* d = std::get_if<ClosedDisk>(&p)) {
    if (const auto* fq = std::get_if<FinitePoints>(&q)) {
      for (const auto& e : fq->points)
        if (point_in_disk(e.value, *d))
          undecidable("disk minus one of its points is not representable");
      out.add(*d);
      return;
    }
    if (const auto* cq = std::get_if<Circle>(&q)) {
      if (!circle_disjoint_disk(*cq, *d))
        undecidable("disk minus a circle meeting it is not representable");
      out.add(*d);
      return;
    }
    if (const auto* dq = std::get_if<ClosedDisk>(&q)) {
      if (disk_in_disk(*d, *dq)) return;
      if (!disk_disjoint_disk(*d, *dq))
        undecidable("disk minus a partially overlapping disk");
      out.add(*d);
      return;
    }
    if (!seq_disjoint_disk(std::get<ConvergentSequence>(q), *d))
      undecidable("disk minus a sequence inside it is not representable");
    out.add(*d);
    return;
  }

  ConvergentSequence s = std::get<ConvergentSequence>(p);
  if (const auto* fq = std::get_if<FinitePoints>(&q)) {
    for (const auto& e : fq->points) {
      if (pt_eq(e.value, s.limit)) {
        s.includes_limit = false;
      } else {
        for (Complex w : s.witnesses)
          if (pt_eq(e.value, w))
            undecidable("sequence minus one of its witness points is not representable");
        if (std::abs(e.value - s.limit) < s.guard() - tol)
          undecidable("sequence minus a possible tail point");
      }
    }
    out.add(std::move(s));
    return;
  }
  if (const auto* cq = std::get_if<Circle>(&q)) {
    if (!seq_disjoint_circle(s, *cq)) undecidable("sequence minus a circle meeting it");
    out.add(std::move(s));
    return;
  }
  if (const auto* dq = std::get_if<ClosedDisk>(&q)) {
    if (seq_in_disk(s, *dq)) return;
    if (!seq_disjoint_disk(s, *dq)) undecidable("sequence minus a partially covering disk");
    out.add(std::move(s));
    return;
  }
  const auto& sq = std::get<ConvergentSequence>(q);
  if (seq_same(s, sq)) {
    // Witnesses and tail cancel; only the limit can survive.
    if (s.includes_limit && !sq.includes_limit) out.add(FinitePoints{{{s.limit, {}}}});
    return;
  }
  if (!seq_disjoint_seq(s, sq)) undecidable("sequence minus an entangled sequence");
  out.add(std::move(s));
}

}  // namespace

Region region_intersect(const Region& a, const Region& b) {
  Region na = normalize(a);
  Region nb = normalize(b);
  Region out;
  for (const auto& p : na.primitives())
    for (const auto& q : nb.primitives()) prim_intersect(p, q, out);
  return normalize(out);
}

Region region_setminus(const Region& a, const Region& b) {
  Region na = normalize(a);
  Region nb = normalize(b);
  std::vector<Primitive> work(na.primitives().begin(), na.primitives().end());
  for (const auto& q : nb.primitives()) {
    Region next;
    for (const auto& p : work) prim_setminus(p, q, next);
    work.assign(next.primitives().begin(), next.primitives().end());
  }
  Region out;
  for (auto& p : work) out.add(std::move(p));
  return normalize(out);
}

std::string to_string(const Region& r) {
  Flattened f = flatten(normalize(r));
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " u ";
    first = false;
  };
  auto cpx = [](std::ostringstream& o, Complex z) {
    o << z.real();
    if (z.imag() != 0) o << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  };
  if (!f.pts.empty()) {
    sep();
    os << "{";
    for (std::size_t i = 0; i < f.pts.size(); ++i) {
      if (i) os << ", ";
      cpx(os, f.pts[i].value);
      if (f.pts[i].order) os << " (order " << *f.pts[i].order << ")";
    }
    os << "}";
  }
  for (const auto& c : f.circles) {
    sep();
    os << "Circle(";
    cpx(os, c.center);
    os << ", " << c.radius << ")";
  }
  for (const auto& d : f.disks) {
    sep();
    os << "ClosedDisk(";
    cpx(os, d.center);
    os << ", " << d.radius << ")";
  }
  for (const auto& s : f.seqs) {
    sep();
    os << "Sequence[" << s.tag << " -> ";
    cpx(os, s.limit);
    os << (s.includes_limit ? ", limit included" : ", limit excluded");
    if (s.order) os << ", order " << *s.order;
    os << "]";
  }
  if (first) os << "{}";
  return os.str();
}

}  // namespace drazin::region
