#include "drazin/profile.hpp"

#include <functional>
#include <utility>

#include <json.hpp>

#include "drazin/eig.hpp"
#include "drazin/region.hpp"
#include "drazin/resolvent.hpp"

namespace drazin::specset {
namespace {

using nlohmann::json;
using region::Region;
using region::region_acc;
using region::region_boundary;
using region::region_equal;
using region::region_intersect;
using region::region_iso;
using region::region_setminus;
using region::region_subset;
using region::region_union;

struct Check {
  bool pass = true;
  std::string detail;

  void equal(const char* label, const Region& lhs, const Region& rhs) {
    const bool ok = region_equal(lhs, rhs);
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += std::string(label) + ": " + region::to_string(lhs) +
              (ok ? " == " : " != ") + region::to_string(rhs);
  }
  void subset(const char* label, const Region& lhs, const Region& rhs) {
    const bool ok = region_subset(lhs, rhs);
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += std::string(label) + ": " + region::to_string(lhs) +
              (ok ? " within " : " not within ") + region::to_string(rhs);
  }
};

IdentityResult run_identity(const std::string& name, const std::function<void(Check&)>& body) {
  IdentityResult res;
  res.name = name;
  try {
    Check c;
    body(c);
    res.pass = c.pass;
    res.detail = c.detail;
  } catch (const region::UndecidableRegionError& e) {
    res.pass = false;
    res.undecidable = true;
    res.detail = e.what();
  }
  return res;
}

region::ConvergentSequence reciprocal_sequence(bool includes_limit,
                                               std::optional<std::size_t> order) {
  region::ConvergentSequence s;
  s.tag = "reciprocal-harmonic";
  for (std::size_t k = 0; k < 8; ++k) s.witnesses[k] = Complex(1.0 / double(k + 1), 0.0);
  s.limit = Complex(0, 0);
  s.includes_limit = includes_limit;
  s.order = order;
  return s;
}

// --- JSON helpers -----------------------------------------------------------

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error("region JSON: complex values must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json region_to_json_obj(const Region& r) {
  json prims = json::array();
  const Region normalized = region::normalize(r);
  for (const auto& p : normalized.primitives()) {
    if (const auto* fp = std::get_if<region::FinitePoints>(&p)) {
      json pts = json::array();
      for (const auto& e : fp->points) {
        json o = {{"value", complex_to_json(e.value)}};
        if (e.order) o["order"] = *e.order;
        pts.push_back(o);
      }
      prims.push_back({{"kind", "points"}, {"points", pts}});
    } else if (const auto* c = std::get_if<region::Circle>(&p)) {
      prims.push_back(
          {{"kind", "circle"}, {"center", complex_to_json(c->center)}, {"radius", c->radius}});
    } else if (const auto* d = std::get_if<region::ClosedDisk>(&p)) {
      prims.push_back(
          {{"kind", "disk"}, {"center", complex_to_json(d->center)}, {"radius", d->radius}});
    } else {
      const auto& s = std::get<region::ConvergentSequence>(p);
      json ws = json::array();
      for (Complex w : s.witnesses) ws.push_back(complex_to_json(w));
      json o = {{"kind", "sequence"},
                {"tag", s.tag},
                {"witnesses", ws},
                {"limit", complex_to_json(s.limit)},
                {"includes_limit", s.includes_limit}};
      if (s.order) o["order"] = *s.order;
      prims.push_back(o);
    }
  }
  return {{"primitives", prims}};
}

Region region_from_json_obj(const json& j) {
  if (!j.is_object() || !j.contains("primitives") || !j["primitives"].is_array())
    throw Error("region JSON: expected an object with a 'primitives' array");
  Region r;
  for (const auto& p : j["primitives"]) {
    const std::string kind = p.at("kind").get<std::string>();
    if (kind == "points") {
      region::FinitePoints fp;
      for (const auto& e : p.at("points")) {
        region::PointEntry entry{complex_from_json(e.at("value")), {}};
        if (e.contains("order")) entry.order = e["order"].get<std::size_t>();
        fp.points.push_back(entry);
      }
      r.add(std::move(fp));
    } else if (kind == "circle") {
      r.add(region::Circle{complex_from_json(p.at("center")), p.at("radius").get<double>()});
    } else if (kind == "disk") {
      r.add(region::ClosedDisk{complex_from_json(p.at("center")), p.at("radius").get<double>()});
    } else if (kind == "sequence") {
      region::ConvergentSequence s;
      s.tag = p.at("tag").get<std::string>();
      const auto& ws = p.at("witnesses");
      if (!ws.is_array() || ws.size() != 8)
        throw Error("region JSON: sequence requires exactly 8 witnesses");
      for (std::size_t k = 0; k < 8; ++k) s.witnesses[k] = complex_from_json(ws[k]);
      s.limit = complex_from_json(p.at("limit"));
      s.includes_limit = p.at("includes_limit").get<bool>();
      if (p.contains("order")) s.order = p["order"].get<std::size_t>();
      r.add(std::move(s));
    } else {
      throw Error("region JSON: unknown primitive kind '" + kind + "'");
    }
  }
  return region::normalize(r);
}

json profile_to_json_obj(const SpectralProfile& p) {
  return {{"sigma", region_to_json_obj(p.sigma)},
          {"sigma_asc", region_to_json_obj(p.sigma_asc)},
          {"sigma_desc", region_to_json_obj(p.sigma_desc)},
          {"sigma_ld", region_to_json_obj(p.sigma_ld)},
          {"sigma_rd", region_to_json_obj(p.sigma_rd)},
          {"sigma_dr", region_to_json_obj(p.sigma_dr)},
          {"poles", region_to_json_obj(p.poles)},
          {"ies", region_to_json_obj(p.ies)}};
}

SpectralProfile profile_from_json_obj(const json& j) {
  SpectralProfile p;
  p.sigma = region_from_json_obj(j.at("sigma"));
  p.sigma_asc = region_from_json_obj(j.at("sigma_asc"));
  p.sigma_desc = region_from_json_obj(j.at("sigma_desc"));
  p.sigma_ld = region_from_json_obj(j.at("sigma_ld"));
  p.sigma_rd = region_from_json_obj(j.at("sigma_rd"));
  p.sigma_dr = region_from_json_obj(j.at("sigma_dr"));
  p.poles = region_from_json_obj(j.at("poles"));
  p.ies = region_from_json_obj(j.at("ies"));
  return p;
}

}  // namespace

VerifyReport verify_profile(const SpectralProfile& p) {
  VerifyReport rep;

  rep.identities.push_back(run_identity("theorem3", [&](Check& c) {
    c.equal("sigma_dr == sigma_ld u sigma_rd", p.sigma_dr,
            region_union(p.sigma_ld, p.sigma_rd));
    c.equal("sigma_dr == sigma_asc u sigma_desc", p.sigma_dr,
            region_union(p.sigma_asc, p.sigma_desc));
  }));
  rep.identities.push_back(run_identity("incl_desc_rd", [&](Check& c) {
    c.subset("sigma_desc within sigma_rd", p.sigma_desc, p.sigma_rd);
  }));
  rep.identities.push_back(run_identity("incl_asc_ld", [&](Check& c) {
    c.subset("sigma_asc within sigma_ld", p.sigma_asc, p.sigma_ld);
  }));
  rep.identities.push_back(run_identity("t12_i", [&](Check& c) {
    c.equal("poles == sigma \\ sigma_dr", p.poles, region_setminus(p.sigma, p.sigma_dr));
    c.equal("sigma == sigma_dr u poles", p.sigma, region_union(p.sigma_dr, p.poles));
  }));
  rep.identities.push_back(run_identity("t12_ii", [&](Check& c) {
    c.equal("sigma_dr n poles == {}", region_intersect(p.sigma_dr, p.poles), Region::empty());
    c.equal("iso(sigma) n sigma_dr == ies",
            region_intersect(region_iso(p.sigma), p.sigma_dr), p.ies);
  }));
  rep.identities.push_back(run_identity("t12_iii", [&](Check& c) {
    c.equal("acc(sigma) == acc(sigma_dr)", region_acc(p.sigma), region_acc(p.sigma_dr));
    c.equal("iso(sigma_dr) == ies", region_iso(p.sigma_dr), p.ies);
  }));
  rep.identities.push_back(run_identity("t12_iv", [&](Check& c) {
    c.equal("sigma_dr == acc(sigma) u ies", p.sigma_dr,
            region_union(region_acc(p.sigma), p.ies));
  }));
  rep.identities.push_back(run_identity("remark10_i", [&](Check& c) {
    c.equal("poles == boundary(sigma) \\ sigma_dr", p.poles,
            region_setminus(region_boundary(p.sigma), p.sigma_dr));
  }));
  rep.identities.push_back(run_identity("remark13", [&](Check& c) {
    Region iso_sigma = region_iso(p.sigma);
    c.equal("iso(sigma) n sigma_desc == ies", region_intersect(iso_sigma, p.sigma_desc), p.ies);
    c.equal("iso(sigma) n sigma_ld == ies", region_intersect(iso_sigma, p.sigma_ld), p.ies);
    c.equal("iso(sigma) n sigma_rd == ies", region_intersect(iso_sigma, p.sigma_rd), p.ies);
  }));

  rep.all_pass = true;
  for (const auto& id : rep.identities) rep.all_pass = rep.all_pass && id.pass;
  return rep;
}

SpectralProfile from_matrix(const Matrix& a, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("from_matrix: matrix must be square");
  SpectralProfile p;
  region::FinitePoints sigma_pts;
  for (const auto& c : numkernel::eigenvalues(a, tol)) sigma_pts.points.push_back({c.value, {}});
  region::FinitePoints pole_pts;
  for (const auto& rec : resolvent::poles(a, tol))
    pole_pts.points.push_back({rec.value, rec.order});
  if (!sigma_pts.points.empty()) p.sigma.add(std::move(sigma_pts));
  if (!pole_pts.points.empty()) p.poles.add(std::move(pole_pts));
  p.sigma = region::normalize(p.sigma);
  p.poles = region::normalize(p.poles);
  return p;
}

CatalogEntry direct_sum(const CatalogEntry& e1, const CatalogEntry& e2) {
  CatalogEntry out;
  out.name = e1.name + "+" + e2.name;
  out.description = "Direct sum of '" + e1.name + "' and '" + e2.name + "'.";
  const SpectralProfile& p1 = e1.profile;
  const SpectralProfile& p2 = e2.profile;
  SpectralProfile& p = out.profile;
  p.sigma = region_union(p1.sigma, p2.sigma);
  p.sigma_asc = region_union(p1.sigma_asc, p2.sigma_asc);
  p.sigma_desc = region_union(p1.sigma_desc, p2.sigma_desc);
  p.sigma_ld = region_union(p1.sigma_ld, p2.sigma_ld);
  p.sigma_rd = region_union(p1.sigma_rd, p2.sigma_rd);
  p.sigma_dr = region_union(p1.sigma_dr, p2.sigma_dr);
  // Poles and essential singularities are not componentwise: a point isolated
  // in one summand's spectrum can be swallowed by the other's. Both sets are
  // recomputed from the combined spectrum and Drazin spectrum.
  p.poles = region_setminus(region_iso(p.sigma), p.sigma_dr);
  p.ies = region_intersect(region_iso(p.sigma), p.sigma_dr);
  out.derivation_note = "Blockwise: kernels, ranges and iterates of (A+B)-lambda split along "
                        "the two summands, so each chain-condition spectrum of the sum is the "
                        "union of the summands'. The pole set and the essential-singularity "
                        "set are recomputed from the combined spectra since isolation is not "
                        "preserved under unions. [" + e1.derivation_note + "] [" +
                        e2.derivation_note + "]";
  VerifyReport rep = verify_profile(p);
  if (!rep.all_pass) {
    std::string failing;
    for (const auto& id : rep.identities)
      if (!id.pass) failing += (failing.empty() ? "" : ", ") + id.name;
    throw ProfileVerificationError("direct_sum: combined profile fails identities: " + failing);
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> cat;
    const Complex zero(0, 0), one(1, 0), two(2, 0);

    {
      CatalogEntry e;
      e.name = "identity_operator";
      e.description = "The identity on an infinite-dimensional separable Hilbert space.";
      e.profile.sigma = Region::point(one);
      e.profile.poles = Region::point(one, 1);
      e.derivation_note =
          "sigma(I) = {1}. For every lambda != 1 the shift I - lambda is invertible, and at "
          "lambda = 1 the operator I - lambda vanishes, so its kernel chain and range chain "
          "both stabilize after one step: ascent = descent = 1 everywhere. All chain-type "
          "spectra are therefore empty and 1 is a first-order pole of the resolvent "
          "1/(lambda - 1) I.";
      cat.push_back(std::move(e));
    }
    {
      CatalogEntry e;
      e.name = "zero_operator";
      e.description = "The zero operator on an infinite-dimensional separable Hilbert space.";
      e.profile.sigma = Region::point(zero);
      e.profile.poles = Region::point(zero, 1);
      e.derivation_note =
          "sigma(0) = {0}; the resolvent is (1/lambda) I, a simple pole at 0. The kernel of 0 "
          "is everything and the range is trivial, so ascent = descent = 1 and all chain-type "
          "spectra are empty.";
      cat.push_back(std::move(e));
    }
    {
      CatalogEntry e;
      e.name = "jordan_cell_lift";
      e.description = "The 2x2 nilpotent Jordan cell as an operator on C^2.";
      e.profile.sigma = Region::point(zero);
      e.profile.poles = Region::point(zero, 2);
      e.derivation_note =
          "The cell N satisfies N^2 = 0 with N != 0, so 0 is the only spectral point, the "
          "kernel chain stabilizes at step 2, and the resolvent (1/lambda) I + (1/lambda^2) N "
          "has a pole of order 2. In finite dimension every chain stabilizes, so every "
          "chain-type spectrum is empty.";
      cat.push_back(std::move(e));
    }
    {
      CatalogEntry e;
      e.name = "mixed_block_lift";
      e.description = "diag(2, J) with J the 2x2 nilpotent Jordan cell, as an operator on C^3.";
      region::FinitePoints sigma;
      sigma.points.push_back({zero, {}});
      sigma.points.push_back({two, {}});
      e.profile.sigma.add(std::move(sigma));
      region::FinitePoints poles;
      poles.points.push_back({zero, 2});
      poles.points.push_back({two, 1});
      e.profile.poles.add(std::move(poles));
      e.derivation_note =
          "Blocks contribute independently: the invertible 1x1 block gives a simple pole at "
          "2, the nilpotent cell a second-order pole at 0. Chains stabilize at 1 and 2 "
          "respectively, so the chain-type spectra are empty.";
      cat.push_back(std::move(e));
    }
    {
      CatalogEntry e;
      e.name = "unilateral_shift";
      e.description = "The unilateral right shift S(e_k) = e_{k+1} on l^2(N).";
      e.profile.sigma = Region::disk(zero, 1.0);
      e.profile.sigma_desc = Region::disk(zero, 1.0);
      e.profile.sigma_ld = Region::circle(zero, 1.0);
      e.profile.sigma_rd = Region::disk(zero, 1.0);
      e.profile.sigma_dr = Region::disk(zero, 1.0);
      e.derivation_note =
          "S is an isometry with spectrum the closed unit disk. S - lambda is injective for "
          "every |lambda| <= 1, so all ascents are zero and the ascent spectrum is empty. "
          "For |lambda| < 1 the range of (S - lambda)^n is closed of codimension n, so the "
          "descent chain strictly decreases forever: the descent spectrum is the closed disk "
          "(boundary points have non-closed range). With ascent 0, the left-Drazin condition "
          "fails exactly where the range of S - lambda is not closed, i.e. on the unit "
          "circle. The right-Drazin and Drazin spectra coincide with the descent spectrum. "
          "No spectral point is isolated, so there are no poles and no essential "
          "singularities.";
      cat.push_back(std::move(e));
    }
    {
      CatalogEntry e;
      e.name = "backward_shift";
      e.description = "The backward shift S*(e_1) = 0, S*(e_{k+1}) = e_k on l^2(N).";
      e.profile.sigma = Region::disk(zero, 1.0);
      e.profile.sigma_asc = Region::disk(zero, 1.0);
      e.profile.sigma_ld = Region::disk(zero, 1.0);
      e.profile.sigma_rd = Region::circle(zero, 1.0);
      e.profile.sigma_dr = Region::disk(zero, 1.0);
      e.derivation_note =
          "The adjoint of the unilateral shift; kernels and cokernels exchange roles. "
          "S* - lambda is surjective for |lambda| < 1 with one-dimensional kernel growing "
          "along the chain, so the ascent chain never stabilizes on the disk while every "
          "descent is zero. The right-Drazin condition fails exactly on the unit circle, "
          "where ranges stop being closed; the left-Drazin and Drazin spectra fill the "
          "closed disk. The spectrum has no isolated points: no poles, no essential "
          "singularities.";
      cat.push_back(std::move(e));
    }
    {
      CatalogEntry e;
      e.name = "diagonal_reciprocal";
      e.description = "The diagonal operator D(e_k) = (1/k) e_k on l^2(N).";
      e.profile.sigma = Region::sequence(reciprocal_sequence(true, {}));
      e.profile.sigma_desc = Region::point(zero);
      e.profile.sigma_ld = Region::point(zero);
      e.profile.sigma_rd = Region::point(zero);
      e.profile.sigma_dr = Region::point(zero);
      e.profile.poles = Region::sequence(reciprocal_sequence(false, 1));
      e.derivation_note =
          "sigma(D) is the closure of the eigenvalue set {1/k}, i.e. the sequence together "
          "with its limit 0. Each 1/k is an isolated simple eigenvalue with a rank-one "
          "spectral projection, hence a first-order pole. At 0 the operator is injective "
          "(ascent 0) but its range is dense and proper, and the ranges of the powers "
          "strictly decrease forever, so 0 lies in the descent spectrum; the non-closed "
          "range puts 0 in the left- and right-Drazin spectra as well. 0 is not isolated in "
          "the spectrum, so it is neither a pole nor an isolated essential singularity.";
      cat.push_back(std::move(e));
    }
    {
      CatalogEntry e;
      e.name = "quasinilpotent_weighted_shift";
      e.description = "The weighted shift W(e_k) = (1/k) e_{k+1} on l^2(N).";
      e.profile.sigma = Region::point(zero);
      e.profile.sigma_desc = Region::point(zero);
      e.profile.sigma_ld = Region::point(zero);
      e.profile.sigma_rd = Region::point(zero);
      e.profile.sigma_dr = Region::point(zero);
      e.profile.ies = Region::point(zero);
      e.derivation_note =
          "The weights 1/k force the spectral radius to 0, so sigma(W) = {0} and 0 is an "
          "isolated spectral point. W is injective (ascent 0) but not nilpotent: no power "
          "has a stabilizing range chain, and the ranges are not closed, so 0 belongs to the "
          "descent, left-Drazin, right-Drazin and Drazin spectra. An isolated spectral point "
          "inside the Drazin spectrum is by definition an isolated essential singularity of "
          "the resolvent, not a pole: the principal part of the Laurent series at 0 has "
          "infinitely many nonzero coefficients W^{n-1}.";
      cat.push_back(std::move(e));
    }
    return cat;
  }();
  return entries;
}

std::string region_to_json(const region::Region& r) { return region_to_json_obj(r).dump(2); }

region::Region region_from_json(const std::string& text) {
  return region_from_json_obj(json::parse(text));
}

std::string profile_to_json(const SpectralProfile& p) { return profile_to_json_obj(p).dump(2); }

SpectralProfile profile_from_json(const std::string& text) {
  return profile_from_json_obj(json::parse(text));
}

std::string entry_to_json(const CatalogEntry& e) {
  json j = {{"name", e.name},
            {"description", e.description},
            {"derivation_note", e.derivation_note},
            {"profile", profile_to_json_obj(e.profile)}};
  return j.dump(2);
}

CatalogEntry entry_from_json(const std::string& text) {
  json j = json::parse(text);
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.description = j.value("description", "");
  e.derivation_note = j.value("derivation_note", "");
  e.profile = profile_from_json_obj(j.at("profile"));
  return e;
}

}  // namespace drazin::specset
