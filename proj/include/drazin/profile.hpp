#pragma once

#include <string>
#include <vector>

#include "drazin/matrix.hpp"
#include "drazin/region.hpp"

namespace drazin::specset {

struct SpectralProfile {
  region::Region sigma;
  region::Region sigma_asc;
  region::Region sigma_desc;
  region::Region sigma_ld;
  region::Region sigma_rd;
  region::Region sigma_dr;
  region::Region poles;  // pole orders attached to point/sequence elements
  region::Region ies;
};

struct IdentityResult {
  std::string name;
  bool pass = false;
  bool undecidable = false;
  std::string detail;  // both evaluated sides, or the undecidability reason
};

struct VerifyReport {
  std::vector<IdentityResult> identities;
  bool all_pass = false;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  SpectralProfile profile;
  std::string derivation_note;
};

struct ProfileVerificationError : Error {
  using Error::Error;
};

// Evaluates the full identity suite; one result per named identity.
VerifyReport verify_profile(const SpectralProfile& p);

SpectralProfile from_matrix(const Matrix& a, const ToleranceConfig& tol = {});

// Componentwise union of the plain spectra; the pole set and the essential
// singularities are recomputed from the combined sigma and sigma_dr (a point
// isolated in one summand may be swallowed by the other summand's spectrum).
CatalogEntry direct_sum(const CatalogEntry& e1, const CatalogEntry& e2);

const std::vector<CatalogEntry>& catalog();

// JSON text format for profiles and catalog entries (documented in README).
std::string region_to_json(const region::Region& r);
region::Region region_from_json(const std::string& text);
std::string profile_to_json(const SpectralProfile& p);
SpectralProfile profile_from_json(const std::string& text);
std::string entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const std::string& text);

}  // namespace drazin::specset
