#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbcomp/error.hpp"
#include "hbcomp/pipeline.hpp"

namespace hbcomp {

struct GalleryCase {
  std::string name;
  std::string tags;  // space separated
  std::optional<RatFunc> b;
  std::optional<RatFunc> a;
  RatFunc phi;
  std::optional<ErrorCode> error;  // expected failure instead of a verdict
  std::optional<Bounded> bounded;
  std::optional<Decision> compact;
  std::optional<Decision> hilbert_schmidt;
  std::vector<std::string> rules;  // must all fire
  std::optional<double> hs_value;
  std::optional<RatFunc> u;  // expected u, coefficientwise after normalizing the denominator
};

struct GalleryRow {
  std::string name;
  std::string tags;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

const std::vector<GalleryCase>& gallery_cases();

// True when the filter is empty or matches the name or one of the tags.
bool gallery_selects(const GalleryCase& c, const std::string& filter);

// Values are compared at max(1e-8, 100 quad_tol); bounded cases also check the
// structural identity of the H(b) matrix at K = 16.
std::vector<GalleryRow> run_gallery(const std::string& filter = "", const Tolerances& tol = {});
std::string gallery_table(const std::vector<GalleryRow>& rows);

}  // namespace hbcomp
