#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbcomp/mate.hpp"

namespace hbcomp {

struct SelfMapCheck {
  bool self_map = false;
  std::optional<cplx> witness;  // offending pole or sample point
  std::string reason;
  double sup_modulus = 0.0;   // max |phi| over 4096 circle samples
  bool strictly_inside = false;  // |phi|_inf < 1: no contact points and max <= 1 - 1e-9
};

SelfMapCheck admit_symbol(const RatFunc& phi, const Tolerances& tol = {});

enum class ImageKind { Interior, Boundary, Violation };
const char* to_string(ImageKind k);

struct BoundaryImage {
  int index = 0;  // original (0-based) boundary-zero index
  cplx value;     // phi(xi_index)
  ImageKind kind = ImageKind::Interior;
  int target = -1;  // l with phi(xi_index) = xi_l, for kind == Boundary
};

struct ContactPoint {
  cplx zeta;
  int half_order = 1;  // order of 1 - |phi|^2 at zeta is 2 * half_order
  cplx image;          // phi(zeta)
};

struct SymbolProfile {
  RatFunc phi;
  std::vector<BoundaryImage> images;  // indexed like MateData::boundary_zeros
  // Involution of 0..n-1 moving the boundary-valued indices to the front
  // (built from transpositions, so split[split[i]] == i).
  std::vector<int> split;
  int p = 0;
  std::vector<ContactPoint> contact;  // F, sorted by argument
  CPoly contact_form;                 // z^M (|D|^2 - |N|^2) for phi = N/D
  bool is_inner = false;
  bool is_constant = false;
  bool strictly_inside = false;
  double sup_modulus = 0.0;

  bool has_violation() const;
  // Boundary-valued indices (kind == Boundary or Violation) in split order.
  std::vector<int> boundary_indices() const;
  std::vector<int> interior_indices() const;
};

// Throws AmbiguousBoundaryValue, OddCircleMultiplicity, NotASelfMap.
SymbolProfile profile(const RatFunc& phi, const MateData& m, const Tolerances& tol = {});

struct AdcData {
  cplx derivative;
  double caratheodory_quotient = 0.0;
};
// Throws NotContactPoint.
AdcData adc_data(const RatFunc& phi, cplx zeta, const Tolerances& tol = {});

}  // namespace hbcomp
