#pragma once

#include <map>
#include <vector>

#include "qeccf/repn.hpp"

namespace qeccf {

// Transform-domain values keyed by constituent index; absent entries are zero.
struct TransformAssignment {
  std::map<int, CMat> values;

  // Throws Error(kNotProjector) unless every value is an n_i x n_i Hermitian
  // idempotent, Error(kDomain) for unknown constituents.
  void validate(const ConstituentSet& cs, const Tol& tol = {}) const;
  bool is_zero(double tol = 1e-12) const;
};

// Σ_s coeffs[k]·sub[k]; coefficients aligned with sub.
struct GroupAlgebraElem {
  IndexList sub;
  std::vector<cd> coeffs;
};

struct Inversion {
  GroupAlgebraElem t;
  CMat projector;
};

// Component i = Σ_s T_s ρ_i(s).
std::vector<CMat> forward_transform(const GroupAlgebraElem& t, const ConstituentSet& cs);

// T_s = (1/|S|) Σ_i n_i tr(ρ_i(s^-1) a_i), no validation of a_i.
GroupAlgebraElem inverse_coefficients(const TransformAssignment& assign, const ConstituentSet& cs);

// Σ_s T_s U(s) in the natural representation.
CMat matrix_image(const GroupAlgebraElem& t, const FinMatGroup& g);

// Validated inversion; the projector is checked with is_projector.
Inversion invert(const TransformAssignment& assign, const ConstituentSet& cs, const Tol& tol = {});

CMat single_character_projector(const ConstituentSet& cs, int which);

// Product in the group algebra CS.
GroupAlgebraElem convolve(const GroupAlgebraElem& a, const GroupAlgebraElem& b, const FinMatGroup& g);

IndexList support(const GroupAlgebraElem& t, double threshold = 1e-8);

// True iff the support elements pairwise commute.
bool in_abelian_algebra(const GroupAlgebraElem& t, const FinMatGroup& g, double threshold = 1e-8);

}  // namespace qeccf
