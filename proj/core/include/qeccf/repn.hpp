#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qeccf/errbasis.hpp"
#include "qeccf/matgroup.hpp"

namespace qeccf {

// Character values aligned with ConstituentSet::sub (position k holds χ(sub[k])).
using Character = std::vector<cd>;

struct IrrConstituent {
  int dim = 0;
  Character character;
  CMat isotypic_projector;      // natural space, rank dim * multiplicity
  std::vector<CMat> irrep_mats;  // aligned with sub
  int multiplicity = 0;
  CMat carrier_basis;            // orthonormal columns spanning one irreducible copy
};

struct ConstituentSet {
  std::shared_ptr<const FinMatGroup> group;
  IndexList sub;
  std::vector<int> position;  // group index -> position in sub, or -1
  std::vector<IrrConstituent> constituents;

  std::size_t natural_dim() const { return group->dim(); }
  int pos(int g) const;  // throws kDomain when g is not in sub
  const CMat& rho(int which, int g) const;
  cd chi(int which, int g) const;
  // Index of the constituent with this character (within tol), or -1.
  int find_character(const Character& c, double tol = 1e-7) const;
};

inline constexpr std::uint64_t kDefaultSeed = 20070601;

// Splits the natural representation restricted to `sub` into irreducible
// constituents by sampling the commutant. Constituents are ordered by their
// character vectors (real part, then imaginary part, entries rounded to 1e-6),
// so the ordering does not depend on the seed.
ConstituentSet decompose_natural(std::shared_ptr<const FinMatGroup> group, const IndexList& sub,
                                 std::uint64_t seed = kDefaultSeed);
ConstituentSet decompose_natural(const NiceErrorBasis& e, const IndexList& sub,
                                 std::uint64_t seed = kDefaultSeed);

// (1/|S|) Σ c1(s) conj(c2(s)).
cd char_inner(const Character& c1, const Character& c2);

// s -> c(h s h^-1). Throws Error(kNotNormal, "subgroup not normal") when the
// conjugate leaves sub.
Character conjugate_character(const ConstituentSet& cs, const Character& c, int h);

// Elements g of the ambient group with c^g = c (within 1e-7).
IndexList inertia_group(const ConstituentSet& cs, const Character& c);

// Elements of the ambient group acting as a scalar on image(p).
IndexList quasikernel_of_projector(const FinMatGroup& g, const CMat& p, const Tol& tol = {});

// Quasikernel of the Clifford code of constituent `which`, i.e. of the image
// of its isotypic projector.
IndexList quasikernel(const ConstituentSet& cs, int which, const Tol& tol = {});

// Re-chooses the carrier basis of a constituent so that rho(diag_elem) is
// diagonal with eigenvalue arguments ascending in [0, 2π), and the first
// column of rho(offdiag_elem) is real nonnegative. Throws kDecomposition if
// rho(diag_elem) has a repeated eigenvalue. Characters and isotypic
// projectors are unchanged.
void adapt_basis(ConstituentSet& cs, int which, int diag_elem, int offdiag_elem);

// Inventory line per constituent, used by the CLI and logs.
std::string describe(const ConstituentSet& cs);

}  // namespace qeccf
