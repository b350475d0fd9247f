#include "qeccf/fourier.hpp"

#include "qeccf/error.hpp"

namespace qeccf {

void TransformAssignment::validate(const ConstituentSet& cs, const Tol& tol) const {
  for (const auto& [i, a] : values) {
    if (i < 0 || static_cast<std::size_t>(i) >= cs.constituents.size()) {
      throw Error(Error::Kind::kDomain, "assignment names unknown constituent " + std::to_string(i));
    }
    const int n = cs.constituents[static_cast<std::size_t>(i)].dim;
    if (a.rows() != n || a.cols() != n) {
      throw Error(Error::Kind::kDimension, "value for constituent " + std::to_string(i) + " must be " +
                                               std::to_string(n) + "x" + std::to_string(n));
    }
    if (!cxla::is_hermitian(a, tol)) {
      throw Error(Error::Kind::kNotProjector, "value for constituent " + std::to_string(i) + " is not Hermitian");
    }
    if (!cxla::is_idempotent(a, tol)) {
      throw Error(Error::Kind::kNotProjector, "value for constituent " + std::to_string(i) + " is not idempotent");
    }
  }
}

bool TransformAssignment::is_zero(double tol) const {
  for (const auto& [i, a] : values)
    if (cxla::max_abs(a) > tol) return false;
  return true;
}

std::vector<CMat> forward_transform(const GroupAlgebraElem& t, const ConstituentSet& cs) {
  if (t.sub != cs.sub || t.coeffs.size() != cs.sub.size()) {
    throw Error(Error::Kind::kDomain, "forward_transform: element lives on a different subgroup");
  }
  std::vector<CMat> out;
  for (const auto& c : cs.constituents) {
    CMat acc = CMat::Zero(c.dim, c.dim);
    for (std::size_t k = 0; k < t.coeffs.size(); ++k)
      if (t.coeffs[k] != cd(0, 0)) acc += t.coeffs[k] * c.irrep_mats[k];
    out.push_back(std::move(acc));
  }
  return out;
}

GroupAlgebraElem inverse_coefficients(const TransformAssignment& assign, const ConstituentSet& cs) {
  GroupAlgebraElem t{cs.sub, std::vector<cd>(cs.sub.size(), cd(0, 0))};
  const double order = static_cast<double>(cs.sub.size());
  for (const auto& [i, a] : assign.values) {
    const auto& c = cs.constituents.at(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < cs.sub.size(); ++k) {
      // ρ(s^-1) = ρ(s)† for unitary irreps.
      const cd tr = (c.irrep_mats[k].adjoint() * a).trace();
      t.coeffs[k] += static_cast<double>(c.dim) * tr / order;
    }
  }
  return t;
}

CMat matrix_image(const GroupAlgebraElem& t, const FinMatGroup& g) {
  CMat out = CMat::Zero(g.dim(), g.dim());
  for (std::size_t k = 0; k < t.sub.size(); ++k)
    if (t.coeffs[k] != cd(0, 0)) out += t.coeffs[k] * g.element(t.sub[k]);
  return out;
}

Inversion invert(const TransformAssignment& assign, const ConstituentSet& cs, const Tol& tol) {
  assign.validate(cs, tol);
  Inversion r;
  r.t = inverse_coefficients(assign, cs);
  r.projector = matrix_image(r.t, *cs.group);
  if (!cxla::is_projector(r.projector, tol)) {
    throw Error(Error::Kind::kNotProjector, "inverted element is not an orthogonal projector");
  }
  return r;
}

CMat single_character_projector(const ConstituentSet& cs, int which) {
  const auto& c = cs.constituents.at(static_cast<std::size_t>(which));
  TransformAssignment a;
  a.values[which] = CMat::Identity(c.dim, c.dim);
  return matrix_image(inverse_coefficients(a, cs), *cs.group);
}

GroupAlgebraElem convolve(const GroupAlgebraElem& a, const GroupAlgebraElem& b, const FinMatGroup& g) {
  if (a.sub != b.sub) throw Error(Error::Kind::kDomain, "convolve: different subgroups");
  std::vector<int> position(g.order(), -1);
  for (std::size_t k = 0; k < a.sub.size(); ++k) position[a.sub[k]] = static_cast<int>(k);
  GroupAlgebraElem out{a.sub, std::vector<cd>(a.sub.size(), cd(0, 0))};
  for (std::size_t i = 0; i < a.sub.size(); ++i) {
    if (a.coeffs[i] == cd(0, 0)) continue;
    for (std::size_t j = 0; j < b.sub.size(); ++j) {
      const int p = position[g.mul(a.sub[i], b.sub[j])];
      if (p < 0) throw Error(Error::Kind::kClosure, "convolve: subgroup not closed");
      out.coeffs[static_cast<std::size_t>(p)] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return out;
}

IndexList support(const GroupAlgebraElem& t, double threshold) {
  IndexList out;
  for (std::size_t k = 0; k < t.sub.size(); ++k)
    if (std::abs(t.coeffs[k]) > threshold) out.push_back(t.sub[k]);
  return out;
}

bool in_abelian_algebra(const GroupAlgebraElem& t, const FinMatGroup& g, double threshold) {
  const IndexList s = support(t, threshold);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.mul(s[i], s[j]) != g.mul(s[j], s[i])) return false;
  return true;
}

}  // namespace qeccf
