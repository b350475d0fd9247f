#pragma once

// Reference implementations used only by tests. They avoid the library's
// symbolic shortcuts (bit-encoded Paulis, hashed closure, compressed
// detection) so that agreement is meaningful.

#include <qeccf/cxla.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

using qeccf::CMat;
using qeccf::cd;

inline CMat pauli2(char c) {
  CMat m = CMat::Zero(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli letter");
  }
  return m;
}

// Tensor product of single-qubit matrices, leftmost letter first. Accepts an
// optional sign prefix "-", "i", "-i".
inline CMat pauli_kron(std::string_view s) {
  cd coef = 1;
  if (s.rfind("-i", 0) == 0) {
    coef = cd(0, -1);
    s.remove_prefix(2);
  } else if (s.rfind("+i", 0) == 0 || s.rfind("i", 0) == 0) {
    coef = cd(0, 1);
    s.remove_prefix(s[0] == '+' ? 2 : 1);
  } else if (s.rfind("-", 0) == 0) {
    coef = -1;
    s.remove_prefix(1);
  } else if (s.rfind("+", 0) == 0) {
    s.remove_prefix(1);
  }
  CMat m = CMat::Identity(1, 1);
  for (char c : s) {
    const CMat p = pauli2(c);
    CMat k(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) k.block(2 * i, 2 * j, 2, 2) = m(i, j) * p;
    m = k;
  }
  return coef * m;
}

// Breadth-first closure with pairwise approximate comparison; quadratic, only
// for small groups.
inline std::vector<CMat> naive_closure(const std::vector<CMat>& gens, double tol = 1e-9) {
  const auto n = gens.front().rows();
  std::vector<CMat> out{CMat::Identity(n, n)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const CMat& g : gens) {
      const CMat c = out[i] * g;
      bool seen = false;
      for (const CMat& e : out) {
        if ((e - c).cwiseAbs().maxCoeff() <= tol) {
          seen = true;
          break;
        }
      }
      if (!seen) out.push_back(c);
      if (out.size() > 4096) throw std::runtime_error("closure too large");
    }
  }
  return out;
}

// PgP proportional to P, by direct comparison against every candidate scalar
// read off a nonzero diagonal entry of P.
inline bool detectable(const CMat& p, const CMat& g, double tol = 1e-9) {
  const CMat m = p * g * p;
  Eigen::Index k = 0;
  p.diagonal().cwiseAbs().maxCoeff(&k);
  const cd lambda = m(k, k) / p(k, k);
  return (m - lambda * p).cwiseAbs().maxCoeff() <= tol;
}

inline CMat random_projector(std::size_t n, std::size_t rank, std::mt19937_64& rng) {
  const CMat u = qeccf::cxla::random_unitary(n, rng);
  const CMat b = u.leftCols(static_cast<Eigen::Index>(rank));
  return b * b.adjoint();
}

inline std::string data(const std::string& rel) { return std::string(QECCF_DATA_DIR) + "/" + rel; }

}  // namespace oracle
