#include "qeccf/codes.hpp"

#include <algorithm>
#include <cmath>

#include "qeccf/error.hpp"
#include "qeccf/parallel.hpp"

namespace qeccf {

namespace {

long code_dim(const CMat& p, const Tol& tol) {
  long k = 0;
  if (!cxla::near_integer(p.trace(), std::max(tol.rank_tol, 1e-8), &k) || k < 0) {
    throw Error(Error::Kind::kNotProjector, "projector trace is not a nonnegative integer");
  }
  return k;
}

bool acts_as_scalar(const CMat& m, cd* lambda, double tol) {
  const Eigen::Index k = m.rows();
  *lambda = m.trace() / static_cast<double>(k);
  return cxla::max_diff(m, *lambda * CMat::Identity(k, k)) <= tol;
}

}  // namespace

Detection is_detectable(const CMat& p, const CMat& g, const Tol& tol) {
  if (!cxla::is_square(p) || p.rows() != g.rows() || p.cols() != g.cols()) {
    throw Error(Error::Kind::kDimension, "is_detectable: dimension mismatch");
  }
  const long k = code_dim(p, tol);
  if (k == 0) return {true, 0};
  const CMat m = p * g * p;
  const cd lambda = m.trace() / static_cast<double>(k);
  return {cxla::max_diff(m, lambda * p) <= tol.eq_tol, lambda};
}

Detector::Detector(const CMat& p, const Tol& tol) : tol_(tol) {
  if (!cxla::is_projector(p, tol)) throw Error(Error::Kind::kNotProjector, "Detector: not a projector");
  b_ = cxla::orthonormal_image_basis(p, tol);
  k_ = b_.cols();
}

Detection Detector::finish(const CMat& gb) const {
  if (k_ == 0) return {true, 0};
  const CMat m = b_.adjoint() * gb;
  const cd lambda = m.trace() / static_cast<double>(k_);
  CMat r = m - lambda * CMat::Identity(k_, k_);
  // ‖B R B†‖_max >= ‖R‖_F / D >= max|R| / D.
  if (cxla::max_abs(r) > tol_.eq_tol * static_cast<double>(b_.rows())) return {false, lambda};
  const CMat full = b_ * r * b_.adjoint();
  return {cxla::max_abs(full) <= tol_.eq_tol, lambda};
}

Detection Detector::check(const CMat& g) const {
  if (g.rows() != b_.rows() || g.cols() != b_.rows()) throw Error(Error::Kind::kDimension, "Detector: dimension mismatch");
  return finish(g * b_);
}

Detection Detector::check(const PauliElem& g) const {
  if ((std::size_t{1} << g.n) != static_cast<std::size_t>(b_.rows())) {
    throw Error(Error::Kind::kDimension, "Detector: Pauli string length mismatch");
  }
  return finish(g.apply_left(b_));
}

std::string CodeAnalysis::distance_label() const {
  return min_distance ? std::to_string(*min_distance) : "n/a";
}

CodeAnalysis detectable_set(const CMat& p, const NiceErrorBasis& e, const Tol& tol, int threads) {
  CodeAnalysis a;
  a.projector = p;
  const Detector det(p, tol);
  a.dim_code = det.dim();
  const std::size_t order = e.group->order();
  std::vector<char> ok(order, 0);
  parallel_for(order, threads, [&](std::size_t i) {
    const Detection d = e.is_pauli() ? det.check(e.pauli[i]) : det.check(e.group->element(static_cast<int>(i)));
    ok[i] = d.detectable ? 1 : 0;
  });
  int worst = -1;
  for (std::size_t i = 0; i < order; ++i) {
    const int w = e.weights[i];
    auto& wc = a.wt_detect[w];
    ++wc.total;
    if (ok[i]) {
      ++wc.detected;
      a.detectable.push_back(static_cast<int>(i));
    } else if (worst < 0 || w < worst) {
      worst = w;
    }
  }
  if (e.is_pauli()) a.min_distance = worst < 0 ? e.nfactors + 1 : worst;
  return a;
}

int pauli_min_distance(const CMat& p, int n, const Tol& tol) {
  if (p.rows() != (Eigen::Index{1} << n)) throw Error(Error::Kind::kDimension, "pauli_min_distance: size mismatch");
  const Detector det(p, tol);
  for (int w = 1; w <= n; ++w)
    for (const PauliElem& g : pauli_strings_of_weight(n, w))
      if (!det.check(g).detectable) return w;
  return n + 1;
}

KnillLaflamme knill_laflamme_check(const CMat& p, const std::vector<CMat>& errors, const Tol& tol) {
  const long k = code_dim(p, tol);
  if (k == 0) throw Error(Error::Kind::kDomain, "knill_laflamme_check: zero-dimensional code");
  const std::size_t m = errors.size();
  KnillLaflamme r;
  r.alpha = CMat::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  r.correctable = true;
  std::vector<CMat> ep;
  for (const CMat& e : errors) {
    if (e.rows() != p.rows() || e.cols() != p.cols()) throw Error(Error::Kind::kDimension, "error operator size mismatch");
    ep.push_back(e * p);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const CMat block = ep[i].adjoint() * ep[j];  // P Ei† Ej P
      const cd alpha = block.trace() / static_cast<double>(k);
      r.alpha(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = alpha;
      if (cxla::max_diff(block, alpha * p) > tol.eq_tol) r.correctable = false;
    }
  if (r.correctable && !cxla::is_hermitian(r.alpha, tol)) {
    throw Error(Error::Kind::kNotHermitian, "Knill-Laflamme matrix is not Hermitian");
  }
  return r;
}

bool is_clifford_table_convention(const TransformAssignment& assign, const CMat& projector,
                                  const ConstituentSet& cs, const Tol& tol) {
  bool any = false;
  for (const auto& [i, a] : assign.values) {
    if (cxla::max_abs(a) <= 1e-12) continue;
    if (cxla::max_diff(a, CMat::Identity(a.rows(), a.cols())) > tol.eq_tol) return false;
    any = true;
  }
  if (!any) return false;
  const CMat b = cxla::orthonormal_image_basis(projector, tol);
  IndexList n0;
  std::vector<cd> lambdas;
  for (int s : cs.sub) {
    cd lambda;
    if (acts_as_scalar(b.adjoint() * cs.group->element(s) * b, &lambda, 1e-7)) {
      n0.push_back(s);
      lambdas.push_back(lambda);
    }
  }
  if (!cs.group->is_closed(n0) || !cs.group->is_normal(n0)) return false;
  CMat q = CMat::Zero(projector.rows(), projector.cols());
  for (std::size_t k = 0; k < n0.size(); ++k) q += std::conj(lambdas[k]) * cs.group->element(n0[k]);
  q /= static_cast<double>(n0.size());
  return cxla::max_diff(q, projector) <= 1e-7;
}

void classify(CodeAnalysis& analysis, const ConstituentSet& cs, const GroupAlgebraElem& t,
              bool table_convention, const Tol& tol) {
  int nonzero = 0;
  bool identity_only = true;
  for (const auto& [i, a] : analysis.assignment.values) {
    if (cxla::max_abs(a) <= 1e-12) continue;
    ++nonzero;
    if (cxla::max_diff(a, CMat::Identity(a.rows(), a.cols())) > tol.eq_tol) identity_only = false;
  }
  analysis.is_clifford_of_S = nonzero == 1 && identity_only;
  analysis.in_A_of_S = in_abelian_algebra(t, *cs.group);
  if (table_convention) {
    analysis.table_convention = is_clifford_table_convention(analysis.assignment, analysis.projector, cs, tol);
  }
}

TranslateSumSpec make_translate_sum(const ConstituentSet& cs, int base, const IndexList& translators,
                                    const Tol& tol) {
  if (translators.empty() || translators.front() != 0) {
    throw Error(Error::Kind::kDomain, "translators must start with the identity");
  }
  TranslateSumSpec spec;
  spec.base_constituent = base;
  spec.translators = translators;
  const Character& chi = cs.constituents.at(static_cast<std::size_t>(base)).character;
  spec.projector = CMat::Zero(cs.natural_dim(), cs.natural_dim());
  for (int h : translators) {
    const int c = cs.find_character(conjugate_character(cs, chi, h));
    if (c < 0) throw Error(Error::Kind::kDecomposition, "translated character is not a constituent");
    if (std::find(spec.constituents.begin(), spec.constituents.end(), c) != spec.constituents.end()) {
      throw Error(Error::Kind::kDomain, "translated characters are not pairwise distinct");
    }
    spec.constituents.push_back(c);
    spec.quasikernels.push_back(quasikernel(cs, c, tol));
    spec.projector += cs.constituents[static_cast<std::size_t>(c)].isotypic_projector;
  }
  return spec;
}

TranslatePrediction translate_sum_analyze(const TranslateSumSpec& spec, const ConstituentSet& cs, int g) {
  const bool in_all = std::all_of(spec.quasikernels.begin(), spec.quasikernels.end(),
                                  [g](const IndexList& z) { return std::binary_search(z.begin(), z.end(), g); });
  if (in_all) {
    const CMat& u = cs.group->element(g);
    cd first = 0;
    bool constant = true;
    for (std::size_t i = 0; i < spec.constituents.size(); ++i) {
      const CMat& p = cs.constituents[static_cast<std::size_t>(spec.constituents[i])].isotypic_projector;
      const cd lambda = (p * u).trace() / p.trace();
      if (i == 0) {
        first = lambda;
      } else if (std::abs(lambda - first) > 1e-7) {
        constant = false;
      }
    }
    return {TranslateCase::kInAllQuasikernels, constant};
  }
  if (cs.position[static_cast<std::size_t>(g)] < 0) {
    const Character& chi = cs.constituents[static_cast<std::size_t>(spec.base_constituent)].character;
    for (int h : spec.translators) {
      const Character moved = conjugate_character(cs, chi, cs.group->mul(h, g));
      for (int h2 : spec.translators) {
        const cd ip = char_inner(moved, conjugate_character(cs, chi, h2));
        if (std::abs(ip) > 1e-6) return {TranslateCase::kOutsideS, false};
      }
    }
    return {TranslateCase::kOutsideS, true};
  }
  return {TranslateCase::kInSOnly, false};
}

}  // namespace qeccf
