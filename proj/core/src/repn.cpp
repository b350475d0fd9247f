#include "qeccf/repn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qeccf/error.hpp"

namespace qeccf {

namespace {

constexpr double kGap = 1e-6;      // eigenvalue cluster separation
constexpr double kCharTol = 1e-6;  // character equality while grouping
constexpr int kMaxAttempts = 8;

struct Cluster {
  CMat basis;
  Character chi;
};

Character carrier_character(const std::vector<const CMat*>& us, const CMat& b) {
  Character chi(us.size());
  for (std::size_t k = 0; k < us.size(); ++k) chi[k] = (b.adjoint() * (*us[k]) * b).trace();
  return chi;
}

double char_dist(const Character& a, const Character& b) {
  double m = 0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

std::vector<std::pair<long long, long long>> sort_key(const Character& c) {
  std::vector<std::pair<long long, long long>> key;
  key.reserve(c.size());
  for (cd z : c) key.emplace_back(std::llround(z.real() * 1e6), std::llround(z.imag() * 1e6));
  return key;
}

// One sampling attempt; returns false when some eigenspace is not irreducible.
bool try_split(const std::vector<const CMat*>& us, std::size_t dim, std::mt19937_64& rng,
               std::vector<Cluster>& out) {
  const CMat h = cxla::random_hermitian(dim, rng);
  CMat c = CMat::Zero(dim, dim);
  for (const CMat* u : us) c.noalias() += (*u) * h * u->adjoint();
  c /= static_cast<double>(us.size());
  const auto eig = cxla::eig_hermitian(0.5 * (c + c.adjoint()), Tol{1e-6, 1e-8});

  out.clear();
  Eigen::Index start = 0;
  const Eigen::Index n = eig.values.size();
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i < n && eig.values(i) - eig.values(i - 1) < kGap) continue;
    Cluster cl;
    cl.basis = eig.vectors.middleCols(start, i - start);
    cl.chi = carrier_character(us, cl.basis);
    if (std::abs(char_inner(cl.chi, cl.chi) - cd(1, 0)) > 1e-6) return false;
    out.push_back(std::move(cl));
    start = i;
  }
  return true;
}

}  // namespace

int ConstituentSet::pos(int g) const {
  if (g < 0 || static_cast<std::size_t>(g) >= position.size() || position[g] < 0) {
    throw Error(Error::Kind::kDomain, "element " + std::to_string(g) + " is not in the subgroup");
  }
  return position[g];
}

const CMat& ConstituentSet::rho(int which, int g) const {
  return constituents.at(static_cast<std::size_t>(which)).irrep_mats[pos(g)];
}

cd ConstituentSet::chi(int which, int g) const {
  return constituents.at(static_cast<std::size_t>(which)).character[pos(g)];
}

int ConstituentSet::find_character(const Character& c, double tol) const {
  for (std::size_t i = 0; i < constituents.size(); ++i)
    if (char_dist(constituents[i].character, c) <= tol) return static_cast<int>(i);
  return -1;
}

ConstituentSet decompose_natural(std::shared_ptr<const FinMatGroup> group, const IndexList& sub,
                                 std::uint64_t seed) {
  if (!group) throw Error(Error::Kind::kDomain, "decompose_natural: null group");
  if (sub.empty() || !group->is_closed(sub)) {
    throw Error(Error::Kind::kClosure, "decompose_natural: subgroup is not closed");
  }
  ConstituentSet cs;
  cs.group = group;
  cs.sub = sub;
  std::sort(cs.sub.begin(), cs.sub.end());
  cs.position.assign(group->order(), -1);
  for (std::size_t k = 0; k < cs.sub.size(); ++k) cs.position[cs.sub[k]] = static_cast<int>(k);

  std::vector<const CMat*> us;
  for (int s : cs.sub) us.push_back(&group->element(s));
  const std::size_t dim = group->dim();

  std::vector<Cluster> clusters;
  bool ok = false;
  for (int attempt = 0; attempt < kMaxAttempts && !ok; ++attempt) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(attempt));
    ok = try_split(us, dim, rng, clusters);
  }
  if (!ok) {
    throw Error(Error::Kind::kDecomposition,
                "commutant sampling failed to split the natural representation after " +
                    std::to_string(kMaxAttempts) + " attempts");
  }

  // Group equivalent irreducible subspaces by character.
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& cl) {
      return char_dist(clusters[cl.front()].chi, clusters[i].chi) < kCharTol;
    });
    if (it == classes.end()) {
      classes.push_back({i});
    } else {
      it->push_back(i);
    }
  }

  const double order = static_cast<double>(cs.sub.size());
  std::size_t total = 0;
  for (const auto& cl : classes) {
    const Cluster& first = clusters[cl.front()];
    IrrConstituent c;
    c.dim = static_cast<int>(first.basis.cols());
    c.multiplicity = static_cast<int>(cl.size());
    c.character = first.chi;
    c.carrier_basis = first.basis;
    c.irrep_mats.reserve(us.size());
    for (const CMat* u : us) c.irrep_mats.push_back(first.basis.adjoint() * (*u) * first.basis);

    CMat from_spaces = CMat::Zero(dim, dim);
    for (std::size_t i : cl) from_spaces += clusters[i].basis * clusters[i].basis.adjoint();
    c.isotypic_projector = CMat::Zero(dim, dim);
    for (std::size_t k = 0; k < us.size(); ++k) c.isotypic_projector += std::conj(c.character[k]) * (*us[k]);
    c.isotypic_projector *= static_cast<double>(c.dim) / order;
    if (cxla::max_diff(from_spaces, c.isotypic_projector) > 1e-7) {
      throw Error(Error::Kind::kDecomposition,
                  "isotypic projector from eigenspaces disagrees with the character formula (diff " +
                      std::to_string(cxla::max_diff(from_spaces, c.isotypic_projector)) + ")");
    }
    total += static_cast<std::size_t>(c.dim * c.multiplicity);
    cs.constituents.push_back(std::move(c));
  }
  if (total != dim) {
    throw Error(Error::Kind::kDecomposition, "constituent dimensions do not add up to the natural dimension");
  }
  std::sort(cs.constituents.begin(), cs.constituents.end(),
            [](const IrrConstituent& a, const IrrConstituent& b) {
              return sort_key(a.character) < sort_key(b.character);
            });
  return cs;
}

ConstituentSet decompose_natural(const NiceErrorBasis& e, const IndexList& sub, std::uint64_t seed) {
  return decompose_natural(e.group, sub, seed);
}

cd char_inner(const Character& c1, const Character& c2) {
  if (c1.size() != c2.size() || c1.empty()) {
    throw Error(Error::Kind::kDomain, "char_inner: characters live on different domains");
  }
  cd acc = 0;
  for (std::size_t k = 0; k < c1.size(); ++k) acc += c1[k] * std::conj(c2[k]);
  return acc / static_cast<double>(c1.size());
}

Character conjugate_character(const ConstituentSet& cs, const Character& c, int h) {
  if (c.size() != cs.sub.size()) throw Error(Error::Kind::kDomain, "character domain mismatch");
  Character out(c.size());
  for (std::size_t k = 0; k < cs.sub.size(); ++k) {
    const int t = cs.group->conj(h, cs.sub[k]);
    const int p = cs.position[t];
    if (p < 0) throw Error(Error::Kind::kNotNormal, "subgroup not normal");
    out[k] = c[static_cast<std::size_t>(p)];
  }
  return out;
}

IndexList inertia_group(const ConstituentSet& cs, const Character& c) {
  IndexList out;
  for (int g = 0; g < static_cast<int>(cs.group->order()); ++g)
    if (char_dist(conjugate_character(cs, c, g), c) <= 1e-7) out.push_back(g);
  return out;
}

IndexList quasikernel_of_projector(const FinMatGroup& g, const CMat& p, const Tol& tol) {
  const CMat b = cxla::orthonormal_image_basis(p, tol);
  const Eigen::Index k = b.cols();
  IndexList out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (k == 0) {
      out.push_back(x);
      continue;
    }
    const CMat m = b.adjoint() * g.element(x) * b;
    const cd lambda = m.trace() / static_cast<double>(k);
    if (std::abs(std::abs(lambda) - 1.0) > 1e-7) continue;
    if (cxla::max_diff(m, lambda * CMat::Identity(k, k)) <= std::max(tol.eq_tol, 1e-9)) out.push_back(x);
  }
  return out;
}

IndexList quasikernel(const ConstituentSet& cs, int which, const Tol& tol) {
  return quasikernel_of_projector(*cs.group, cs.constituents.at(static_cast<std::size_t>(which)).isotypic_projector,
                                  tol);
}

void adapt_basis(ConstituentSet& cs, int which, int diag_elem, int offdiag_elem) {
  IrrConstituent& c = cs.constituents.at(static_cast<std::size_t>(which));
  const CMat& rd = c.irrep_mats[cs.pos(diag_elem)];
  const Eigen::Index n = rd.rows();
  // Generic Hermitian combination sharing the eigenvectors of the normal matrix rd.
  const cd w(0.0, 0.6180339887498949);
  const CMat herm = (rd + rd.adjoint()) + w * (rd - rd.adjoint());
  const auto eig = cxla::eig_hermitian(0.5 * (herm + herm.adjoint()), Tol{1e-6, 1e-8});
  for (Eigen::Index i = 1; i < n; ++i) {
    if (eig.values(i) - eig.values(i - 1) < 1e-6) {
      throw Error(Error::Kind::kDecomposition, "adapt_basis: diagonal element has a repeated eigenvalue");
    }
  }
  std::vector<std::pair<double, Eigen::Index>> order;
  for (Eigen::Index i = 0; i < n; ++i) {
    const CVec v = eig.vectors.col(i);
    const cd lambda = v.dot(rd * v);  // v† rd v
    double arg = std::arg(lambda);
    if (arg < -1e-9) arg += 2 * std::numbers::pi;
    if (arg < 0) arg = 0;
    order.emplace_back(arg, i);
  }
  std::sort(order.begin(), order.end());
  CMat v(n, n);
  for (Eigen::Index j = 0; j < n; ++j) v.col(j) = eig.vectors.col(order[static_cast<std::size_t>(j)].second);

  const CMat ro = v.adjoint() * c.irrep_mats[cs.pos(offdiag_elem)] * v;
  for (Eigen::Index j = 1; j < n; ++j) {
    const cd e = ro(j, 0);
    if (std::abs(e) > 1e-9) v.col(j) *= e / std::abs(e);  // makes (v† ρ v)(j,0) real positive
  }
  c.carrier_basis = c.carrier_basis * v;
  for (CMat& m : c.irrep_mats) m = v.adjoint() * m * v;
}

std::string describe(const ConstituentSet& cs) {
  std::ostringstream os;
  os << "|S| = " << cs.sub.size() << ", natural dimension " << cs.natural_dim() << ", "
     << cs.constituents.size() << " constituents\n";
  for (std::size_t i = 0; i < cs.constituents.size(); ++i) {
    const auto& c = cs.constituents[i];
    os << "  [" << i << "] dim " << c.dim << " multiplicity " << c.multiplicity << "\n";
  }
  return os.str();
}

}  // namespace qeccf
