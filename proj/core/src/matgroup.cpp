#include "qeccf/matgroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <set>
#include <sstream>

#include "qeccf/error.hpp"

namespace qeccf {

std::string elem_key(const CMat& m) {
  std::string key;
  key.resize(static_cast<std::size_t>(m.size()) * 2 * sizeof(int64_t));
  char* out = key.data();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const cd z = m.data()[i];
    for (double part : {z.real(), z.imag()}) {
      // llround maps -0.0 and tiny negatives to integer 0.
      const int64_t v = static_cast<int64_t>(std::llround(part * 1e6));
      std::memcpy(out, &v, sizeof v);
      out += sizeof v;
    }
  }
  return key;
}

std::string GroupFingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << " center=" << center_order << (abelian ? " abelian" : "")
     << " orders={";
  bool first = true;
  for (const auto& [o, c] : element_orders) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  // Class sizes as size^count, ascending.
  os << "} classes=[";
  for (std::size_t i = 0; i < class_sizes.size();) {
    std::size_t j = i;
    while (j < class_sizes.size() && class_sizes[j] == class_sizes[i]) ++j;
    os << (i ? "," : "") << class_sizes[i] << "^" << (j - i);
    i = j;
  }
  os << "]";
  return os.str();
}

FinMatGroup FinMatGroup::close(std::span<const CMat> generators, std::size_t max_order,
                               const Tol& tol) {
  if (generators.empty()) {
    throw Error(Error::Kind::kDomain, "close_group: at least one generator is required");
  }
  const Eigen::Index d = generators.front().rows();
  for (const CMat& g : generators) {
    if (g.rows() != d || g.cols() != d) {
      throw Error(Error::Kind::kDimension, "close_group: generators must be square and equal-sized");
    }
    if (!cxla::is_unitary(g, tol)) {
      throw Error(Error::Kind::kDomain, "close_group: generator is not unitary");
    }
  }

  FinMatGroup grp;
  grp.dim_ = static_cast<std::size_t>(d);
  const std::size_t ngen = generators.size();

  // BFS over right multiplication by generators. parent/via record a word
  // for every element so the full table can be filled from `right`.
  std::vector<int> parent{-1}, via{-1};
  std::vector<int32_t> right;  // right[x * ngen + k] = x * g_k
  grp.elements_.push_back(CMat::Identity(d, d));
  grp.index_.emplace(elem_key(grp.elements_.back()), 0);

  for (std::size_t x = 0; x < grp.elements_.size(); ++x) {
    for (std::size_t k = 0; k < ngen; ++k) {
      CMat prod = grp.elements_[x] * generators[k];
      std::string key = elem_key(prod);
      auto it = grp.index_.find(key);
      int idx;
      if (it == grp.index_.end()) {
        if (grp.elements_.size() >= max_order) {
          std::ostringstream os;
          os << "close_group: closure exceeds max_order " << max_order;
          throw Error(Error::Kind::kClosure, os.str());
        }
        idx = static_cast<int>(grp.elements_.size());
        grp.elements_.push_back(std::move(prod));
        grp.index_.emplace(std::move(key), idx);
        parent.push_back(static_cast<int>(x));
        via.push_back(static_cast<int>(k));
      } else {
        idx = it->second;
        if (cxla::max_diff(grp.elements_[idx], prod) > tol.eq_tol) {
          throw Error(Error::Kind::kClosure,
                      "close_group: key collision between matrices that differ beyond eq_tol");
        }
      }
      right.push_back(idx);
    }
  }

  // Guard band: distinct elements must be far apart.
  const std::size_t n = grp.elements_.size();
  const double band = 10.0 * tol.eq_tol;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const CMat& x = grp.elements_[a];
      const CMat& y = grp.elements_[b];
      bool separated = false;
      for (Eigen::Index i = 0; i < x.size() && !separated; ++i)
        separated = std::abs(x.data()[i] - y.data()[i]) > band;
      if (!separated) {
        std::ostringstream os;
        os << "close_group: elements " << a << " and " << b
           << " are within 10*eq_tol but hashed apart; refusing to guess";
        throw Error(Error::Kind::kClosure, os.str());
      }
    }
  }

  // Fill the multiplication table: mul(a, b) = right[mul(a, parent(b)), via(b)].
  grp.table_.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    grp.table_[a * n] = static_cast<int32_t>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const int ap = grp.table_[a * n + parent[b]];
      grp.table_[a * n + b] = right[static_cast<std::size_t>(ap) * ngen + via[b]];
    }
  }
  grp.build_index();
  return grp;
}

FinMatGroup FinMatGroup::from_table(std::vector<CMat> elements, std::vector<int32_t> mul_table) {
  const std::size_t n = elements.size();
  if (n == 0 || mul_table.size() != n * n) {
    throw Error(Error::Kind::kDimension, "from_table: table size does not match element count");
  }
  FinMatGroup grp;
  grp.dim_ = static_cast<std::size_t>(elements.front().rows());
  grp.elements_ = std::move(elements);
  grp.table_ = std::move(mul_table);
  if (cxla::max_diff(grp.elements_.front(), CMat::Identity(grp.dim_, grp.dim_)) > 0) {
    throw Error(Error::Kind::kDomain, "from_table: element 0 must be the identity");
  }
  grp.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!grp.index_.emplace(elem_key(grp.elements_[i]), static_cast<int>(i)).second) {
      throw Error(Error::Kind::kClosure, "from_table: duplicate element");
    }
  }
  grp.build_index();
  return grp;
}

void FinMatGroup::build_index() {
  const std::size_t n = order();
  // Latin-square check and inverse table in one pass.
  std::vector<char> seen(n);
  inv_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const int32_t v = table_[a * n + b];
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
        throw Error(Error::Kind::kClosure, "multiplication table row is not a permutation");
      }
      seen[v] = 1;
      if (v == 0) inv_[a] = static_cast<int32_t>(b);
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      const int32_t v = table_[a * n + b];
      if (seen[v]) throw Error(Error::Kind::kClosure, "multiplication table column is not a permutation");
      seen[v] = 1;
    }
  }
}

void FinMatGroup::check_index(std::span<const int> sub) const {
  for (int s : sub) {
    if (s < 0 || static_cast<std::size_t>(s) >= order()) {
      throw Error(Error::Kind::kDomain, "element index out of range: " + std::to_string(s));
    }
  }
}

int FinMatGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FinMatGroup::find(const CMat& m) const {
  if (static_cast<std::size_t>(m.rows()) != dim_ || m.rows() != m.cols()) return -1;
  auto it = index_.find(elem_key(m));
  return it == index_.end() ? -1 : it->second;
}

IndexList FinMatGroup::all() const {
  IndexList out(order());
  for (std::size_t i = 0; i < order(); ++i) out[i] = static_cast<int>(i);
  return out;
}

IndexList FinMatGroup::center() const {
  const IndexList everything = all();
  return centralizer(everything);
}

IndexList FinMatGroup::centralizer(std::span<const int> sub) const {
  check_index(sub);
  IndexList out;
  for (int x = 0; x < static_cast<int>(order()); ++x) {
    bool commutes = true;
    for (int s : sub) {
      if (mul(x, s) != mul(s, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(x);
  }
  return out;
}

IndexList FinMatGroup::normalizer(std::span<const int> sub) const {
  check_index(sub);
  std::vector<char> in(order());
  for (int s : sub) in[s] = 1;
  IndexList out;
  for (int x = 0; x < static_cast<int>(order()); ++x) {
    bool ok = true;
    for (int s : sub) {
      if (!in[conj(x, s)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

IndexList FinMatGroup::subgroup_from(std::span<const int> gens) const {
  check_index(gens);
  std::vector<char> in(order());
  IndexList out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int g : gens) {
      const int y = mul(out[i], g);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FinMatGroup::is_closed(std::span<const int> sub) const {
  check_index(sub);
  if (sub.empty()) return false;
  std::vector<char> in(order());
  for (int s : sub) in[s] = 1;
  if (!in[0]) return false;
  for (int a : sub)
    for (int b : sub)
      if (!in[mul(a, b)]) return false;
  return true;
}

bool FinMatGroup::is_normal(std::span<const int> sub) const {
  if (!is_closed(sub)) throw Error(Error::Kind::kDomain, "is_normal: subset is not a subgroup");
  std::vector<char> in(order());
  for (int s : sub) in[s] = 1;
  for (int x = 0; x < static_cast<int>(order()); ++x)
    for (int s : sub)
      if (!in[conj(x, s)]) return false;
  return true;
}

bool FinMatGroup::is_abelian(std::span<const int> sub) const {
  check_index(sub);
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = i + 1; j < sub.size(); ++j)
      if (mul(sub[i], sub[j]) != mul(sub[j], sub[i])) return false;
  return true;
}

std::vector<IndexList> FinMatGroup::conjugacy_classes() const {
  const IndexList everything = all();
  return conjugacy_classes(everything);
}

std::vector<IndexList> FinMatGroup::conjugacy_classes(std::span<const int> sub) const {
  check_index(sub);
  std::vector<char> done(order());
  std::vector<IndexList> classes;
  for (int s : sub) {
    if (done[s]) continue;
    std::set<int> cls;
    for (int x : sub) cls.insert(conj(x, s));
    for (int c : cls) done[c] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<IndexList> FinMatGroup::left_cosets(std::span<const int> sub) const {
  check_index(sub);
  std::vector<char> done(order());
  std::vector<IndexList> cosets;
  for (int g = 0; g < static_cast<int>(order()); ++g) {
    if (done[g]) continue;
    IndexList c;
    for (int s : sub) c.push_back(mul(g, s));
    std::sort(c.begin(), c.end());
    for (int x : c) done[x] = 1;
    cosets.push_back(std::move(c));
  }
  return cosets;
}

GroupFingerprint FinMatGroup::fingerprint() const {
  const IndexList everything = all();
  return fingerprint(everything);
}

GroupFingerprint FinMatGroup::fingerprint(std::span<const int> sub) const {
  GroupFingerprint fp;
  fp.order = sub.size();
  for (int s : sub) ++fp.element_orders[element_order(s)];
  for (const IndexList& c : conjugacy_classes(sub)) fp.class_sizes.push_back(static_cast<int>(c.size()));
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  for (int s : sub) {
    bool central = true;
    for (int t : sub) {
      if (mul(s, t) != mul(t, s)) {
        central = false;
        break;
      }
    }
    if (central) ++fp.center_order;
  }
  fp.abelian = fp.center_order == fp.order;
  return fp;
}

std::vector<IndexList> FinMatGroup::normal_subgroups(std::size_t target, int max_gens) const {
  std::set<IndexList> layer;
  for (int g = 0; g < static_cast<int>(order()); ++g) {
    const int gens[1] = {g};
    IndexList h = subgroup_from(gens);
    if (h.size() <= target) layer.insert(std::move(h));
  }
  std::set<IndexList> seen = layer;
  for (int level = 1; level < max_gens; ++level) {
    std::set<IndexList> next;
    for (const IndexList& h : layer) {
      if (h.size() >= target) continue;
      std::vector<char> in(order());
      for (int x : h) in[x] = 1;
      for (int g = 0; g < static_cast<int>(order()); ++g) {
        if (in[g]) continue;
        IndexList gens = h;
        gens.push_back(g);
        IndexList k = subgroup_from(gens);
        if (k.size() <= target && !seen.count(k)) {
          seen.insert(k);
          next.insert(std::move(k));
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<IndexList> out;
  for (const IndexList& h : seen)
    if (h.size() == target && is_normal(h)) out.push_back(h);
  return out;
}

FinMatGroup FinMatGroup::materialize(std::span<const int> sub) const {
  if (!is_closed(sub)) throw Error(Error::Kind::kDomain, "materialize: subset is not a subgroup");
  IndexList sorted(sub.begin(), sub.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  std::vector<CMat> elems;
  for (int s : sorted) elems.push_back(elements_[s]);
  std::vector<int32_t> table(sorted.size() * sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j)
      table[i * sorted.size() + j] = pos[mul(sorted[i], sorted[j])];
  return from_table(std::move(elems), std::move(table));
}

}  // namespace qeccf
