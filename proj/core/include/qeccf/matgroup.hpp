#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qeccf/cxla.hpp"

namespace qeccf {

// Subgroups and other element sets are sorted index lists into a parent group.
using IndexList = std::vector<int>;

// Canonical hash key of a matrix: entries rounded to a 1e-6 grid, -0.0
// normalized to 0.0.
std::string elem_key(const CMat& m);

// Abstract fingerprint used for sanity checks against published group ids.
// It is not an isomorphism certificate.
struct GroupFingerprint {
  std::size_t order = 0;
  std::map<int, int> element_orders;  // element order -> count
  std::vector<int> class_sizes;       // sorted ascending
  std::size_t center_order = 0;
  bool abelian = false;

  bool operator==(const GroupFingerprint&) const = default;
  std::string to_string() const;
};

// A finite group of unitary matrices. Element 0 is the identity. After
// construction every structural query runs on the integer multiplication
// table; floating-point comparison only happens while closing the group.
class FinMatGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 8192;

  // Multiplicative closure of `generators`. Throws Error(kClosure) when the
  // closure exceeds `max_order` or an element key nearly collides, and
  // Error(kDomain) for non-unitary or mismatched generators.
  static FinMatGroup close(std::span<const CMat> generators,
                           std::size_t max_order = kDefaultMaxOrder, const Tol& tol = {});

  // Builds a group from elements plus a precomputed table (row a, column b
  // holds the index of a*b). Used by constructors with symbolic arithmetic.
  // Validates the Latin-square property and identity placement.
  static FinMatGroup from_table(std::vector<CMat> elements, std::vector<int32_t> mul_table);

  std::size_t order() const { return elements_.size(); }
  std::size_t dim() const { return dim_; }
  const CMat& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  const std::vector<CMat>& elements() const { return elements_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conj(int x, int s) const { return mul(mul(x, s), inv(x)); }  // x s x^-1
  int element_order(int a) const;

  // Index of a matrix in the group, or -1.
  int find(const CMat& m) const;

  // --- structural queries on index lists ---
  IndexList all() const;
  IndexList center() const;
  IndexList centralizer(std::span<const int> sub) const;
  IndexList normalizer(std::span<const int> sub) const;
  IndexList subgroup_from(std::span<const int> gens) const;
  bool is_closed(std::span<const int> sub) const;
  bool is_normal(std::span<const int> sub) const;
  bool is_abelian(std::span<const int> sub) const;
  std::vector<IndexList> conjugacy_classes() const;
  std::vector<IndexList> conjugacy_classes(std::span<const int> sub) const;
  std::vector<IndexList> left_cosets(std::span<const int> sub) const;

  GroupFingerprint fingerprint() const;
  GroupFingerprint fingerprint(std::span<const int> sub) const;

  // Normal subgroups of the given order generated by at most `max_gens`
  // elements, in a deterministic order (lexicographic on sorted index lists).
  std::vector<IndexList> normal_subgroups(std::size_t order, int max_gens = 3) const;

  // Standalone group on a subgroup's matrices (elements renumbered).
  FinMatGroup materialize(std::span<const int> sub) const;

 private:
  FinMatGroup() = default;
  void build_index();
  void check_index(std::span<const int> sub) const;

  std::size_t dim_ = 0;
  std::vector<CMat> elements_;
  std::vector<int32_t> table_;
  std::vector<int32_t> inv_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace qeccf
