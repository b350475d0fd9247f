#include <gtest/gtest.h>

#include <qeccf/error.hpp>
#include <qeccf/fourier.hpp>
#include <qeccf/scenario.hpp>

#include <random>

#include "oracles.hpp"

using namespace qeccf;

namespace {

constexpr int kCases = 200;

// Three decompositions shared by the property tests: the five-qubit
// centralizer (order 128, sixteen 2-dim constituents), D16 in the d = 4
// group, and the order-32 subgroup of the d = 8 group.
const std::vector<Prepared>& fixtures() {
  static const std::vector<Prepared> all = [] {
    std::vector<Prepared> v;
    Scenario a;
    a.group = "pauli:5";
    a.subgroup = "centralizer";
    a.stabilizer = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    v.push_back(prepare(a));
    Scenario b;
    b.group = "file:" + oracle::data("bases/d4_c2xd8.basis");
    b.subgroup = "generated";
    b.generators = {"b1", "b2"};
    v.push_back(prepare(b));
    Scenario c;
    c.group = "file:" + oracle::data("bases/d8_translates.basis");
    c.subgroup = "generated";
    c.generators = {"b1", "b3", "b22", "b40"};
    v.push_back(prepare(c));
    return v;
  }();
  return all;
}

CMat random_idempotent(int n, std::mt19937_64& rng) {
  const CMat u = cxla::random_unitary(static_cast<std::size_t>(n), rng);
  CMat d = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = static_cast<double>(rng() % 2);
  return u * d * u.adjoint();
}

TransformAssignment random_assignment(const ConstituentSet& cs, std::mt19937_64& rng) {
  TransformAssignment a;
  for (std::size_t i = 0; i < cs.constituents.size(); ++i) {
    if (rng() % 2) continue;
    a.values[static_cast<int>(i)] = random_idempotent(cs.constituents[i].dim, rng);
  }
  if (a.values.empty()) a.values[0] = CMat::Identity(cs.constituents[0].dim, cs.constituents[0].dim);
  return a;
}

GroupAlgebraElem random_element(const ConstituentSet& cs, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  GroupAlgebraElem t{cs.sub, {}};
  for (std::size_t k = 0; k < cs.sub.size(); ++k) t.coeffs.emplace_back(nd(rng), nd(rng));
  return t;
}

}  // namespace

TEST(FourierProperty, IdempotentHermitianGivesOrthogonalProjector) {
  std::mt19937_64 rng(101);
  for (int c = 0; c < kCases; ++c) {
    const auto& p = fixtures()[static_cast<std::size_t>(c % 3)];
    const auto a = random_assignment(p.cs, rng);
    const Inversion inv = invert(a, p.cs);
    EXPECT_TRUE(cxla::is_projector(inv.projector, Tol{1e-9, 1e-8})) << "case " << c;
  }
}

TEST(FourierProperty, TraceAccounting) {
  std::mt19937_64 rng(202);
  for (int c = 0; c < kCases; ++c) {
    const auto& p = fixtures()[static_cast<std::size_t>(c % 3)];
    const auto a = random_assignment(p.cs, rng);
    cd expected = 0;
    for (const auto& [i, m] : a.values)
      expected += static_cast<double>(p.cs.constituents[static_cast<std::size_t>(i)].multiplicity) * m.trace();
    EXPECT_LT(std::abs(cxla::trace(invert(a, p.cs).projector) - expected), 1e-7) << "case " << c;
  }
}

TEST(FourierProperty, ForwardInverseRoundTrip) {
  std::mt19937_64 rng(303);
  for (int c = 0; c < kCases; ++c) {
    const auto& p = fixtures()[static_cast<std::size_t>(c % 3)];
    const auto a = random_assignment(p.cs, rng);
    const auto comps = forward_transform(inverse_coefficients(a, p.cs), p.cs);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto it = a.values.find(static_cast<int>(i));
      const int n = p.cs.constituents[i].dim;
      const CMat want = it == a.values.end() ? CMat::Zero(n, n) : it->second;
      EXPECT_LT(cxla::max_diff(comps[i], want), 1e-7);
    }
  }
}

TEST(FourierProperty, ConvolutionIsPointwiseProduct) {
  std::mt19937_64 rng(404);
  for (int c = 0; c < kCases; ++c) {
    const auto& p = fixtures()[static_cast<std::size_t>(c % 3)];
    const auto a = random_element(p.cs, rng);
    const auto b = random_element(p.cs, rng);
    const auto ab = convolve(a, b, *p.cs.group);
    const auto fa = forward_transform(a, p.cs);
    const auto fb = forward_transform(b, p.cs);
    const auto fab = forward_transform(ab, p.cs);
    for (std::size_t i = 0; i < fab.size(); ++i) {
      const double scale = 1.0 + cxla::max_abs(fa[i]) * cxla::max_abs(fb[i]);
      EXPECT_LT(cxla::max_diff(fab[i], fa[i] * fb[i]) / scale, 1e-7) << "case " << c;
    }
    const CMat img = matrix_image(ab, *p.cs.group);
    EXPECT_LT(cxla::max_diff(img, matrix_image(a, *p.cs.group) * matrix_image(b, *p.cs.group)) /
                  (1.0 + cxla::max_abs(img)),
              1e-7);
  }
}

TEST(FourierProperty, ZeroIdentityAssignmentsAreIsotypicSums) {
  std::mt19937_64 rng(505);
  for (int c = 0; c < kCases; ++c) {
    const auto& p = fixtures()[static_cast<std::size_t>(c % 3)];
    TransformAssignment a;
    const auto n = static_cast<Eigen::Index>(p.cs.natural_dim());
    CMat expected = CMat::Zero(n, n);
    for (std::size_t i = 0; i < p.cs.constituents.size(); ++i) {
      if (rng() % 2) continue;
      const int d = p.cs.constituents[i].dim;
      a.values[static_cast<int>(i)] = CMat::Identity(d, d);
      expected += p.cs.constituents[i].isotypic_projector;
    }
    if (a.values.empty()) continue;
    EXPECT_LT(cxla::max_diff(invert(a, p.cs).projector, expected), 1e-7) << "case " << c;
  }
}

TEST(FourierProperty, ZeroIdentityResultsAreSeedIndependent) {
  std::mt19937_64 rng(606);
  std::vector<ConstituentSet> reseeded;
  for (const auto& p : fixtures()) reseeded.push_back(decompose_natural(p.e, p.sub, 777));
  for (int c = 0; c < kCases; ++c) {
    const std::size_t which = static_cast<std::size_t>(c % 3);
    const auto& p = fixtures()[which];
    TransformAssignment a;
    for (std::size_t i = 0; i < p.cs.constituents.size(); ++i) {
      if (rng() % 2) continue;
      const int d = p.cs.constituents[i].dim;
      a.values[static_cast<int>(i)] = CMat::Identity(d, d);
    }
    if (a.values.empty()) continue;
    EXPECT_LT(cxla::max_diff(invert(a, p.cs).projector, invert(a, reseeded[which]).projector), 1e-7);
  }
}

TEST(Fourier, SingleCharacterProjectorMatchesIsotypic) {
  for (const auto& p : fixtures())
    for (std::size_t i = 0; i < p.cs.constituents.size(); ++i)
      EXPECT_LT(cxla::max_diff(single_character_projector(p.cs, static_cast<int>(i)),
                               p.cs.constituents[i].isotypic_projector),
                1e-9);
}

TEST(Fourier, RejectsNonProjectorValues) {
  const auto& p = fixtures()[1];
  TransformAssignment a;
  a.values[0] = cxla::from_rows(2, 2, {1, 1, 0, 0});
  try {
    invert(a, p.cs);
    FAIL() << "expected kNotProjector";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), Error::Kind::kNotProjector);
  }
  TransformAssignment bad;
  bad.values[7] = CMat::Identity(2, 2);
  EXPECT_THROW(bad.validate(p.cs), Error);
}

TEST(Fourier, SupportAndAbelianAlgebra) {
  const auto& p = fixtures()[0];
  TransformAssignment a;
  a.values[0] = value_matrix("PZ+");
  const Inversion inv = invert(a, p.cs);
  EXPECT_FALSE(support(inv.t).empty());
  // identity on every constituent: only -I acts as -1 on all of them, so the
  // support is the center {I, -I}
  TransformAssignment whole;
  for (std::size_t i = 0; i < p.cs.constituents.size(); ++i) whole.values[static_cast<int>(i)] = CMat::Identity(2, 2);
  const Inversion id = invert(whole, p.cs);
  EXPECT_EQ(support(id.t), p.cs.group->center());
  EXPECT_TRUE(in_abelian_algebra(id.t, *p.cs.group));
  EXPECT_LT(cxla::max_diff(id.projector, CMat::Identity(32, 32)), 1e-9);
}
