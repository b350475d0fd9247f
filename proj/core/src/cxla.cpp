#include "qeccf/cxla.hpp"

#include <cmath>
#include <sstream>

#include "qeccf/error.hpp"

namespace qeccf::cxla {

namespace {

void require_square(const CMat& a, const char* what) {
  if (a.rows() != a.cols()) {
    std::ostringstream os;
    os << what << ": expected square matrix, got " << a.rows() << "x" << a.cols();
    throw Error(Error::Kind::kDimension, os.str());
  }
}

}  // namespace

void validate(const Tol& tol) {
  if (!(tol.eq_tol >= 0 && tol.eq_tol < 1e-3 && tol.rank_tol >= 0 && tol.rank_tol < 1e-3)) {
    throw Error(Error::Kind::kDomain, "tolerances must lie in [0, 1e-3)");
  }
}

CMat identity(std::size_t n) { return CMat::Identity(n, n); }

CMat zeros(std::size_t rows, std::size_t cols) { return CMat::Zero(rows, cols); }

CMat from_rows(std::size_t rows, std::size_t cols, const std::vector<cd>& entries) {
  if (entries.size() != rows * cols) {
    throw Error(Error::Kind::kDimension, "from_rows: entry count does not match shape");
  }
  CMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entries[r * cols + c];
  return m;
}

CMat matmul(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream os;
    os << "matmul: dimension mismatch " << a.rows() << "x" << a.cols() << " * " << b.rows()
       << "x" << b.cols();
    throw Error(Error::Kind::kDimension, os.str());
  }
  return a * b;
}

CMat adjoint(const CMat& a) { return a.adjoint(); }

cd trace(const CMat& a) {
  require_square(a, "trace");
  return a.trace();
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const CMat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double max_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Error::Kind::kDimension, "max_diff: shape mismatch");
  }
  return max_abs(a - b);
}

bool approx_equal(const CMat& a, const CMat& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs(a - b) <= tol;
}

bool all_finite(const CMat& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const cd z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_square(const CMat& a) { return a.rows() == a.cols(); }

bool is_hermitian(const CMat& a, const Tol& tol) {
  return is_square(a) && max_abs(a - a.adjoint()) <= tol.eq_tol;
}

bool is_unitary(const CMat& a, const Tol& tol) {
  if (!is_square(a)) return false;
  return max_abs(a * a.adjoint() - CMat::Identity(a.rows(), a.cols())) <= tol.eq_tol;
}

bool is_idempotent(const CMat& a, const Tol& tol) {
  return is_square(a) && max_abs(a * a - a) <= tol.eq_tol;
}

bool is_projector(const CMat& p, const Tol& tol) {
  require_square(p, "is_projector");
  return max_abs(p * p - p) <= tol.eq_tol && max_abs(p - p.adjoint()) <= tol.eq_tol;
}

bool near_integer(cd z, double tol, long* out) {
  const double r = std::round(z.real());
  if (std::abs(z.real() - r) > tol || std::abs(z.imag()) > tol) return false;
  if (out) *out = static_cast<long>(r);
  return true;
}

HermitianEig eig_hermitian(const CMat& h, const Tol& tol) {
  require_square(h, "eig_hermitian");
  if (!is_hermitian(h, tol)) {
    throw Error(Error::Kind::kNotHermitian, "eig_hermitian: input is not Hermitian");
  }
  // Symmetrize so the solver sees an exactly Hermitian matrix.
  const CMat sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(Error::Kind::kDecomposition, "eig_hermitian: solver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMat orthonormal_image_basis(const CMat& p, const Tol& tol) {
  if (!is_projector(p, tol)) {
    throw Error(Error::Kind::kNotProjector, "orthonormal_image_basis: input is not a projector");
  }
  long k = 0;
  if (!near_integer(p.trace(), tol.rank_tol, &k)) {
    throw Error(Error::Kind::kNotProjector,
                "orthonormal_image_basis: trace is not within rank_tol of an integer");
  }
  if (k == 0) return CMat(p.rows(), 0);
  const HermitianEig eig = eig_hermitian(p, tol);
  // Eigenvalues ascend, so the image is spanned by the last k columns.
  return eig.vectors.rightCols(k);
}

std::size_t rank(const CMat& a, const Tol& tol) {
  if (a.size() == 0) return 0;
  const CMat g = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<CMat> solver(0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (solver.eigenvalues()(i) > tol.rank_tol * scale) ++r;
  return r;
}

CMat random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cd(normal(rng), normal(rng));
  return 0.5 * (m + m.adjoint());
}

CMat random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cd(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMat> qr(m);
  CMat q = qr.householderQ();
  // Fix column phases against the R diagonal so the distribution is Haar.
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < n; ++j) {
    const cd d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace qeccf::cxla
