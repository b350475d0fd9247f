#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qeccf {

using cd = std::complex<double>;

// Dense complex matrix; every operator, projector and representation image in
// the library is one of these.
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct Tol {
  double eq_tol = 1e-9;    // entrywise max-norm threshold for equality
  double rank_tol = 1e-8;  // eigenvalue / trace-integrality cutoff
};

namespace cxla {

// Throws Error(kDomain) unless 0 <= eq_tol, rank_tol < 1e-3.
void validate(const Tol& tol);

CMat identity(std::size_t n);
CMat zeros(std::size_t rows, std::size_t cols);

// Row-major construction helper used by tests and data tables.
CMat from_rows(std::size_t rows, std::size_t cols, const std::vector<cd>& entries);

CMat matmul(const CMat& a, const CMat& b);
CMat adjoint(const CMat& a);
cd trace(const CMat& a);

// Kronecker product a ⊗ b.
CMat kron(const CMat& a, const CMat& b);

double max_abs(const CMat& a);
double max_diff(const CMat& a, const CMat& b);
bool approx_equal(const CMat& a, const CMat& b, double tol);
bool all_finite(const CMat& a);

bool is_square(const CMat& a);
bool is_hermitian(const CMat& a, const Tol& tol = {});
bool is_unitary(const CMat& a, const Tol& tol = {});
bool is_idempotent(const CMat& a, const Tol& tol = {});

// Orthogonal projector test: p² = p and p = p† within eq_tol.
bool is_projector(const CMat& p, const Tol& tol = {});

// If |z - round(z)| <= tol for real z (imaginary part within tol of 0),
// returns true and writes the integer.
bool near_integer(cd z, double tol, long* out);

struct HermitianEig {
  Eigen::VectorXd values;  // ascending
  CMat vectors;            // orthonormal columns
};

// Hermitian eigendecomposition; throws Error(kNotHermitian) otherwise.
HermitianEig eig_hermitian(const CMat& h, const Tol& tol = {});

// Orthonormal basis of image(p) for an orthogonal projector p. Column count
// is round(trace(p)); throws if the trace is not near an integer.
CMat orthonormal_image_basis(const CMat& p, const Tol& tol = {});

// Numerical rank from the Hermitian spectrum of a†a.
std::size_t rank(const CMat& a, const Tol& tol = {});

CMat random_unitary(std::size_t n, std::mt19937_64& rng);
CMat random_hermitian(std::size_t n, std::mt19937_64& rng);

}  // namespace cxla
}  // namespace qeccf
