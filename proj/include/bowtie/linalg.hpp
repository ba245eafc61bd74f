#pragma once

// Dense complex linear algebra kernel: numerical rank, kernels, commutant
// splitting of semisimple actions, and graded intertwiner spaces. Everything
// here is pure and deterministic for a fixed seed.

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "report.hpp"

namespace bowtie {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

inline constexpr int kMaxMatrixSide = 4096;
inline constexpr double kDefaultTol = 1e-8;

namespace detail {

inline void check_matrix_size(const Matrix& m) {
  if (m.rows() > kMaxMatrixSide || m.cols() > kMaxMatrixSide)
    throw Error(Errc::size, "matrix side exceeds " + std::to_string(kMaxMatrixSide));
}

template <typename Mat>
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Kernel of a stacked constraint matrix, with an absolute scale floor on the
// singular-value threshold. A pure relative threshold misjudges matrices that
// are entirely numerical noise, so callers pass the magnitude of the data the
// constraints were built from.
inline Matrix kernel_with_scale(const Matrix& k, double tol, double scale) {
  const Eigen::Index cols = k.cols();
  if (k.rows() == 0 || cols == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(k, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thr = tol * std::max(scale, sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return svd.matrixV().rightCols(cols - r);
}

}  // namespace detail

/// Number of singular values exceeding tol times the largest one (0 for the
/// zero matrix).
inline int rank(const Matrix& m, double tol = kDefaultTol) {
  if (tol <= 0) throw Error(Errc::domain, "rank: tolerance must be positive");
  detail::check_matrix_size(m);
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double thr = tol * sv(0);
  int r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return r;
}

/// Orthonormal basis of the numerical kernel, one column per kernel dimension.
inline Matrix nullspace(const Matrix& m, double tol = kDefaultTol) {
  if (tol <= 0) throw Error(Errc::domain, "nullspace: tolerance must be positive");
  detail::check_matrix_size(m);
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0 || cols == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thr = (sv.size() > 0 && sv(0) > 0.0) ? tol * sv(0) : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return svd.matrixV().rightCols(cols - r);
}

/// One invariant block of a split action: an orthonormal basis whose columns
/// span the block.
struct BlockSplit {
  struct Block {
    int dim = 0;
    Matrix basis;  // ambient_dim x dim, orthonormal columns
  };
  std::vector<Block> blocks;
};

namespace detail {

// Orthonormal basis of {X : X A_i = A_i X for all i}, returned as matrices.
// Solved through the normal equations of the stacked Sylvester system; the
// Gram matrix is assembled from Kronecker identities so no large product is
// ever formed. Real action lists (the usual case at the top level, where the
// matrices are permutations) take a real-symmetric eigensolve.
template <typename Scalar>
inline std::vector<Matrix> commutant_basis_impl(
    const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& action,
    Eigen::Index n, double tol, double scale) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat id = Mat::Identity(n, n);
  Mat gram = Mat::Zero(n * n, n * n);
  for (const Mat& a : action) {
    const Mat ac = a.conjugate();
    const Mat at = a.transpose();
    const Mat ah = a.adjoint();
    const Mat acat = ac * at;
    const Mat aha = ah * a;
    gram += kron(acat, id);
    gram += kron(id, aha);
    gram -= kron(ac, a);
    gram -= kron(at, ah);
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram);
  // Eigenvalues are squared singular values, so the relative tolerance is
  // squared too; the 1e-11 floor keeps the threshold above eigensolver noise.
  const double lambda_max = std::max(std::real(eig.eigenvalues()(n * n - 1)), 0.0);
  const double thr = std::max(tol * tol, 1e-11) * std::max(scale * scale, lambda_max);
  std::vector<Matrix> basis;
  for (Eigen::Index i = 0; i < n * n; ++i) {
    if (eig.eigenvalues()(i) > thr) break;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v = eig.eigenvectors().col(i);
    basis.push_back(
        Eigen::Map<const Mat>(v.data(), n, n).template cast<Complex>());
  }
  return basis;
}

inline std::vector<Matrix> commutant_basis(const std::vector<Matrix>& action, double tol) {
  const Eigen::Index n = action.empty() ? 0 : action.front().rows();
  if (n == 0) return {};
  double scale = 1.0;
  bool real = true;
  for (const Matrix& a : action) {
    scale = std::max(scale, a.norm());
    real = real && a.imag().cwiseAbs().maxCoeff() == 0.0;
  }
  if (real) {
    std::vector<Eigen::MatrixXd> re;
    re.reserve(action.size());
    for (const Matrix& a : action) re.push_back(a.real());
    return commutant_basis_impl<double>(re, n, tol, scale);
  }
  return commutant_basis_impl<Complex>(action, n, tol, scale);
}

}  // namespace detail

/// Splits the ambient space into blocks that are invariant under every matrix
/// in `action` and irreducible on restriction. The commutant is solved by
/// linear equations, a pseudo-random Hermitian commutant element is drawn from
/// `seed`, and the space is cut along its eigenspaces, recursing until the
/// endomorphism algebra of each block is one-dimensional.
inline BlockSplit split_commutant(const std::vector<Matrix>& action, std::uint64_t seed,
                                  double tol = kDefaultTol) {
  if (action.empty()) throw Error(Errc::domain, "split_commutant: empty action list");
  const Eigen::Index n = action.front().rows();
  for (const Matrix& a : action) {
    detail::check_matrix_size(a);
    if (a.rows() != n || a.cols() != n)
      throw Error(Errc::domain, "split_commutant: matrices must be square of equal size");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  int rounds = 0;
  BlockSplit out;

  auto recurse = [&](auto&& self, const Matrix& basis) -> void {
    const Eigen::Index k = basis.cols();
    std::vector<Matrix> restricted;
    restricted.reserve(action.size());
    for (const Matrix& a : action) restricted.push_back(basis.adjoint() * a * basis);
    std::vector<Matrix> comm = detail::commutant_basis(restricted, tol);
    if (comm.empty())
      throw Error(Errc::splitting, "split_commutant: commutant lost the identity (tolerance failure)");
    if (comm.size() == 1) {
      out.blocks.push_back({static_cast<int>(k), basis});
      return;
    }
    while (true) {
      if (++rounds > 32)
        throw Error(Errc::splitting, "split_commutant: no convergence after 32 rounds");
      Matrix h = Matrix::Zero(k, k);
      for (const Matrix& c : comm) {
        const Complex z(gauss(rng), gauss(rng));
        h += z * c + std::conj(z) * c.adjoint();
      }
      Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
      const auto& ev = eig.eigenvalues();
      const double spread = ev(k - 1) - ev(0);
      if (spread < 1e-10) continue;
      const double gap = 1e-6 * spread;
      std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
      Eigen::Index start = 0;
      for (Eigen::Index i = 1; i < k; ++i) {
        if (ev(i) - ev(i - 1) > gap) {
          clusters.emplace_back(start, i);
          start = i;
        }
      }
      clusters.emplace_back(start, k);
      if (clusters.size() < 2) continue;
      for (auto [lo, hi] : clusters)
        self(self, Matrix(basis * eig.eigenvectors().middleCols(lo, hi - lo)));
      return;
    }
  };
  recurse(recurse, Matrix::Identity(n, n));

  // Each block must really be invariant; a drift here signals tolerance failure.
  for (const auto& blk : out.blocks) {
    for (const Matrix& a : action) {
      const Matrix on_block = blk.basis.adjoint() * a * blk.basis;
      const double residual = (a * blk.basis - blk.basis * on_block).norm();
      if (residual > 1e-6 * std::max(1.0, a.norm()))
        throw Error(Errc::splitting, "split_commutant: block not invariant (residual " +
                                         std::to_string(residual) + ")");
    }
  }
  return out;
}

namespace detail {

// Splits an invariant-block basis into tag-homogeneous orthonormal columns,
// sorted by tag. The block must be invariant under the tag projectors.
inline void degree_adapt(const Matrix& block, const std::vector<int>& slot_tag,
                         std::vector<int>& out_tag, Matrix& out_basis) {
  const Eigen::Index n = block.rows(), k = block.cols();
  std::vector<int> tags(slot_tag);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  std::vector<Vector> cols;
  out_tag.clear();
  for (int dd : tags) {
    Matrix proj = Matrix::Zero(n, k);
    for (Eigen::Index i = 0; i < n; ++i)
      if (slot_tag[i] == dd) proj.row(i) = block.row(i);
    Eigen::JacobiSVD<Matrix> svd(proj, Eigen::ComputeThinU);
    for (Eigen::Index c = 0; c < svd.singularValues().size(); ++c)
      if (svd.singularValues()(c) > 1e-8) {
        cols.push_back(svd.matrixU().col(c));
        out_tag.push_back(dd);
      }
  }
  if (static_cast<Eigen::Index>(cols.size()) != k)
    throw Error(Errc::splitting, "block is not homogeneous for the tag projectors");
  out_basis.resize(n, k);
  for (Eigen::Index c = 0; c < k; ++c) out_basis.col(c) = cols[c];
}

}  // namespace detail

/// Dimension of the space of tag-preserving linear maps F with
/// F * on_source[i] = on_target[i] * F for every i. Tags encode a grading:
/// entry (j, i) of F may be nonzero only when target_tag[j] == source_tag[i].
inline int intertwiner_dimension(const std::vector<Matrix>& on_source,
                                 const std::vector<Matrix>& on_target,
                                 const std::vector<int>& source_tag,
                                 const std::vector<int>& target_tag,
                                 double tol = kDefaultTol) {
  const Eigen::Index ns = static_cast<Eigen::Index>(source_tag.size());
  const Eigen::Index nt = static_cast<Eigen::Index>(target_tag.size());
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pattern;
  for (Eigen::Index j = 0; j < nt; ++j)
    for (Eigen::Index i = 0; i < ns; ++i)
      if (target_tag[j] == source_tag[i]) pattern.emplace_back(j, i);
  if (pattern.empty()) return 0;
  if (on_source.empty()) return static_cast<int>(pattern.size());

  std::vector<Eigen::Index> slot(nt * ns, -1);
  for (std::size_t p = 0; p < pattern.size(); ++p)
    slot[pattern[p].first * ns + pattern[p].second] = static_cast<Eigen::Index>(p);

  double scale = 1.0;
  for (const Matrix& a : on_source) scale = std::max(scale, a.cwiseAbs().maxCoeff());
  for (const Matrix& a : on_target) scale = std::max(scale, a.cwiseAbs().maxCoeff());

  Matrix k(static_cast<Eigen::Index>(on_source.size()) * nt * ns,
           static_cast<Eigen::Index>(pattern.size()));
  k.setZero();
  Eigen::Index row = 0;
  for (std::size_t g = 0; g < on_source.size(); ++g) {
    const Matrix& s = on_source[g];
    const Matrix& t = on_target[g];
    for (Eigen::Index bj = 0; bj < nt; ++bj) {
      for (Eigen::Index bi = 0; bi < ns; ++bi) {
        // (T F - F S)[bj, bi] = sum_j T[bj,j] F[j,bi] - sum_i F[bj,i] S[i,bi]
        for (Eigen::Index j = 0; j < nt; ++j)
          if (Eigen::Index p = slot[j * ns + bi]; p >= 0) k(row, p) += t(bj, j);
        for (Eigen::Index i = 0; i < ns; ++i)
          if (Eigen::Index p = slot[bj * ns + i]; p >= 0) k(row, p) -= s(i, bi);
        ++row;
      }
    }
  }
  const Matrix ker = detail::kernel_with_scale(k, tol, scale);
  return static_cast<int>(ker.cols());
}

}  // namespace bowtie
