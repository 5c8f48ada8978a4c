#include "psbraid/pf.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace psbraid {

std::string to_string(WideInt v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v)
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

void validate_intersection_matrix(const IntersectionMatrix& n) {
  if (n.rows() == 0 || n.cols() == 0)
    throw std::invalid_argument("intersection matrix must be nonempty");
  if ((n.array() < 0).any())
    throw std::invalid_argument("intersection numbers must be nonnegative");
  for (Index i = 0; i < n.rows(); ++i)
    if ((n.row(i).array() == 0).all())
      throw std::invalid_argument("intersection matrix has an all-zero row: curve " +
                                  std::to_string(i) + " misses the opposite multicurve");
  for (Index j = 0; j < n.cols(); ++j)
    if ((n.col(j).array() == 0).all())
      throw std::invalid_argument("intersection matrix has an all-zero column: curve " +
                                  std::to_string(j) + " misses the opposite multicurve");
}

GramMatrix gram(const IntersectionMatrix& n) {
  validate_intersection_matrix(n);
  // Sum over blue curves of rank-one contributions; the intersection
  // patterns have only a few nonzero entries per column.
  GramMatrix out = GramMatrix::Zero(n.rows(), n.rows());
  std::vector<Index> support;
  for (Index b = 0; b < n.cols(); ++b) {
    support.clear();
    for (Index i = 0; i < n.rows(); ++i)
      if (n(i, b) != 0) support.push_back(i);
    for (Index i : support)
      for (Index j : support) out(i, j) += WideInt(n(i, b)) * WideInt(n(j, b));
  }
  return out;
}

WideInt max_row_sum(const GramMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("row sums need a square matrix");
  WideInt best = 0;
  for (Index i = 0; i < m.rows(); ++i) best = std::max(best, WideInt(m.row(i).sum()));
  return best;
}

WideInt min_row_sum(const GramMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("row sums need a square matrix");
  WideInt best = m.row(0).sum();
  for (Index i = 1; i < m.rows(); ++i) best = std::min(best, WideInt(m.row(i).sum()));
  return best;
}

bool is_irreducible(const GramMatrix& m) {
  const Index n = m.rows();
  if (n == 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Index> stack{0};
  seen[0] = 1;
  Index visited = 1;
  while (!stack.empty()) {
    const Index i = stack.back();
    stack.pop_back();
    for (Index j = 0; j < n; ++j) {
      if (j == i || seen[static_cast<std::size_t>(j)]) continue;
      if (m(i, j) != 0 || m(j, i) != 0) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++visited;
        stack.push_back(j);
      }
    }
  }
  return visited == n;
}

namespace {

// The configuration graphs give banded Gram matrices with a handful of
// nonzeros per row, so the iteration works on compressed rows.
template <typename Scalar>
using SparseMat = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

template <typename Scalar>
SparseMat<Scalar> to_sparse(const GramMatrix& m) {
  std::vector<Eigen::Triplet<Scalar>> triplets;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) triplets.emplace_back(i, j, static_cast<Scalar>(m(i, j)));
  SparseMat<Scalar> sparse(m.rows(), m.cols());
  sparse.setFromTriplets(triplets.begin(), triplets.end());
  return sparse;
}

// One Collatz-Wielandt sweep: w = M v, quotients w_i / v_i. The running
// bracket only ever tightens; intersecting with [min row sum, max row sum]
// is valid because those are Perron bounds in their own right.
template <typename Scalar>
bool iterate_bracket(const SparseMat<Scalar>& m, VectorX<Scalar>& v, VectorX<Scalar>& w,
                     long double& lower, long double& upper, double tolerance) {
  w.noalias() = m * v;
  Scalar lo = std::numeric_limits<Scalar>::max();
  Scalar hi = std::numeric_limits<Scalar>::lowest();
  for (Index i = 0; i < v.size(); ++i) {
    const Scalar q = w(i) / v(i);
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  lower = std::max<long double>(lower, static_cast<long double>(lo));
  upper = std::min<long double>(upper, static_cast<long double>(hi));
  v.swap(w);
  v /= v.maxCoeff();
  return upper - lower <= static_cast<long double>(tolerance);
}

}  // namespace

PFBracket pf_eigenvalue(const GramMatrix& m, double tolerance, long max_iterations) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("Perron-Frobenius estimation needs a square matrix");
  if (m.rows() == 0) throw std::invalid_argument("matrix must be nonempty");
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) throw std::invalid_argument("matrix must be nonnegative");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!is_irreducible(m))
    throw std::invalid_argument(
        "matrix is reducible (disconnected configuration graph); the bracket "
        "certification does not apply");

  const long double row_min = static_cast<long double>(min_row_sum(m));
  const long double row_max = static_cast<long double>(max_row_sum(m));

  PFBracket bracket;
  bracket.tolerance = tolerance;
  bracket.lower = row_min;
  bracket.upper = row_max;

  if (m.rows() == 1 || row_max - row_min <= static_cast<long double>(tolerance)) {
    bracket.iterate = VectorX<long double>::Ones(m.rows());
    return bracket;
  }

  const SparseMat<double> md = to_sparse<double>(m);
  VectorX<double> vd = VectorX<double>::Ones(m.rows());
  VectorX<double> wd(m.rows());
  long iterations = 0;

  // Phase 1: double precision until converged or down at the quantization
  // floor of the quotients (a few ulps of the eigenvalue).
  const long double floor_d = 16.0L * static_cast<long double>(m.rows()) *
                              std::numeric_limits<double>::epsilon() * row_max;
  bool converged = false;
  while (iterations < max_iterations) {
    ++iterations;
    if (iterate_bracket(md, vd, wd, bracket.lower, bracket.upper, tolerance)) {
      converged = true;
      break;
    }
    if (bracket.width() <= floor_d) break;
  }

  if (!converged) {
    // Phase 2: extended precision, warm-started with the converged direction.
    const SparseMat<long double> ml = to_sparse<long double>(m);
    VectorX<long double> vl = vd.cast<long double>();
    VectorX<long double> wl(m.rows());
    while (iterations < max_iterations) {
      ++iterations;
      if (iterate_bracket(ml, vl, wl, bracket.lower, bracket.upper, tolerance)) {
        converged = true;
        break;
      }
    }
    bracket.iterate = vl / vl.maxCoeff();
  } else {
    bracket.iterate = vd.cast<long double>();
  }

  bracket.iterations = iterations;
  if (!converged)
    throw ConvergenceError("Perron-Frobenius bracket did not reach width " +
                               std::to_string(tolerance) + " after " +
                               std::to_string(max_iterations) + " iterations",
                           bracket.lower, bracket.upper, iterations);
  // Once both endpoints sit on the eigenvalue, quotient rounding can cross
  // them by an ulp; restore the ordering.
  if (bracket.lower > bracket.upper) std::swap(bracket.lower, bracket.upper);
  return bracket;
}

DilatationEstimate dilatation_from_mu(long double mu) {
  if (!(mu > 0))
    throw std::domain_error("mu must be positive: the representation is not hyperbolic");
  DilatationEstimate est;
  est.mu = mu;
  est.trace = 2.0L + mu;
  est.lambda = spectral_radius_from_trace<long double>(est.trace);
  est.entropy = std::log(est.lambda);
  return est;
}

DilatationEstimate dilatation_of_filling_pair(std::int64_t intersections) {
  if (intersections < 1)
    throw std::domain_error("a filling pair of curves must intersect at least once");
  const long double i = static_cast<long double>(intersections);
  return dilatation_from_mu(i * i);
}

}  // namespace psbraid
