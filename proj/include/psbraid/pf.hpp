#pragma once

#include "psbraid/types.hpp"

#include <cmath>

namespace psbraid {

// Certified bracket around the Perron-Frobenius eigenvalue of a nonnegative
// irreducible matrix. The endpoints are Collatz-Wielandt quotients of the
// final iterate, so lower <= pf <= upper holds by construction and both
// endpoints always lie inside [min row sum, max row sum].
struct PFBracket {
  long double lower = 0.0L;
  long double upper = 0.0L;
  long iterations = 0;
  double tolerance = 0.0;
  // Final positive iterate, normalized to unit max-norm.
  VectorX<long double> iterate;

  long double midpoint() const { return (lower + upper) / 2.0L; }
  long double width() const { return upper - lower; }
};

// Spectral data of the product of opposite multi-twists in the 2x2
// representation: trace 2+mu, spectral radius lambda, entropy log(lambda).
struct DilatationEstimate {
  long double mu = 0.0L;
  long double trace = 0.0L;
  long double lambda = 0.0L;
  long double entropy = 0.0L;
};

namespace detail {

template <typename Scalar>
struct ScalarOps {
  static Scalar sqrt(Scalar x) {
    using std::sqrt;
    return sqrt(x);
  }
};

}  // namespace detail

// Larger root of x^2 - trace*x + 1. The conjugate root is 1/lambda, so
// lambda + 1/lambda == trace identically.
template <typename Scalar>
Scalar spectral_radius_from_trace(Scalar trace) {
  const Scalar disc = trace * trace - Scalar(4);
  return (trace + detail::ScalarOps<Scalar>::sqrt(disc)) / Scalar(2);
}

// Throws std::invalid_argument unless every entry is >= 0 and no row or
// column is identically zero (every curve must meet the opposite multicurve).
void validate_intersection_matrix(const IntersectionMatrix& n);

// Exact integer Gram matrix N*N^T of a valid intersection matrix.
GramMatrix gram(const IntersectionMatrix& n);

WideInt max_row_sum(const GramMatrix& m);
WideInt min_row_sum(const GramMatrix& m);

// True when the undirected support graph of the square matrix is connected
// (equivalently, the nonnegative matrix is irreducible or 1x1).
bool is_irreducible(const GramMatrix& m);

// Power iteration with Collatz-Wielandt quotient brackets. Starts from the
// all-ones vector, keeps the running max of min-quotients and min of
// max-quotients (both monotone in exact arithmetic), and refines in extended
// precision once the double phase reaches its quantization floor. Throws
// std::invalid_argument for non-square, negative or reducible input and
// ConvergenceError if the bracket has not reached `tolerance` width after
// `max_iterations` steps.
PFBracket pf_eigenvalue(const GramMatrix& m, double tolerance = 1e-10,
                        long max_iterations = 1000000);

// Dilatation of the twist product whose representation has trace 2+mu.
// Requires mu > 0; lambda > 1 and entropy = log(lambda) <= log(2+mu).
DilatationEstimate dilatation_from_mu(long double mu);

// Two single filling curves meeting i times give mu = i^2.
DilatationEstimate dilatation_of_filling_pair(std::int64_t intersections);

}  // namespace psbraid
