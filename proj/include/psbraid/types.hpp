#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace psbraid {

// 128-bit signed integer used for all exact Gram-matrix arithmetic. Entries of
// N*N^T stay far below 2^63 on the default sweep grids, but the intersection
// labels grow quartically in the subsurface genus, so the wide type keeps the
// integer path exact for any parameters a caller is realistically able to pass.
using WideInt = __int128;

std::string to_string(WideInt v);

// Dense column-major types, templated on scalar like the rest of the library.
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Nonnegative integer matrix N with N(i,j) = geometric intersection number of
// the i-th red curve with the j-th blue curve.
using IntersectionMatrix = MatrixX<std::int64_t>;

// Exact integer Gram matrix N*N^T.
using GramMatrix = MatrixX<WideInt>;

using Index = Eigen::Index;

// Thrown when power iteration hits the iteration cap before the
// Collatz-Wielandt bracket reaches the requested width. Carries the last
// certified bracket so callers can inspect how far the run got.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, long double lower, long double upper,
                   long iterations)
      : std::runtime_error(what), lower_(lower), upper_(upper), iterations_(iterations) {}

  long double lower() const { return lower_; }
  long double upper() const { return upper_; }
  long iterations() const { return iterations_; }

 private:
  long double lower_;
  long double upper_;
  long iterations_;
};

}  // namespace psbraid

namespace Eigen {

template <>
struct NumTraits<psbraid::WideInt> : GenericNumTraits<psbraid::WideInt> {
  using Real = psbraid::WideInt;
  using NonInteger = long double;
  using Nested = psbraid::WideInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 6
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 38; }
};

}  // namespace Eigen
