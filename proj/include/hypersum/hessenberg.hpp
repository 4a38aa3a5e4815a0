// Lower Hessenberg matrices and their division-free determinant.

#ifndef HYPERSUM_HESSENBERG_HPP
#define HYPERSUM_HESSENBERG_HPP

#include "hypersum/exactnum.hpp"
#include "hypersum/polyring.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hypersum {

/// Square matrix with zeros above the first superdiagonal. Indices are
/// 0-based; entries with col > row + 1 are fixed at zero and cannot be set.
template <class T> class HessenbergMatrix {
public:
  HessenbergMatrix(std::size_t order, const T &zero)
      : order_(order), zero_(zero), entries_(order * order, zero) {}

  std::size_t order() const { return order_; }
  const T &zero() const { return zero_; }

  const T &at(std::size_t row, std::size_t col) const {
    check(row, col);
    return entries_[row * order_ + col];
  }

  void set(std::size_t row, std::size_t col, T value) {
    check(row, col);
    if (col > row + 1)
      throw std::out_of_range("HessenbergMatrix: entry above the superdiagonal");
    entries_[row * order_ + col] = std::move(value);
  }

  /// Row-major entries.
  const std::vector<T> &entries() const { return entries_; }

  template <class F> auto map(F &&f) const {
    using U = decltype(f(zero_));
    HessenbergMatrix<U> out(order_, f(zero_));
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j <= std::min(i + 1, order_ - 1); ++j)
        out.set(i, j, f(at(i, j)));
    return out;
  }

private:
  void check(std::size_t row, std::size_t col) const {
    if (row >= order_ || col >= order_)
      throw std::out_of_range("HessenbergMatrix: index out of range");
  }

  std::size_t order_;
  T zero_;
  std::vector<T> entries_;
};

/// Determinant by the leading-principal-minor recurrence (1-based)
///   p_0 = 1,
///   p_k = h_kk p_{k-1} + sum_{j<k} (-1)^{k-j} h_kj (h_{j,j+1} ... h_{k-1,k}) p_{j-1}.
/// Uses only ring operations. The determinant of the empty matrix is `one`.
template <class T> T hessenberg_det(const HessenbergMatrix<T> &h, const T &one) {
  const std::size_t order = h.order();
  std::vector<T> minors;
  minors.reserve(order + 1);
  minors.push_back(one);
  for (std::size_t k = 1; k <= order; ++k) {
    T acc = h.at(k - 1, k - 1) * minors[k - 1];
    T super = one; // h_{j,j+1} ... h_{k-1,k}, grown as j decreases
    for (std::size_t j = k - 1; j >= 1; --j) {
      super = super * h.at(j - 1, j);
      const T &low = h.at(k - 1, j - 1);
      T term = low * super * minors[j - 1];
      if ((k - j) % 2 == 1)
        acc = acc - term;
      else
        acc = acc + term;
    }
    minors.push_back(std::move(acc));
  }
  return minors.back();
}

using PolyHessenberg = HessenbergMatrix<RatPoly>;

/// The order m-1 matrix H_m^(r)(N_r), entries polynomials in N_r:
/// row i (1-based) has -(i+1) N on the diagonal, r+i+1 on the superdiagonal,
/// and r C(i+1, i+1-j) B_{i+1-j} at column j < i. Requires m >= 1.
PolyHessenberg build_H(long m, long r);

/// det over polynomials in the matrix's frame; 1 for the empty matrix.
RatPoly det(const PolyHessenberg &h);

/// Entry-wise evaluation at a concrete value of N.
HessenbergMatrix<Rational> evaluate_at(const PolyHessenberg &h, const Rational &big_n);

Rational det(const HessenbergMatrix<Rational> &h);

} // namespace hypersum

#endif
