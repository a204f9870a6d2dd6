#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace gdet {

using Int = mpz_class;

// Square row-major integer matrix.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Int> data_;
};

// Fraction-free (Bareiss) elimination with row pivoting. Exact.
Int bareiss_determinant(IntMatrix m);

}  // namespace gdet
