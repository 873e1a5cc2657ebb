#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "brauer/common.hpp"

namespace brauer {

/// Field used for rank computations.  Rationals are authoritative; the prime
/// fields exist to cross-check that nothing depends on the characteristic.
enum class Field { rational, gf2, gf3 };

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

/// Dense matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Rank over Q by fraction-free (Bareiss) elimination, or over GF(p).
  /// For GF(p) every denominator must be invertible mod p.
  std::size_t rank(Field f = Field::rational) const;

 private:
  std::size_t rank_rational() const;
  std::size_t rank_mod(unsigned p) const;

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace brauer
