#include "brauer/linalg.hpp"

#include <string>
#include <utility>

namespace brauer {

std::string_view field_name(Field f) {
  switch (f) {
    case Field::rational: return "Q";
    case Field::gf2: return "GF2";
    case Field::gf3: return "GF3";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  if (name == "Q" || name == "rational") return Field::rational;
  if (name == "GF2" || name == "2") return Field::gf2;
  if (name == "GF3" || name == "3") return Field::gf3;
  throw InputError("unknown field '" + std::string(name) + "'");
}

std::size_t ExactMatrix::rank(Field f) const {
  switch (f) {
    case Field::rational: return rank_rational();
    case Field::gf2: return rank_mod(2);
    case Field::gf3: return rank_mod(3);
  }
  return 0;
}

std::size_t ExactMatrix::rank_rational() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row; scaling rows does not change the rank.
  std::vector<BigInt> m(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      m[r * cols_ + c] = x.get_num() * (l / x.get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return m[r * cols_ + c]; };

  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(rank, c));
    const BigInt pivot = at(rank, col);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      const BigInt factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) {
        BigInt v = pivot * at(r, c) - factor * at(rank, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(r, c) = std::move(v);
      }
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t ExactMatrix::rank_mod(unsigned p) const {
  std::vector<unsigned> m(rows_ * cols_);
  const BigInt bp = p;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Rational& x = data_[i];
    BigInt den = x.get_den();
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), bp.get_mpz_t()) == 0)
      throw InputError("denominator not invertible modulo " + std::to_string(p));
    BigInt v = x.get_num() * inv;
    mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    m[i] = static_cast<unsigned>(v.get_ui());
  }
  auto at = [&](std::size_t r, std::size_t c) -> unsigned& { return m[r * cols_ + c]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(rank, c));
    // In GF(2) and GF(3) every nonzero element is its own inverse.
    const unsigned inv = at(rank, col);
    for (std::size_t c = col; c < cols_; ++c) at(rank, c) = (at(rank, c) * inv) % p;
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      const unsigned factor = at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols_; ++c)
        at(r, c) = (at(r, c) + (p - factor) * at(rank, c)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace brauer
