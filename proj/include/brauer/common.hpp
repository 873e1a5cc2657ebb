#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace brauer {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Vertex of a plane tree.  Ids are small integers; ordering is by value.
struct VertexId {
  int value = 0;
  auto operator<=>(const VertexId&) const = default;
};

/// Edge of a plane tree; also a vertex of the quiver and a projective label.
struct EdgeId {
  int value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

/// Malformed input or a violated precondition.  The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation contradicted a proven counting statement.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// g-vector indexed by the sorted edge order of the tree it lives on.
using GVector = std::vector<int>;

struct GVectorHash {
  std::size_t operator()(const GVector& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : g) {
      h ^= static_cast<std::size_t>(x + 0x9e37);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

/// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace brauer
