#include "brauer/common.hpp"

namespace brauer {

BigInt binomial(long n, long k) {
  BigInt r = 0;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace brauer
