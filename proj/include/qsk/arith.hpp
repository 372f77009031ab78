#ifndef QSK_ARITH_HPP
#define QSK_ARITH_HPP

#include <cstdint>
#include <vector>

#include "qsk/error.hpp"

namespace qsk {

/* All algebra is interpreted mod p.  p = 2 enables the full engine; odd p
   enables only the arithmetic predicate layer. */
struct PrimeContext {
    int p = 2;
};

bool is_prime(long long n);

/// C(n,k) mod p by the Lucas digit rule; 0 when k < 0, n < 0 or k > n.
int binom_mod_p(long long n, long long k, int p);

/// 2-adic valuation of n > 0.
int v2(unsigned long long n);

long long mod_pow(long long base, long long exp, long long mod);

/// Multiplicative order of q mod p (q, p coprime).
long long mult_order(long long q, long long p);

/// 2-adic valuation of 3^{4j} - 1, computed with exact big-integer arithmetic.
int nu(int j);

/// Least prime q with q a primitive root mod p and p || q^{p-1} - 1.
/// search_bound caps the candidate primes tried.
long long q_of_p(long long p, long long search_bound = 100000);

/* Little-endian base-2^32 natural number, just big enough for nu(). */
class BigNat {
  public:
    explicit BigNat(std::uint32_t v) : limbs_{v} {}
    void mul_small(std::uint32_t m);
    void sub_small(std::uint32_t s); // requires value >= s
    bool is_zero() const;
    int trailing_zero_bits() const;  // requires nonzero

  private:
    std::vector<std::uint32_t> limbs_;
};

} // namespace qsk

#endif
