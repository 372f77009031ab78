#include "qsk/arith.hpp"

namespace qsk {

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int binom_mod_p(long long n, long long k, int p) {
    if (p < 2 || !is_prime(p))
        throw domain_error("binom_mod_p: modulus must be prime");
    if (k < 0 || n < 0 || k > n)
        return 0;
    long long r = 1;
    while (n > 0 || k > 0) {
        long long nd = n % p, kd = k % p;
        if (kd > nd)
            return 0;
        // C(nd, kd) mod p, digits < p so direct
        long long c = 1;
        for (long long i = 0; i < kd; ++i)
            c = c * ((nd - i) % p) % p * mod_pow(i + 1, p - 2, p) % p;
        r = r * c % p;
        n /= p;
        k /= p;
    }
    return static_cast<int>(r);
}

int v2(unsigned long long n) {
    if (n == 0)
        throw domain_error("v2(0) undefined");
    int v = 0;
    while ((n & 1ULL) == 0) {
        ++v;
        n >>= 1;
    }
    return v;
}

long long mod_pow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0)
        base += mod;
    while (exp > 0) {
        if (exp & 1)
            r = (__int128)r * base % mod;
        base = (__int128)base * base % mod;
        exp >>= 1;
    }
    return r;
}

long long mult_order(long long q, long long p) {
    long long x = q % p, r = x, ord = 1;
    while (r != 1) {
        r = (__int128)r * x % p;
        if (++ord > p)
            throw domain_error("mult_order: arguments not coprime");
    }
    return ord;
}

void BigNat::mul_small(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
        std::uint64_t v = (std::uint64_t)l * m + carry;
        l = (std::uint32_t)v;
        carry = v >> 32;
    }
    if (carry)
        limbs_.push_back((std::uint32_t)carry);
}

void BigNat::sub_small(std::uint32_t s) {
    std::uint64_t borrow = s;
    for (std::size_t i = 0; i < limbs_.size() && borrow; ++i) {
        std::uint64_t v = (std::uint64_t)limbs_[i];
        if (v >= borrow) {
            limbs_[i] = (std::uint32_t)(v - borrow);
            borrow = 0;
        } else {
            limbs_[i] = (std::uint32_t)(v + (1ULL << 32) - borrow);
            borrow = 1;
        }
    }
    if (borrow)
        throw domain_error("BigNat underflow");
    while (limbs_.size() > 1 && limbs_.back() == 0)
        limbs_.pop_back();
}

bool BigNat::is_zero() const {
    return limbs_.size() == 1 && limbs_[0] == 0;
}

int BigNat::trailing_zero_bits() const {
    int v = 0;
    for (auto l : limbs_) {
        if (l == 0) {
            v += 32;
            continue;
        }
        while ((l & 1u) == 0) {
            ++v;
            l >>= 1;
        }
        return v;
    }
    throw domain_error("trailing_zero_bits of zero");
}

int nu(int j) {
    if (j < 1)
        throw domain_error("nu: j must be positive");
    BigNat n(1);
    for (int i = 0; i < 4 * j; ++i)
        n.mul_small(3);
    n.sub_small(1);
    return n.trailing_zero_bits();
}

long long q_of_p(long long p, long long search_bound) {
    if (p == 2 || !is_prime(p))
        throw domain_error("q_of_p: p must be an odd prime");
    for (long long q = 2; q <= search_bound; ++q) {
        if (!is_prime(q) || q % p == 0)
            continue;
        if (mult_order(q, p) != p - 1)
            continue;
        // p divides q^{p-1} - 1 exactly once
        if (mod_pow(q, p - 1, p * p) != 1)
            return q;
    }
    throw domain_error("q_of_p: search bound exceeded for p = " + std::to_string(p));
}

} // namespace qsk
