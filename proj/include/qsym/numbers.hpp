#ifndef QSYM_NUMBERS_HPP
#define QSYM_NUMBERS_HPP

#include <gmpxx.h>

namespace qsym {

bool is_prime(unsigned long n);

/// Exact binomial coefficient; 0 when k > n. Both arguments must be >= 0.
mpz_class binomial(long n, long k);

/// binomial(n, k) mod p computed by the Lucas digit factorization
/// C(n0,k0)...C(ns,ks) over the base-p digits. p must be prime.
unsigned long binomial_mod_p(unsigned long n, unsigned long k, unsigned long p);

/// Moebius function; n must be >= 1.
int moebius(unsigned long n);

}  // namespace qsym

#endif
