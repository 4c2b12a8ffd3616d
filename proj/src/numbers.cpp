#include "qsym/numbers.hpp"

#include <stdexcept>
#include <string>

namespace qsym {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(mpz_class(n).get_mpz_t(), 40) != 0;
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

unsigned long binomial_mod_p(unsigned long n, unsigned long k, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("binomial_mod_p: p = " + std::to_string(p) + " is not prime");
    unsigned long result = 1;
    while (n > 0 || k > 0) {
        unsigned long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        mpz_class d = binomial(static_cast<long>(nd), static_cast<long>(kd));
        result = (result * mpz_fdiv_ui(d.get_mpz_t(), p)) % p;
        n /= p;
        k /= p;
    }
    return result;
}

int moebius(unsigned long n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    int factors = 0;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

}  // namespace qsym
