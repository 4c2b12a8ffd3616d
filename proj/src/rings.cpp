#include "qsym/rings.hpp"

#include "qsym/numbers.hpp"

namespace qsym {

Ring Ring::prime_field(unsigned long p) {
    if (!is_prime(p)) throw RingError("F_p requires a prime, got " + std::to_string(p));
    return Ring(RingKind::PrimeField, p);
}

Ring Ring::p_local(unsigned long p) {
    if (!is_prime(p)) throw RingError("Z_(p) requires a prime, got " + std::to_string(p));
    return Ring(RingKind::PLocalRationals, p);
}

mpq_class Ring::normalize(const mpq_class& v) const {
    mpq_class c = v;
    c.canonicalize();
    switch (kind_) {
        case RingKind::Integers:
            if (c.get_den() != 1) throw RingError("non-integer value in Z: " + c.get_str());
            return c;
        case RingKind::Rationals:
            return c;
        case RingKind::PrimeField: {
            if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p_))
                throw RingError("denominator divisible by p in F_" + std::to_string(p_));
            mpz_class den_inv;
            if (!mpz_invert(den_inv.get_mpz_t(), c.get_den().get_mpz_t(), mpz_class(p_).get_mpz_t()))
                throw RingError("non-invertible denominator in F_" + std::to_string(p_));
            mpz_class r = c.get_num() * den_inv;
            mpz_class m;
            mpz_mod_ui(m.get_mpz_t(), r.get_mpz_t(), p_);
            return mpq_class(m);
        }
        case RingKind::PLocalRationals:
            if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p_))
                throw RingError("denominator divisible by p in Z_(" + std::to_string(p_) +
                                "): " + c.get_str());
            return c;
    }
    throw RingError("unreachable ring kind");
}

mpq_class Ring::invert(const mpq_class& v) const {
    mpq_class c = normalize(v);
    if (c == 0) throw RingError("division by zero in " + name());
    switch (kind_) {
        case RingKind::Integers:
            if (c != 1 && c != -1) throw RingError("non-unit in Z: " + c.get_str());
            return c;
        case RingKind::Rationals:
            return mpq_class(1) / c;
        case RingKind::PrimeField:
            return normalize(mpq_class(mpz_class(1), c.get_num()));
        case RingKind::PLocalRationals: {
            mpq_class inv = mpq_class(1) / c;
            return normalize(inv);  // rejects numerators divisible by p
        }
    }
    throw RingError("unreachable ring kind");
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "F" + std::to_string(p_);
        case RingKind::PLocalRationals: return "Z(" + std::to_string(p_) + ")";
    }
    return "?";
}

std::string Ring::render(const mpq_class& v) const {
    return v.get_str();
}

}  // namespace qsym
