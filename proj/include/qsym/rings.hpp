#ifndef QSYM_RINGS_HPP
#define QSYM_RINGS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qsym {

/// Error for coefficient-ring violations: ring mismatches, non-invertible
/// division, denominators not coprime to p in the p-local ring, and so on.
class RingError : public std::runtime_error {
public:
    explicit RingError(const std::string& what) : std::runtime_error(what) {}
};

enum class RingKind { Integers, Rationals, PrimeField, PLocalRationals };

/// An exact coefficient ring: Z, Q, F_p or Z_(p).
///
/// Values are carried as canonical mpq_class everywhere; `normalize` enforces
/// the ring's invariant (integrality, mod-p reduction, p-coprime denominator)
/// and throws RingError on violation. F_p values are kept in [0, p).
class Ring {
public:
    static Ring integers() { return Ring(RingKind::Integers, 0); }
    static Ring rationals() { return Ring(RingKind::Rationals, 0); }
    static Ring prime_field(unsigned long p);
    static Ring p_local(unsigned long p);

    RingKind kind() const { return kind_; }
    unsigned long prime() const { return p_; }

    bool is_field() const {
        return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField;
    }

    /// Canonical representative of `v` in this ring; throws if `v` does not
    /// belong to the ring.
    mpq_class normalize(const mpq_class& v) const;

    /// Multiplicative inverse of a unit; throws RingError for non-units.
    mpq_class invert(const mpq_class& v) const;

    bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string name() const;

    /// Renders a (normalized) coefficient, e.g. "-3", "2/5".
    std::string render(const mpq_class& v) const;

private:
    Ring(RingKind kind, unsigned long p) : kind_(kind), p_(p) {}

    RingKind kind_;
    unsigned long p_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (a != b) throw RingError("ring mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace qsym

#endif
