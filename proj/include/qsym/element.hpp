#ifndef QSYM_ELEMENT_HPP
#define QSYM_ELEMENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "qsym/rings.hpp"

namespace qsym {

/// Sparse linear combination of basis keys over an exact coefficient ring.
/// Zero coefficients are never stored; every inserted coefficient is
/// normalized by the ring (mod-p reduction, integrality checks, ...).
///
/// Values are immutable in practice: all operations build new values.
template <class Key>
class Lin {
public:
    using key_type = Key;
    using map_type = std::map<Key, mpq_class>;

    explicit Lin(Ring ring) : ring_(ring) {}

    const Ring& ring() const { return ring_; }
    const map_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    mpq_class coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    void add_term(const Key& k, const mpq_class& c) {
        mpq_class v = ring_.normalize(c);
        if (v == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, std::move(v));
        } else {
            it->second = ring_.normalize(it->second + v);
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const Lin& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
    bool operator!=(const Lin& o) const { return !(*this == o); }

protected:
    Ring ring_;
    map_type terms_;
};

/// CRTP mixin providing module arithmetic plus the bilinear product.
/// The derived type supplies:
///   static void mul_key_into(const Ring&, const Key&, const Key&,
///                            const mpq_class&, Derived&)
///   static int key_degree(const Key&)
template <class Derived, class Key>
class ModuleElement : public Lin<Key> {
public:
    using Lin<Key>::Lin;

    static Derived zero(Ring r) { return Derived(r); }

    static Derived term(Ring r, Key k, const mpq_class& c = 1) {
        Derived d(r);
        d.add_term(std::move(k), c);
        return d;
    }

    /// Unit element: coefficient 1 on the empty key.
    static Derived one(Ring r) { return term(r, Key{}, 1); }

    Derived zero_like() const { return zero(this->ring_); }
    Derived one_like() const { return one(this->ring_); }

    Derived operator+(const Derived& o) const {
        require_same_ring(this->ring_, o.ring());
        Derived r = self();
        for (const auto& [k, c] : o.terms()) r.add_term(k, c);
        return r;
    }

    Derived operator-(const Derived& o) const {
        require_same_ring(this->ring_, o.ring());
        Derived r = self();
        for (const auto& [k, c] : o.terms()) r.add_term(k, -c);
        return r;
    }

    Derived operator-() const {
        Derived r(this->ring_);
        for (const auto& [k, c] : this->terms_) r.add_term(k, -c);
        return r;
    }

    Derived scaled(const mpq_class& s) const {
        Derived r(this->ring_);
        for (const auto& [k, c] : this->terms_) r.add_term(k, c * s);
        return r;
    }

    Derived operator*(const Derived& o) const {
        require_same_ring(this->ring_, o.ring());
        Derived r(this->ring_);
        for (const auto& [k1, c1] : this->terms_)
            for (const auto& [k2, c2] : o.terms())
                Derived::mul_key_into(this->ring_, k1, k2, c1 * c2, r);
        return r;
    }

    Derived& operator+=(const Derived& o) { return static_cast<Derived&>(*this) = self() + o; }
    Derived& operator-=(const Derived& o) { return static_cast<Derived&>(*this) = self() - o; }
    Derived& operator*=(const Derived& o) { return static_cast<Derived&>(*this) = self() * o; }

    Derived pow(unsigned e) const {
        Derived r = one(this->ring_);
        for (unsigned i = 0; i < e; ++i) r = r * self();
        return r;
    }

    /// Homogeneous component in the given degree.
    Derived component(int degree) const {
        Derived r(this->ring_);
        for (const auto& [k, c] : this->terms_)
            if (Derived::key_degree(k) == degree) r.add_term(k, c);
        return r;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [k, c] : this->terms_) d = std::max(d, Derived::key_degree(k));
        return d;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [k, c] : this->terms_)
            if (Derived::key_degree(k) != degree) return false;
        return true;
    }

    /// True when the element is a scalar multiple of the unit (or zero).
    bool is_scalar() const {
        if (this->terms_.empty()) return true;
        return this->terms_.size() == 1 && this->terms_.begin()->first == Key{};
    }

    mpq_class scalar_value() const {
        if (this->terms_.empty()) return 0;
        if (!is_scalar()) throw RingError("element is not a scalar");
        return this->terms_.begin()->second;
    }

    /// Inverse of a unit (a scalar multiple of the unit key).
    Derived invert_unit() const {
        if (!is_scalar() || this->terms_.empty())
            throw RingError("cannot invert: constant term is not a unit scalar");
        return term(this->ring_, Key{}, this->ring_.invert(scalar_value()));
    }

private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

template <class D, class K>
D operator*(const mpq_class& s, const ModuleElement<D, K>& x) {
    return x.scaled(s);
}

/// Two-fold tensor of a module algebra: keys are pairs, multiplication is
/// factor-wise. Carrier for coproduct values.
template <class D>
class Tensor2
    : public ModuleElement<Tensor2<D>, std::pair<typename D::key_type, typename D::key_type>> {
public:
    using InnerKey = typename D::key_type;
    using Key = std::pair<InnerKey, InnerKey>;
    using ModuleElement<Tensor2<D>, Key>::ModuleElement;

    static void mul_key_into(const Ring& ring, const Key& a, const Key& b, const mpq_class& c,
                             Tensor2& out) {
        D left(ring), right(ring);
        D::mul_key_into(ring, a.first, b.first, 1, left);
        D::mul_key_into(ring, a.second, b.second, 1, right);
        for (const auto& [lk, lc] : left.terms())
            for (const auto& [rk, rc] : right.terms()) out.add_term({lk, rk}, c * lc * rc);
    }

    static int key_degree(const Key& k) {
        return D::key_degree(k.first) + D::key_degree(k.second);
    }

    static Tensor2 pure(const D& x, const D& y) {
        require_same_ring(x.ring(), y.ring());
        Tensor2 t(x.ring());
        for (const auto& [xk, xc] : x.terms())
            for (const auto& [yk, yc] : y.terms()) t.add_term({xk, yk}, xc * yc);
        return t;
    }
};

/// Three-fold tensor, used by coassociativity checks.
template <class D>
class Tensor3 : public ModuleElement<
                    Tensor3<D>, std::tuple<typename D::key_type, typename D::key_type,
                                           typename D::key_type>> {
public:
    using InnerKey = typename D::key_type;
    using Key = std::tuple<InnerKey, InnerKey, InnerKey>;
    using ModuleElement<Tensor3<D>, Key>::ModuleElement;

    static void mul_key_into(const Ring& ring, const Key& a, const Key& b, const mpq_class& c,
                             Tensor3& out) {
        D f0(ring), f1(ring), f2(ring);
        D::mul_key_into(ring, std::get<0>(a), std::get<0>(b), 1, f0);
        D::mul_key_into(ring, std::get<1>(a), std::get<1>(b), 1, f1);
        D::mul_key_into(ring, std::get<2>(a), std::get<2>(b), 1, f2);
        for (const auto& [k0, c0] : f0.terms())
            for (const auto& [k1, c1] : f1.terms())
                for (const auto& [k2, c2] : f2.terms())
                    out.add_term({k0, k1, k2}, c * c0 * c1 * c2);
    }

    static int key_degree(const Key& k) {
        return D::key_degree(std::get<0>(k)) + D::key_degree(std::get<1>(k)) +
               D::key_degree(std::get<2>(k));
    }
};

}  // namespace qsym

#endif
