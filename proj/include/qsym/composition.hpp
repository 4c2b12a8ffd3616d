#ifndef QSYM_COMPOSITION_HPP
#define QSYM_COMPOSITION_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

/// A composition: a finite ordered sequence of positive integers. The empty
/// composition is allowed (degree 0). The same key indexes the monomial basis
/// [a1,...,an] of QSymm and the monomial Z_{a1}...Z_{an} of NSymm; which one
/// is meant is determined by the operation, not the key.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int a : parts_)
            if (a < 1) throw std::invalid_argument("composition parts must be >= 1");
    }

    static Composition single(int n) { return Composition(std::vector<int>{n}); }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    int degree() const {
        int d = 0;
        for (int a : parts_) d += a;
        return d;
    }

    Composition concat(const Composition& o) const {
        std::vector<int> p = parts_;
        p.insert(p.end(), o.parts_.begin(), o.parts_.end());
        return Composition(std::move(p));
    }

    /// First i parts / parts after the first i.
    Composition prefix(int i) const {
        return Composition(std::vector<int>(parts_.begin(), parts_.begin() + i));
    }
    Composition suffix(int i) const {
        return Composition(std::vector<int>(parts_.begin() + i, parts_.end()));
    }

    /// Canonical total order: by degree, then length, then lexicographically.
    /// This order is fixed for all deterministic output.
    std::strong_ordering operator<=>(const Composition& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        if (auto c = length() <=> o.length(); c != 0) return c;
        return parts_ <=> o.parts_;
    }
    bool operator==(const Composition& o) const { return parts_ == o.parts_; }

    /// "[a1,a2,...,an]"
    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    /// "Z1*Z2*..." (empty composition renders as "1").
    std::string to_nsymm_string() const {
        if (parts_.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += "*";
            s += "Z" + std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
};

/// All compositions of n in canonical order (2^(n-1) of them for n >= 1).
std::vector<Composition> compositions_of(int n);

}  // namespace qsym

#endif
