#ifndef QSYM_MONOMIAL_HPP
#define QSYM_MONOMIAL_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

/// Commutative monomial in generators x_1, x_2, ... stored as an exponent
/// vector with trailing zeros trimmed. weight() uses weight(x_i) = i, the
/// grading of Symm's generators; modules with other gradings (the xi_k of the
/// dual Steenrod model) compute their weights externally.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<unsigned> exponents) : exp_(std::move(exponents)) { trim(); }

    static Monomial gen(int n, unsigned e = 1) {
        if (n < 1) throw std::invalid_argument("generator index must be >= 1");
        std::vector<unsigned> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(n) - 1] = e;
        return Monomial(std::move(v));
    }

    bool is_one() const { return exp_.empty(); }
    const std::vector<unsigned>& exponents() const { return exp_; }

    unsigned exponent(int n) const {
        if (n < 1 || static_cast<size_t>(n) > exp_.size()) return 0;
        return exp_[static_cast<size_t>(n) - 1];
    }

    int weight() const {
        long w = 0;
        for (size_t i = 0; i < exp_.size(); ++i) w += static_cast<long>(i + 1) * exp_[i];
        return static_cast<int>(w);
    }

    Monomial operator*(const Monomial& o) const {
        std::vector<unsigned> v(std::max(exp_.size(), o.exp_.size()), 0);
        for (size_t i = 0; i < exp_.size(); ++i) v[i] += exp_[i];
        for (size_t i = 0; i < o.exp_.size(); ++i) v[i] += o.exp_[i];
        return Monomial(std::move(v));
    }

    Monomial pow(unsigned k) const {
        std::vector<unsigned> v = exp_;
        for (auto& e : v) e *= k;
        return Monomial(std::move(v));
    }

    std::strong_ordering operator<=>(const Monomial& o) const {
        if (auto c = weight() <=> o.weight(); c != 0) return c;
        return exp_ <=> o.exp_;
    }
    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

    /// "c1^2*c3" with the given generator letter; "1" for the empty monomial.
    std::string to_string(const std::string& letter = "c") const {
        if (exp_.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < exp_.size(); ++i) {
            if (exp_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += letter + std::to_string(i + 1);
            if (exp_[i] > 1) s += "^" + std::to_string(exp_[i]);
        }
        return s;
    }

private:
    void trim() {
        while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
    }

    std::vector<unsigned> exp_;
};

}  // namespace qsym

#endif
