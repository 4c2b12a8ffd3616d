#ifndef QSYM_NSYMM_HPP
#define QSYM_NSYMM_HPP

#include <string>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/element.hpp"

namespace qsym::nsymm {

/// Element of NSymm = Z<Z_1, Z_2, ...>: keys are noncommutative monomials
/// Z_{a1}...Z_{an}, the empty key is the unit. The product is concatenation.
class NSymmElement : public ModuleElement<NSymmElement, Composition> {
public:
    using ModuleElement<NSymmElement, Composition>::ModuleElement;

    static void mul_key_into(const Ring& ring, const Composition& a, const Composition& b,
                             const mpq_class& c, NSymmElement& out) {
        (void)ring;
        out.add_term(a.concat(b), c);
    }

    static int key_degree(const Composition& k) { return k.degree(); }

    std::string to_string() const;
};

using NSymmTensor = Tensor2<NSymmElement>;
using NSymmTensor3 = Tensor3<NSymmElement>;

/// Z_n (n = 0 gives the unit).
NSymmElement gen(const Ring& ring, int n);

/// Coefficient of the empty monomial.
mpq_class counit(const NSymmElement& x);

/// Delta(Z_n) = sum_{p+q=n} Z_p (x) Z_q, extended as an algebra map.
NSymmTensor coproduct(const NSymmElement& x);

/// Coproduct minus x(x)1 + 1(x)x minus counit part: the terms with both
/// tensor factors of positive degree.
NSymmTensor reduced_coproduct(const NSymmElement& x);

/// (Delta (x) id) Delta, for coassociativity checks.
NSymmTensor3 coproduct_left(const NSymmElement& x);
NSymmTensor3 coproduct_right(const NSymmElement& x);

/// chi(Z_n) = sum over compositions (a1..am) of n of (-1)^m Z_{a1}...Z_{am},
/// extended as an anti-automorphism.
NSymmElement antipode(const NSymmElement& x);

enum class Side { Left, Right };

/// Newton primitives from the recursion
///   Q_n  = Z_1 Q_{n-1} - Z_2 Q_{n-2} + ... + (-1)^n Z_{n-1} Q_1 + (-1)^{n-1} n Z_n
/// (left), and the mirrored recursion for Q'_n (right). n >= 1.
NSymmElement newton_Q(int n, Side side, const Ring& ring);

/// The same primitives from the antipode formula
///   Q_n = (-1)^{n-1} sum_{j=1}^{n} j chi(Z_{n-j}) Z_j  (left),
///   Q'_n = (-1)^{n-1} sum_{j=1}^{n} j Z_j chi(Z_{n-j}) (right).
NSymmElement newton_Q_via_chi(int n, Side side, const Ring& ring);

/// Basis of the primitives {x : Delta(x) = x(x)1 + 1(x)x} in the homogeneous
/// component of (even) topological degree 2n, computed as the exact kernel of
/// the reduced coproduct over the given field. Deterministic echelon basis.
std::vector<NSymmElement> primitive_space_basis(int degree2n, const Ring& field);

}  // namespace qsym::nsymm

#endif
