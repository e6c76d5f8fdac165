// Linear graded operads realized on generalized diagram spaces with fixed
// point labels, brace operations, the differential induced by the image of
// the associative multiplication, and the identification of these
// Hochschild complexes with the generalized diagram complexes.
//
// Compositions are diagram insertions: plain insertion for the odd and
// even plain instances, star-aware insertion for the starred even one.
// Braces are then plain insertion sums; the composition signs live in the
// prefactor of gamma relative to the braces.

#pragma once

#include "bdiag/complex.hpp"
#include "bdiag/insertion.hpp"

namespace bdiag {

enum class OperadKind { poisson, gerstenhaber, bv };

Parity operad_parity(OperadKind k);
Variant operad_variant(OperadKind k);
OperadKind operad_kind_from_name(const std::string& s);
std::string operad_kind_name(OperadKind k);

struct OperadElement {
    Element val;
    int arity = 0;

    bool is_zero() const { return val.is_zero(); }
    bool operator==(const OperadElement& o) const { return arity == o.arity && val == o.val; }
};

// Validated constructor: every monomial must cover the points 1..arity.
OperadElement op_element(OperadKind k, Element val, int arity);
OperadElement op_identity(OperadKind k);
// Image of the binary associative multiplication.
OperadElement op_multiplication(OperadKind k);

// Composition degree |x| = weight parity + 1.
int hochschild_degree(const Mono& m, Parity mode);

// Full composition: substitute ys[t-1] into slot t of x.
OperadElement gamma(OperadKind k, const OperadElement& x, const std::vector<OperadElement>& ys);

// Brace: sum over order-preserving substitutions of the arguments.
OperadElement brace(OperadKind k, const OperadElement& x, const std::vector<OperadElement>& ys);

// x o y = x{y}.
OperadElement circ(OperadKind k, const OperadElement& x, const OperadElement& y);

// [x,y] = x o y - (-1)^{|x||y|} y o x.
OperadElement op_lie_bracket(OperadKind k, const OperadElement& x, const OperadElement& y);

// d x = [m2, x]; raises the arity by one and squares to zero.
OperadElement hochschild_diff(OperadKind k, const OperadElement& x);

// x * y = (-1)^{|x|+1} m2{x, y}.
OperadElement hochschild_product(OperadKind k, const OperadElement& x, const OperadElement& y);

// Relabel the inputs by a permutation of 1..arity (with Koszul signs from
// re-canonicalization).
OperadElement op_permute(OperadKind k, const OperadElement& x, const std::vector<int>& perm);

// Certificate identifying the Hochschild differential with the
// generalized-complex differential through a diagonal sign table.
struct SignTable {
    // (complexity, arity, basis position) -> sign
    std::map<std::tuple<int, int, int>, int> sign;
    bool verified = false;
};

SignTable diagram_isomorphism(OperadKind k, int arity_max);

// Bigraded Hochschild homology: the complex in arities <= arity_max + 1,
// graded by (complexity, arity), with the Hochschild differential.
BigradedComplex hochschild_complex(OperadKind k, int arity_max);

}  // namespace bdiag
