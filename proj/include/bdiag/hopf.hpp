// The differential Hopf algebra structure on diagram spaces: gluing
// product, component-splitting coproduct, convolution of operators, the
// antipode series, the logarithm projecting onto primitives, and the
// decomposition into connected components.
//
// All Koszul bookkeeping here runs over the weight parity; the exchange
// parity of a factor equals its weight parity in both modes.

#pragma once

#include <functional>

#include "bdiag/diagram.hpp"

namespace bdiag {

// coproduct output: sum of (left, right) diagram pairs
template <class C>
using TensorT = std::map<std::pair<Mono, Mono>, C>;
using Tensor = TensorT<Int>;
using TensorQ = TensorT<Rat>;

Element unit_element(Parity mode);

// Glue b to the right of a (b's points shifted above a's).
Element hopf_product(const Element& a, const Element& b);
ElementQ hopf_product(const ElementQ& a, const ElementQ& b);

// Sum over splittings of the minimal components, with the sign of moving
// the right-hand components past the left-hand ones.
Tensor coproduct(const Mono& m, Parity mode);
Tensor coproduct(const Element& e);
TensorQ coproduct(const ElementQ& e);

// Multiplication / comultiplication / counit bundled per Hopf variant;
// the neighbor-quotient variant reduces after every operation.
struct HopfOps {
    Variant var;
    Parity mode;

    Element mul(const Element& a, const Element& b) const;
    Tensor cop(const Mono& m) const;
    ElementQ mul_q(const ElementQ& a, const ElementQ& b) const;
    TensorQ cop_q(const Mono& m) const;
};

using LinOp = std::function<Element(const Element&)>;

// Convolution f * g = mul ((f x g) cop).
LinOp convolve(const LinOp& f, const LinOp& g, const HopfOps& ops);

// (id - unit projector)^{*k} applied to an element.
Element id_minus_unit_power(int k, const Element& e, const HopfOps& ops);

// Antipode via the geometric series; terminates degreewise.
Element antipode(const Element& e, const HopfOps& ops);

// Logarithm of the identity: projection onto the primitives (rational).
ElementQ primitive_projection(const Element& e, const HopfOps& ops);
ElementQ primitive_projection_q(const ElementQ& e, const HopfOps& ops);

// Primitivity test: cop(x) = x (x) 1 + 1 (x) x.
bool is_primitive(const ElementQ& e, const HopfOps& ops);

// Split a diagram at its separating intervals; each component is
// relabeled onto an initial segment of the line.
std::vector<Mono> connected_components(const Mono& m);

}  // namespace bdiag
