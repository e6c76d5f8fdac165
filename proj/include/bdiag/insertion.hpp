// Insertion-sum calculus: the slotwise insertion operations, their
// star-aware refinements on the starred even complex, the star and circle
// maps, and the odd bracket built from insertion sums.

#pragma once

#include "bdiag/diagram.hpp"

namespace bdiag {

// Which insertion acts at a starred slot: nothing extra (plain), the star
// map image (bar), the circle map image (double bar), or their sum (full).
enum class TriangleKind { plain, bar, barbar, full };

// A |-> A*: add a star at each plain point, with the weight sign (starred
// even complex only).
Element star_map(const Element& a);

// A |-> A0: sign-adjusted chain operator (starred even complex only).
Element circle_map(const Element& a);

// A |-> A* + A0; squares to zero.
Element star_star_map(const Element& a);

// A |>_j B: substitute (a variant of) A at the j-th point of B; zero when
// j exceeds B's point count.
Element triangle_j(const Element& a, const Element& b, int j, TriangleKind kind);

// A |> B: sum over all slots.  Bidegree (0,-1).
Element triangle(const Element& a, const Element& b, TriangleKind kind);

// Insertion kind appropriate to a variant: plain complexes use plain
// insertion, the starred even complex the star-aware sum.  The starred odd
// complex has no such calculus and is rejected.
TriangleKind triangle_kind_for(Variant v, Parity mode);

// {A,B} = A|>B -+ B|>A: the odd bracket; the differential is bracketing
// with the two-point product.
Element kirillov_bracket(const Element& a, const Element& b, Variant v);

int weight_parity(const Element& e);

}  // namespace bdiag
