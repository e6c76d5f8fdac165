// Diagram spaces: enumeration of the bases in every variant, the
// differential and its star-preserving / star-dropping parts, and the
// quotient by neighbor supercommutativity.
//
// A diagram is a canonical monomial whose factors are the minimal
// components of its configuration: every factor with >= 2 points is a
// group, a singleton starred factor is a free star, and (in the
// generalized variants only) a singleton plain factor is an isolated
// point.  Bidegree is (complexity, point count).

#pragma once

#include <vector>

#include "bdiag/element.hpp"

namespace bdiag {

enum class Variant { B, Bstar, B0, GenB, GenBstar };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

// Does the monomial belong to the span of the given variant?  (B0 uses the
// B test; coset membership is a separate question.)
bool mono_in_variant(const Mono& m, Variant v);

// Projection killing diagrams with an isolated plain point.
Element project_nongeneralized(const Element& e);

// Deterministic ordered basis of one bidegree.  For B0 the result is the
// preferred set of coset representatives.
std::vector<Mono> enumerate_basis(Variant v, Parity mode, int i, int j);

// Substitution of a two-point product for the plain point t (no
// projection applied; relabels to 1..j+1).
Element split_simple_point(const Mono& m, int t, Parity mode);

// Three-term substitution at a starred point t (no projection).  The two
// star-keeping terms and the bracket term can be requested separately;
// they are the star-preserving and star-dropping parts of the boundary.
Element split_star_point(const Mono& m, int t, Parity mode, bool keep_star_terms, bool keep_bracket_term);

// One-point differentials with the projection, as operators on B(*)
// diagrams.  Errors if t has the wrong decoration.
Element diff_point(const Mono& m, int t, Parity mode);
Element diff_asterisk(const Mono& m, int t, Parity mode);

// Full differential per variant.  Input must be homogeneous in bidegree.
Element diff(const Element& e, Variant v);
Element diff_mono(const Mono& m, Variant v, Parity mode);

// Star-count-preserving and star-count-dropping parts (B* variants).
Element diff_bar(const Element& e, Variant v);
Element diff_barbar(const Element& e, Variant v);

// ---------------------------------------------------------------------------
// Neighbor supercommutativity quotient.
//
// On top of antisymmetry and the Jacobi identity, generators at adjacent
// points of the configuration are declared to supercommute; inside the
// bracket calculus this kills every bracket monomial containing a factor
// of the ideal generated by the brackets of adjacent points.  The quotient
// of the plain-diagram span is a free module; reduce() rewrites onto the
// representative basis.

class B0Space {
  public:
    B0Space(Parity mode, int i, int j);

    const std::vector<Mono>& full_basis() const { return full_; }
    const std::vector<Mono>& representatives() const { return reps_; }

    // Canonical coset representative; starred monomials are sent to zero.
    Element reduce(const Element& e) const;
    ElementQ reduce(const ElementQ& e) const;

  private:
    Parity mode_;
    std::vector<Mono> full_;
    std::vector<Mono> reps_;
    std::map<Mono, int> index_;
    // reduced relation rows: pivot column -> full row (pivot entry = 1)
    std::vector<std::pair<int, std::vector<Int>>> rows_;
};

// Shared cache, keyed by (mode, i, j).
const B0Space& b0_space(Parity mode, int i, int j);

Element b0_reduce(const Element& e);
ElementQ b0_reduce(const ElementQ& e);

}  // namespace bdiag
