// Formal linear combinations of canonical monomials, and the bracket
// calculus on them: canonicalization of raw bracket expressions, the
// symmetric-algebra bracket (odd mode), the exterior-algebra bracket (even
// mode), the chain operator delta, products, and generator substitution.
//
// Everything reduces to two primitives:
//   * word_bracket: the bracket of two canonical factors, computed by
//     expanding both into the free associative superalgebra and reading
//     the left-normed coordinates off the words that start with the
//     minimal point (those coefficients are exactly the coordinates, and
//     they are integral);
//   * factor sorting with Koszul exchange signs.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "bdiag/int.hpp"
#include "bdiag/rat.hpp"
#include "bdiag/term.hpp"

namespace bdiag {

template <class C>
class ElementT {
  public:
    ElementT() = default;
    explicit ElementT(Parity mode) : mode_(mode) {}
    ElementT(Parity mode, const Mono& m, C c = C(1)) : mode_(mode) {
        if (!c.is_zero())
            terms_[m] = std::move(c);
    }

    Parity mode() const { return mode_; }
    const std::map<Mono, C>& terms() const& { return terms_; }
    // Materialize when called on a temporary so range-for stays valid.
    std::map<Mono, C> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Mono& m, const C& c) {
        if (c.is_zero())
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    ElementT& operator+=(const ElementT& o) {
        check_mode(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    ElementT& operator-=(const ElementT& o) {
        check_mode(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    friend ElementT operator+(ElementT a, const ElementT& b) { return a += b; }
    friend ElementT operator-(ElementT a, const ElementT& b) { return a -= b; }
    ElementT operator-() const {
        ElementT r(mode_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    ElementT operator*(const C& s) const {
        ElementT r(mode_);
        if (s.is_zero())
            return r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, c * s);
        return r;
    }
    bool operator==(const ElementT& o) const { return terms_ == o.terms_; }
    bool operator!=(const ElementT& o) const { return !(*this == o); }

    // All terms share one bidegree, or the element is zero.
    bool homogeneous() const {
        if (terms_.empty())
            return true;
        auto it = terms_.begin();
        int i = it->first.complexity(), j = it->first.points();
        for (const auto& [m, c] : terms_)
            if (m.complexity() != i || m.points() != j)
                return false;
        return true;
    }
    int complexity() const { return terms_.empty() ? 0 : terms_.begin()->first.complexity(); }
    int points() const { return terms_.empty() ? 0 : terms_.begin()->first.points(); }

    void check_mode(const ElementT& o) const {
        if (!terms_.empty() && !o.terms_.empty() && mode_ != o.mode_)
            throw Error("parity mode mismatch");
    }

  private:
    Parity mode_ = Parity::odd_d;
    std::map<Mono, C> terms_;
};

using Element = ElementT<Int>;
using ElementQ = ElementT<Rat>;

inline ElementQ to_rational(const Element& e) {
    ElementQ r(e.mode());
    for (const auto& [m, c] : e.terms())
        r.add_term(m, Rat(c));
    return r;
}

// ---------------------------------------------------------------------------
// Raw bracket expressions (parse trees, substitution scaffolding).

struct Expr {
    enum Kind { leaf, bracket, product } kind = leaf;
    Gen gen = 0;
    std::vector<Expr> sub;

    static Expr make_leaf(Gen g) {
        Expr e;
        e.kind = leaf;
        e.gen = g;
        return e;
    }
    static Expr make_bracket(Expr a, Expr b) {
        Expr e;
        e.kind = bracket;
        e.sub = {std::move(a), std::move(b)};
        return e;
    }
    static Expr make_product(std::vector<Expr> fs) {
        Expr e;
        e.kind = product;
        e.sub = std::move(fs);
        return e;
    }
};

// ---------------------------------------------------------------------------
// Core calculus (implemented in element.cpp for C = Int).

// Expansion of a left-normed factor in the free associative superalgebra:
// list of (word, sign) pairs, 2^(k-1) of them.
std::vector<std::pair<Word, int>> assoc_expand(const Word& w, Parity mode);

// Bracket of two canonical factors with disjoint point sets; the result is
// a combination of canonical factors on the union of the points.
std::vector<std::pair<Word, Int>> word_bracket(const Word& u, const Word& v, Parity mode);

// Sort a factor arrangement into canonical order, accumulating the Koszul
// exchange sign.  Point sets of distinct factors must be disjoint.
std::pair<Mono, int> sort_factors(std::vector<Word> arrangement, Parity mode);

// Product of two elements with disjoint point sets (symmetric or exterior
// per mode).  This is plain factor interleaving with Koszul signs.
Element mono_product(const Mono& a, const Mono& b, Parity mode);
Element product(const Element& a, const Element& b);
ElementQ product(const ElementQ& a, const ElementQ& b);

// The bracket extended to products of factors: the symmetric-algebra
// (Poisson) bracket in odd mode, the exterior-algebra (Schouten) bracket in
// even mode.  Point sets must be disjoint.
Element lie_bracket(const Element& a, const Element& b);
Element poisson_bracket(const Element& a, const Element& b);   // odd mode
Element schouten_bracket(const Element& a, const Element& b);  // even mode

// Chain operator on the exterior algebra (even mode): pairwise bracketing
// of factors.  Lowers the factor count by one, raises complexity by one.
Element delta(const Element& a);

// Canonicalize a raw multilinear bracket expression.  Throws on a repeated
// point inside the expression.
Element canonicalize(const Expr& e, Parity mode);

// Substitute `a` for the generator at point t0 of `b`, with the sign rule
// of the diagram calculus, and expand.  Points of `a` live on the same line
// as `b` and must avoid b's points except possibly t0; the result is
// relabeled to 1..N.  All monomials of `a` must share one point set.
Element insert_shared(const Mono& b, int t0, const Element& a);

// Same, but `a` lives on its own line 1..alpha and is squeezed into a small
// neighborhood of t0.  All monomials of `a` must have alpha points.
Element insert_squeezed(const Mono& b, int t0, const Element& a);

// Relabel points through a strictly increasing map.
Mono relabel(const Mono& m, const std::function<int(int)>& map);
Element relabel(const Element& e, const std::function<int(int)>& map);

// Relabel through an arbitrary bijection of 1..j and re-canonicalize; the
// sign comes out of canonicalization.
Element permute_points(const Element& e, const std::vector<int>& perm);

// Left-normed expression tree of a canonical factor.
Expr word_to_expr(const Word& w);
Expr mono_to_expr(const Mono& m);

}  // namespace bdiag
