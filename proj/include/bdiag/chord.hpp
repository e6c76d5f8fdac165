// Chord-diagram bialgebras: the top-bidegree homology of the plain or
// starred complexes, presented as chord diagrams modulo the boundary
// relations (the four-term relations, plus the one-term relations when the
// starred complex is used), with the primitive subspace computed through
// the logarithm of the identity.

#pragma once

#include "bdiag/hopf.hpp"
#include "bdiag/zmatrix.hpp"

namespace bdiag {

class ChordAlgebra {
  public:
    ChordAlgebra(Parity mode, bool with_one_term, int i_max);

    Parity mode() const { return mode_; }
    int i_max() const { return i_max_; }

    long long dimension(int i) const;
    const std::vector<Mono>& diagrams(int i) const;         // ambient chord basis
    const std::vector<int>& representative_cols(int i) const;

    // Quotient coordinates (over Q) of an element of bidegree (i, 2i).
    std::vector<Rat> reduce(const ElementQ& e, int i) const;

    // Membership in the integral span of the relations.
    bool relation_member_z(const Element& e, int i) const;

    // Rotating the line one step (first point to the far end) fixes every
    // diagram modulo the relations, integrally.
    bool circular_invariance(int i) const;

    // Rank of the primitive projection on the degree-i quotient.
    long long primitive_dimension(int i);

  private:
    struct Level {
        std::vector<Mono> basis;
        std::map<Mono, int> index;
        // fully reduced fraction-free relation rows, pivot first
        std::vector<std::pair<int, std::vector<std::pair<int, Int>>>> rref;
        std::vector<int> rep_cols;
        // integral echelon for membership tests
        std::vector<std::pair<int, std::vector<Int>>> hnf;
    };

    Parity mode_;
    bool with_one_term_;
    int i_max_;
    std::vector<Level> levels_;
    // memo for convolution powers: (k, i, rep position) -> coordinates
    std::map<std::tuple<int, int, int>, std::vector<Rat>> power_memo_;

    std::vector<Rat> conv_power(int k, int i, int rep_pos);
    std::vector<Rat> reduce_vec(std::vector<Rat> v, int i) const;
};

}  // namespace bdiag
