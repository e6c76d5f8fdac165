// Bigraded chain complexes of diagrams: bases and boundary matrices per
// bidegree, exact homology over the integers, ranks over fields, and the
// comparison machinery for induced maps on homology.

#pragma once

#include <functional>
#include <map>
#include <optional>

#include "bdiag/diagram.hpp"
#include "bdiag/zmatrix.hpp"

namespace bdiag {

class BigradedComplex {
  public:
    // Differential applied to basis monomials; defaults to diff_mono for
    // the variant.  (The star-preserving part is the interesting override.)
    using DiffFn = std::function<Element(const Mono&, Parity)>;

    // j runs 0..j_cap(i) per complexity; bases one level above the cap are
    // materialized so every stored bidegree has an outgoing matrix.
    static BigradedComplex build(Variant v, Parity mode, int i_max,
                                 std::function<int(int)> j_cap = nullptr, DiffFn diff = nullptr);

    Variant variant() const { return var_; }
    Parity mode() const { return mode_; }
    int i_max() const { return i_max_; }
    int j_cap(int i) const { return j_cap_(i); }

    bool stored(int i, int j) const { return i >= 0 && i <= i_max_ && j >= 0 && j <= j_cap_(i); }
    const std::vector<Mono>& basis(int i, int j) const;
    long long dimension(int i, int j) const { return (long long)basis(i, j).size(); }

    // Matrix of the differential (i,j) -> (i,j+1); rows index the target.
    const ZMat& matrix(int i, int j) const;

    // Column vector of a homogeneous element in the stored basis.
    ZMat column(const Element& e, int i, int j) const;
    Element from_column(const ZMat& col, int i, int j, int c = 0) const;

    HomologyGroup homology(int i, int j) const;
    long long homology_rank(int i, int j) const;               // over Q
    long long homology_rank_p(int i, int j, long long p) const;

  private:
    Variant var_ = Variant::B;
    Parity mode_ = Parity::odd_d;
    int i_max_ = 0;
    std::function<int(int)> j_cap_;
    std::map<std::pair<int, int>, std::vector<Mono>> bases_;
    std::map<std::pair<int, int>, std::map<Mono, int>> index_;
    mutable std::map<std::pair<int, int>, ZMat> mats_;
    DiffFn diff_;

    ZMat in_matrix(int i, int j) const;  // (i,j-1) -> (i,j), zero-width if absent
};

// Homology over Q in explicit coordinates.
struct QSpace {
    ZMat kernel;      // saturated integer basis of the cycle space, n x k
    ZMat boundaries;  // coordinates of the boundary image inside the kernel, k x m
    long long hdim = 0;
};

QSpace homology_space_q(const BigradedComplex& c, int i, int j);

// Matrix of a bidegree-preserving linear map given on basis monomials.
ZMat chain_map_matrix(const std::function<Element(const Mono&)>& f, const BigradedComplex& src,
                      const BigradedComplex& dst, int i, int j);

struct InducedMapReport {
    bool chain_map = false;      // f commutes with the differentials
    bool groups_match = false;   // equal (rank, torsion) on both sides
    bool iso_q = false;          // induced map is a rational isomorphism
    bool ok() const { return chain_map && groups_match && iso_q; }
};

InducedMapReport check_induced_iso(const BigradedComplex& src, const BigradedComplex& dst,
                                   const std::function<Element(const Mono&)>& f, int i, int j);

// Rational span utilities: rank of [a | b] column blocks.
int rank_q_concat(const ZMat& a, const ZMat& b);

// Boundary matrix written in explicit source/target bases (e.g. to match a
// published ordering).  The elements must form bases of their bidegrees;
// anything else raises a basis mismatch error.
ZMat matrix_in_basis(Variant v, Parity mode, const std::vector<Element>& source,
                     const std::vector<Element>& target);

}  // namespace bdiag
