// Exact integer matrices: Smith normal form with transformation
// certificates, kernels, ranks over the rationals and prime fields, and
// the homology of a pair of consecutive boundary maps.

#pragma once

#include <vector>

#include "bdiag/int.hpp"
#include "bdiag/rat.hpp"
#include "bdiag/term.hpp"

namespace bdiag {

class ZMat {
  public:
    ZMat() = default;
    ZMat(int rows, int cols) : r_(rows), c_(cols), a_(rows, std::vector<Int>(cols, Int(0))) {}

    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; i++)
            m.at(i, i) = Int(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& at(int r, int c) { return a_[r][c]; }
    const Int& at(int r, int c) const { return a_[r][c]; }
    std::vector<Int>& row(int r) { return a_[r]; }
    const std::vector<Int>& row(int r) const { return a_[r]; }

    bool operator==(const ZMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    friend ZMat operator*(const ZMat& a, const ZMat& b);
    ZMat transposed() const;
    bool is_zero() const;

  private:
    int r_ = 0, c_ = 0;
    std::vector<std::vector<Int>> a_;
};

struct SmithForm {
    std::vector<Int> diag;  // invariant factors d1 | d2 | ..., positive
    int rank = 0;
    ZMat U, V;       // U * M * V = diagonal(diag), when requested
    Int det_u, det_v;  // tracked determinants (+-1)
    bool has_u = false, has_v = false;
};

// Smith normal form by gcd elimination with smallest-pivot selection.
SmithForm smith_normal_form(const ZMat& m, bool want_u = true, bool want_v = true);

// Exact check U*M*V == diag and |det U| = |det V| = 1.
bool verify_smith(const ZMat& m, const SmithForm& s);

// Columns spanning ker(M) over the integers; the span is saturated.
ZMat kernel_basis(const ZMat& m);

// Solve K*x = b for every column b of `cols`; every column must lie in the
// rational span, and the result is integral whenever the span is saturated
// (verified).  Returns the coordinate matrix x (K.cols() x cols.cols()).
ZMat solve_in_span(const ZMat& k, const ZMat& cols);

// Integral membership in the column lattice of m.
bool in_image(const ZMat& m, const ZMat& col);

int rank_q(const ZMat& m);
int rank_mod_p(const ZMat& m, long long p);

struct HomologyGroup {
    long long rank = 0;
    std::vector<Int> torsion;  // each >= 2, dividing the next

    bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    std::string str() const;
};

// Homology at the middle of  src --in--> mid --out--> dst, given the two
// matrices (columns of `in` land in mid, rows of `out` leave mid).
HomologyGroup homology_group(const ZMat& out, const ZMat& in);

// Field coefficients: dim ker - rank(in).
long long homology_rank_q(const ZMat& out, const ZMat& in);
long long homology_rank_mod_p(const ZMat& out, const ZMat& in, long long p);

}  // namespace bdiag
