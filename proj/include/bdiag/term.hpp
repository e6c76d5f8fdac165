// Generators, bracket words and monomials.
//
// A generator is a point on the line, optionally starred.  The multilinear
// part of the free Lie superalgebra on a point set has the left-normed
// brackets [[..[g1,g2],..],gk] with g1 the minimal point as a basis, so a
// canonical bracket factor is stored as the plain sequence (g1,..,gk).
// A monomial is a product of such factors sorted by their minimal point;
// in even mode the product is the exterior one, in odd mode the symmetric
// one, and the difference only shows up in signs.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdiag {

enum class Parity { odd_d, even_d };

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Generator encoded as point*2 | starred; points are >= 1.
using Gen = int32_t;

inline Gen make_gen(int point, bool star) { return (Gen)(point << 1 | (star ? 1 : 0)); }
inline int gen_point(Gen g) { return g >> 1; }
inline bool gen_star(Gen g) { return g & 1; }

// Odd mode: every generator is odd.  Even mode: plain generators are even,
// starred ones odd.
inline int gen_parity(Gen g, Parity mode) { return mode == Parity::odd_d ? 1 : (gen_star(g) ? 1 : 0); }

using Word = std::vector<Gen>;  // left-normed bracket factor, first = min point

inline int word_parity(const Word& w, Parity mode) {
    int p = 0;
    for (Gen g : w)
        p ^= gen_parity(g, mode);
    return p;
}

// Exchange parity of a factor under the product: the Koszul weight used
// when two adjacent factors swap.  Coincides with the weight parity of the
// factor in both modes.
inline int factor_exchange_parity(const Word& w, Parity mode) {
    int p = word_parity(w, mode);
    return mode == Parity::even_d ? p ^ 1 : p;
}

struct Mono {
    std::vector<Word> factors;  // sorted by minimal (= first) point

    bool operator==(const Mono& o) const { return factors == o.factors; }
    bool operator<(const Mono& o) const {
        size_t n = std::min(factors.size(), o.factors.size());
        for (size_t i = 0; i < n; i++) {
            if (factors[i] != o.factors[i])
                return factors[i] < o.factors[i];
        }
        return factors.size() < o.factors.size();
    }

    // Sum of factor parities, plus one per product sign in even mode.
    int parity(Parity mode) const {
        int p = 0;
        for (const auto& f : factors)
            p ^= word_parity(f, mode);
        if (mode == Parity::even_d && !factors.empty())
            p ^= (factors.size() - 1) & 1;
        return p;
    }

    int points() const {
        int n = 0;
        for (const auto& f : factors)
            n += (int)f.size();
        return n;
    }

    int star_count() const {
        int n = 0;
        for (const auto& f : factors)
            for (Gen g : f)
                n += gen_star(g);
        return n;
    }

    // Complexity: sum over groups of (size - 1) plus the number of stars.
    int complexity() const {
        int i = star_count();
        for (const auto& f : factors)
            i += (int)f.size() - 1;
        return i;
    }

    // Weight parity p = i(d-1) - j mod 2; this is the homological grading
    // the differential is odd for.
    int weight_parity(Parity mode) const {
        int i = complexity(), j = points();
        return mode == Parity::odd_d ? j & 1 : (i + j) & 1;
    }

    bool has_isolated_simple_point() const {
        for (const auto& f : factors)
            if (f.size() == 1 && !gen_star(f[0]))
                return true;
        return false;
    }

    // Points must be exactly 1..j, each used once (a star shares its point
    // with nothing: one generator per point).
    void check_valid() const {
        std::vector<char> seen(points() + 1, 0);
        for (const auto& f : factors) {
            if (f.empty())
                throw Error("empty factor");
            for (Gen g : f) {
                int p = gen_point(g);
                if (p < 1 || p > points() || seen[p])
                    throw Error("monomial points are not 1..j");
                seen[p] = 1;
            }
            for (size_t k = 1; k < f.size(); k++)
                if (f[k] < f[0])
                    throw Error("factor not in left-normed canonical form");
        }
        for (size_t k = 1; k < factors.size(); k++)
            if (!(factors[k - 1][0] < factors[k][0]))
                throw Error("factors not sorted by minimal point");
    }
};

inline const Mono kTrivialMono{};  // empty product, bidegree (0,0)

}  // namespace bdiag
