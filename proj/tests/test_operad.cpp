#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdiag/operad.hpp"
#include "bdiag/parse.hpp"

using namespace bdiag;

namespace {

int hd_of(const OperadElement& x, Parity mode) {
    return hochschild_degree(x.val.terms().begin()->first, mode);
}

std::vector<OperadElement> basis_pool(OperadKind k, int arity_max) {
    Parity mode = operad_parity(k);
    Variant v = operad_variant(k);
    std::vector<OperadElement> pool;
    for (int n = 1; n <= arity_max; n++) {
        int itop = k == OperadKind::bv ? 2 * n - 1 : n - 1;
        for (int i = 0; i <= itop; i++)
            for (const auto& m : enumerate_basis(v, mode, i, n))
                pool.push_back({Element(mode, m), n});
    }
    return pool;
}

// Right side of the brace composition identity: every interleaving of the
// inner arguments among the outer ones, each inner argument swallowing a
// consecutive run, signed by the arguments it moved past.
Element brace_identity_rhs(OperadKind k, const OperadElement& x, const std::vector<OperadElement>& xs,
                           const std::vector<OperadElement>& ys) {
    Parity mode = operad_parity(k);
    int m = (int)xs.size(), n = (int)ys.size();
    Element out(mode);
    std::vector<int> iv(m), jv(m);
    std::function<void(int, int)> rec = [&](int p, int from) {
        if (p == m) {
            int exponent = 0;
            for (int q = 0; q < m; q++) {
                int before = 0;
                for (int t = 0; t < iv[q]; t++)
                    before ^= hd_of(ys[t], mode);
                exponent ^= hd_of(xs[q], mode) & before;
            }
            std::vector<OperadElement> args;
            int at = 0;
            for (int q = 0; q < m; q++) {
                while (at < iv[q])
                    args.push_back(ys[at++]);
                std::vector<OperadElement> inner(ys.begin() + iv[q], ys.begin() + jv[q]);
                OperadElement sub = brace(k, xs[q], inner);
                if (sub.is_zero())
                    return;
                args.push_back(sub);
                at = jv[q];
            }
            while (at < n)
                args.push_back(ys[at++]);
            out += brace(k, x, args).val * Int(exponent ? -1 : 1);
            return;
        }
        for (int i = from; i <= n; i++)
            for (int j = i; j <= n; j++) {
                iv[p] = i;
                jv[p] = j;
                rec(p + 1, j);
            }
    };
    rec(0, 0);
    return out;
}

}  // namespace

TEST_CASE("composition units") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        OperadElement id = op_identity(k);
        for (const auto& x : basis_pool(k, 3)) {
            std::vector<OperadElement> ids(x.arity, id);
            CHECK(gamma(k, x, ids) == x);
            CHECK(gamma(k, id, {x}) == x);
            CHECK(brace(k, x, {}) == x);
        }
    }
}

TEST_CASE("composing the product with itself gives the flat product") {
    OperadKind k = OperadKind::poisson;
    OperadElement m2 = op_multiplication(k);
    OperadElement got = gamma(k, m2, {m2, op_identity(k)});
    // oracle: direct diagram substitution at the first slot
    Element expect = insert_squeezed(Mono{{{make_gen(1, false)}, {make_gen(2, false)}}}, 1, m2.val);
    CHECK(got.val == expect);
    CHECK(got.arity == 3);
    CHECK(got.val == gamma(k, m2, {op_identity(k), m2}).val);
}

TEST_CASE("composition associativity, strict on even-degree tails") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        Parity mode = operad_parity(k);
        auto pool = basis_pool(k, 2);
        std::vector<OperadElement> evens = {op_identity(k)};
        for (const auto& x : pool)
            if (hd_of(x, mode) == 0)
                evens.push_back(x);
        for (const auto& x : pool) {
            if (x.arity != 2)
                continue;
            for (const auto& y1 : pool)
                for (const auto& y2 : evens)
                    for (const auto& z : pool) {
                        if (y1.arity != 1 || x.arity + y2.arity + z.arity > 5)
                            continue;
                        std::vector<OperadElement> zs = {z};
                        std::vector<OperadElement> ids(y2.arity, op_identity(k));
                        for (int q = 0; q < y2.arity; q++)
                            zs.push_back(op_identity(k));
                        OperadElement lhs = gamma(k, gamma(k, x, {y1, y2}), zs);
                        OperadElement rhs = gamma(k, x, {gamma(k, y1, {z}), gamma(k, y2, ids)});
                        CHECK(lhs == rhs);
                    }
        }
    }
}

TEST_CASE("brace composition identity") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        auto pool = basis_pool(k, 2);
        long long checked = 0;
        // x o y = x{y}
        for (const auto& x : pool)
            for (const auto& y : pool)
                CHECK(circ(k, x, y) == brace(k, x, {y}));
        // (m, n) = (1,1), (2,1), (1,2) exhaustively on small elements
        for (const auto& x : pool)
            for (const auto& a : pool)
                for (const auto& b : pool) {
                    if (x.arity + a.arity + b.arity > 5)
                        continue;
                    Element l11 = brace(k, brace(k, x, {a}), {b}).val;
                    CHECK(l11 == brace_identity_rhs(k, x, {a}, {b}));
                    checked++;
                }
        // (2,1) and (1,2) on a smaller slice
        for (const auto& x : pool) {
            if (x.arity != 2)
                continue;
            for (const auto& a : pool)
                for (const auto& b : pool)
                    for (const auto& c : pool) {
                        if (a.arity + b.arity + c.arity > 3)
                            continue;
                        OperadElement inner21 = brace(k, x, {a, b});
                        CHECK(brace(k, inner21, {c}).val == brace_identity_rhs(k, x, {a, b}, {c}));
                        OperadElement inner12 = brace(k, x, {a});
                        CHECK(brace(k, inner12, {b, c}).val == brace_identity_rhs(k, x, {a}, {b, c}));
                    }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("bracket structure") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        Parity mode = operad_parity(k);
        OperadElement m2 = op_multiplication(k);
        CHECK(circ(k, m2, m2).is_zero());  // associativity of the flat product
        CHECK(op_lie_bracket(k, m2, m2).is_zero());
        auto pool = basis_pool(k, 2);
        for (const auto& x : pool)
            for (const auto& y : pool) {
                int dx = hd_of(x, mode), dy = hd_of(y, mode);
                CHECK(op_lie_bracket(k, x, y).val ==
                      op_lie_bracket(k, y, x).val * Int((dx & dy) ? 1 : -1));
            }
        for (const auto& x : pool)
            for (const auto& y : pool)
                for (const auto& z : pool) {
                    if (x.arity + y.arity + z.arity > 5)
                        continue;
                    int dx = hd_of(x, mode), dy = hd_of(y, mode);
                    Element j1 = op_lie_bracket(k, x, op_lie_bracket(k, y, z)).val;
                    Element j2 = op_lie_bracket(k, op_lie_bracket(k, x, y), z).val +
                                 op_lie_bracket(k, y, op_lie_bracket(k, x, z)).val *
                                     Int((dx & dy) ? -1 : 1);
                    CHECK(j1 == j2);
                }
    }
}

TEST_CASE("gradings are additive") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        Parity mode = operad_parity(k);
        auto pool = basis_pool(k, 2);
        for (const auto& x : pool)
            for (const auto& y : pool) {
                int dx = hd_of(x, mode), dy = hd_of(y, mode);
                for (const auto& [m, c] : circ(k, x, y).val.terms())
                    CHECK(hochschild_degree(m, mode) == (dx ^ dy));
                for (const auto& [m, c] : hochschild_product(k, x, y).val.terms())
                    CHECK(hochschild_degree(m, mode) == (dx ^ dy ^ 1));
            }
    }
}

TEST_CASE("the differential squares to zero and kills the product generator") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        CHECK(hochschild_diff(k, op_multiplication(k)).is_zero());
        for (const auto& x : basis_pool(k, 4))
            CHECK(hochschild_diff(k, hochschild_diff(k, x)).is_zero());
    }
}

TEST_CASE("product supercommutativity homotopy") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        Parity mode = operad_parity(k);
        auto pool = basis_pool(k, 3);
        for (const auto& x : pool)
            for (const auto& y : pool) {
                if (x.arity + y.arity > 5)
                    continue;
                int dx = hd_of(x, mode), dy = hd_of(y, mode);
                Element lhs = hochschild_product(k, x, y).val +
                              hochschild_product(k, y, x).val * Int(((dx ^ 1) & (dy ^ 1)) ? 1 : -1);
                Element rhs = hochschild_diff(k, circ(k, x, y)).val -
                              circ(k, hochschild_diff(k, x), y).val -
                              circ(k, x, hochschild_diff(k, y)).val * Int(dx ? -1 : 1);
                CHECK(lhs == rhs * Int(dx ? -1 : 1));
            }
    }
}

TEST_CASE("bracket compatibility homotopy") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        Parity mode = operad_parity(k);
        auto pool = basis_pool(k, 2);
        for (const auto& x : pool)
            for (const auto& y : pool)
                for (const auto& z : pool) {
                    if (x.arity + y.arity + z.arity > 4)
                        continue;
                    int dx = hd_of(x, mode), dy = hd_of(y, mode);
                    Element lhs =
                        op_lie_bracket(k, x, hochschild_product(k, y, z)).val -
                        hochschild_product(k, op_lie_bracket(k, x, y), z).val +
                        hochschild_product(k, y, op_lie_bracket(k, x, z)).val *
                            Int((dx & (dy ^ 1)) ? 1 : -1);
                    Element rhs = hochschild_diff(k, brace(k, x, {y, z})).val -
                                  brace(k, hochschild_diff(k, x), {y, z}).val +
                                  brace(k, x, {hochschild_diff(k, y), z}).val * Int(dx ? 1 : -1) +
                                  brace(k, x, {y, hochschild_diff(k, z)}).val *
                                      Int((dx ^ dy) ? 1 : -1);
                    CHECK(lhs == rhs * Int((dx ^ dy ^ 1) ? -1 : 1));
                }
    }
}

TEST_CASE("arity components count generalized diagrams") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber}) {
        Parity mode = operad_parity(k);
        Variant v = operad_variant(k);
        for (int n = 1; n <= 4; n++) {
            long long total = 0, fact = 1;
            for (int i = 0; i < n; i++)
                total += (long long)enumerate_basis(v, mode, i, n).size();
            for (int i = 2; i <= n; i++)
                fact *= i;
            CHECK(total == fact);
        }
    }
    long long total = 0;
    for (int i = 0; i <= 3; i++)
        total += (long long)enumerate_basis(Variant::GenBstar, Parity::even_d, i, 2).size();
    CHECK(total == 8);  // starred components double per point
}

TEST_CASE("the starred generator composes to the star-star map") {
    OperadKind k = OperadKind::bv;
    Parity mode = operad_parity(k);
    OperadElement delta_gen{Element(mode, Mono{{{make_gen(1, true)}}}), 1};
    for (const auto& x : basis_pool(k, 3)) {
        OperadElement composed = gamma(k, delta_gen, {x});
        CHECK(composed.val == star_star_map(x.val));
        CHECK(gamma(k, delta_gen, {composed}).is_zero());
    }
}

TEST_CASE("defect identities of the chain operator") {
    // delta(a^b) = delta(a)^b + (-1)^{a~}a^delta(b) + (-1)^{a~-1}[a,b] in
    // the suspended parity a~ = diagram parity + 1, on glued products of
    // starred even diagrams; with the bracket compatibility and delta^2=0.
    Parity mode = Parity::even_d;
    auto pool = basis_pool(OperadKind::bv, 2);
    for (const auto& xa : pool)
        for (const auto& xb : pool) {
            if (xa.arity + xb.arity > 4)
                continue;
            const Mono& ma = xa.val.terms().begin()->first;
            int shift = ma.points();
            Element a = xa.val;
            Element b = relabel(xb.val, [shift](int p) { return p + shift; });
            int susp = ma.parity(mode) ^ 1;
            Element lhs = delta(product(a, b));
            Element rhs = product(delta(a), b) + product(a, delta(b)) * Int(susp ? -1 : 1) +
                          lie_bracket(a, b) * Int((susp ^ 1) ? -1 : 1);
            CHECK(lhs == rhs);
            Element dl = delta(lie_bracket(a, b));
            Element dr = lie_bracket(delta(a), b) +
                         lie_bracket(a, delta(b)) * Int((susp ^ 1) ? -1 : 1);
            CHECK(dl == dr);
            CHECK(delta(delta(product(a, b))).is_zero());
        }
}

TEST_CASE("sign certificates identify the two differentials") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        SignTable t = diagram_isomorphism(k, 3);
        CHECK(t.verified);
        CHECK(!t.sign.empty());
    }
}

TEST_CASE("hochschild homology equals the generalized-complex homology") {
    for (OperadKind k : {OperadKind::poisson, OperadKind::gerstenhaber, OperadKind::bv}) {
        int amax = 3;
        auto hc = hochschild_complex(k, amax);
        auto gc = BigradedComplex::build(operad_variant(k), operad_parity(k),
                                         k == OperadKind::bv ? 2 * (amax + 1) : amax,
                                         [amax](int) { return amax; });
        for (int n = 1; n <= amax; n++) {
            int itop = k == OperadKind::bv ? 2 * n - 1 : n - 1;
            for (int i = 0; i <= itop; i++)
                CHECK(hc.homology(i, n) == gc.homology(i, n));
        }
    }
}
