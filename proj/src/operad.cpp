#include "bdiag/operad.hpp"

#include <algorithm>
#include <array>

namespace bdiag {

Parity operad_parity(OperadKind k) { return k == OperadKind::poisson ? Parity::odd_d : Parity::even_d; }

Variant operad_variant(OperadKind k) { return k == OperadKind::bv ? Variant::GenBstar : Variant::GenB; }

OperadKind operad_kind_from_name(const std::string& s) {
    if (s == "poisson") return OperadKind::poisson;
    if (s == "gerstenhaber") return OperadKind::gerstenhaber;
    if (s == "bv") return OperadKind::bv;
    throw Error("unknown operad kind: " + s);
}

std::string operad_kind_name(OperadKind k) {
    switch (k) {
        case OperadKind::poisson: return "poisson";
        case OperadKind::gerstenhaber: return "gerstenhaber";
        case OperadKind::bv: return "bv";
    }
    return "?";
}

OperadElement op_element(OperadKind k, Element val, int arity) {
    for (const auto& [m, c] : val.terms()) {
        if (m.points() != arity)
            throw Error("arity mismatch");
        if (!mono_in_variant(m, operad_variant(k)))
            throw Error("element not in the operad's diagram space");
    }
    if (!val.is_zero() && val.mode() != operad_parity(k))
        throw Error("parity mode mismatch");
    return {std::move(val), arity};
}

OperadElement op_identity(OperadKind k) {
    return {Element(operad_parity(k), Mono{{{make_gen(1, false)}}}), 1};
}

OperadElement op_multiplication(OperadKind k) {
    return {Element(operad_parity(k), Mono{{{make_gen(1, false)}, {make_gen(2, false)}}}), 2};
}

int hochschild_degree(const Mono& m, Parity mode) { return m.weight_parity(mode) ^ 1; }

namespace {

TriangleKind op_kind(OperadKind k) {
    return k == OperadKind::bv ? TriangleKind::full : TriangleKind::plain;
}

// split an element into its composition-degree classes (0 and 1)
std::pair<Element, Element> degree_classes(const Element& e, Parity mode) {
    Element even(mode), odd(mode);
    for (const auto& [m, c] : e.terms())
        (hochschild_degree(m, mode) ? odd : even).add_term(m, c);
    return {even, odd};
}

// sequential left-to-right substitution at the given slots (tracking the
// point offsets of earlier insertions), no prefactor
Element insert_at_slots(OperadKind k, const Element& x, const std::vector<int>& slots,
                        const std::vector<Element>& vals) {
    Element cur = x;
    int offset = 0;
    for (size_t p = 0; p < slots.size(); p++) {
        cur = triangle_j(vals[p], cur, slots[p] + offset, op_kind(k));
        int pts = 1;
        for (const auto& [m, c] : vals[p].terms()) {
            pts = m.points();
            break;
        }
        offset += pts - 1;
    }
    return cur;
}

}  // namespace

OperadElement gamma(OperadKind k, const OperadElement& x, const std::vector<OperadElement>& ys) {
    if ((int)ys.size() != x.arity)
        throw Error("arity mismatch: gamma needs one argument per slot");
    Parity mode = operad_parity(k);
    int total = 0;
    for (const auto& y : ys)
        total += y.arity;
    // distribute over the composition-degree classes of each argument
    std::vector<std::array<Element, 2>> classes;
    for (const auto& y : ys) {
        auto [ev, od] = degree_classes(y.val, mode);
        classes.push_back({ev, od});
    }
    Element out(mode);
    std::vector<int> pick(ys.size(), 0);
    while (true) {
        bool nonzero = true;
        int exponent = 0, prefix = 0;
        for (size_t p = 0; p < ys.size(); p++) {
            if (classes[p][pick[p]].is_zero()) {
                nonzero = false;
                break;
            }
            exponent ^= pick[p] & (prefix & 1);
            prefix += ys[p].arity;
        }
        if (nonzero) {
            std::vector<int> slots(ys.size());
            std::vector<Element> vals(ys.size());
            for (size_t p = 0; p < ys.size(); p++) {
                slots[p] = (int)p + 1;
                vals[p] = classes[p][pick[p]];
            }
            out += insert_at_slots(k, x.val, slots, vals) * Int(exponent ? -1 : 1);
        }
        size_t p = 0;
        for (; p < pick.size(); p++) {
            if (++pick[p] < 2)
                break;
            pick[p] = 0;
        }
        if (p == pick.size())
            break;
    }
    return {out, total};
}

OperadElement brace(OperadKind k, const OperadElement& x, const std::vector<OperadElement>& ys) {
    Parity mode = operad_parity(k);
    int m = (int)ys.size();
    int total = x.arity;
    for (const auto& y : ys)
        total += y.arity - 1;
    if (m == 0)
        return {x.val, x.arity};
    Element out(mode);
    std::vector<Element> vals;
    for (const auto& y : ys)
        vals.push_back(y.val);
    // increasing slot tuples
    std::vector<int> t(m);
    for (int p = 0; p < m; p++)
        t[p] = p + 1;
    if (m > x.arity)
        return {Element(mode), std::max(total, 0)};
    while (true) {
        out += insert_at_slots(k, x.val, t, vals);
        int p = m - 1;
        while (p >= 0 && t[p] == x.arity - (m - 1 - p))
            p--;
        if (p < 0)
            break;
        t[p]++;
        for (int q = p + 1; q < m; q++)
            t[q] = t[q - 1] + 1;
    }
    return {out, total};
}

OperadElement circ(OperadKind k, const OperadElement& x, const OperadElement& y) {
    return brace(k, x, {y});
}

OperadElement op_lie_bracket(OperadKind k, const OperadElement& x, const OperadElement& y) {
    Parity mode = operad_parity(k);
    auto [xe, xo] = degree_classes(x.val, mode);
    auto [ye, yo] = degree_classes(y.val, mode);
    OperadElement out{Element(mode), x.arity + y.arity - 1};
    for (int dx = 0; dx < 2; dx++) {
        for (int dy = 0; dy < 2; dy++) {
            OperadElement a{dx ? xo : xe, x.arity};
            OperadElement b{dy ? yo : ye, y.arity};
            if (a.is_zero() || b.is_zero())
                continue;
            out.val += circ(k, a, b).val;
            out.val += circ(k, b, a).val * Int((dx & dy) ? 1 : -1);
        }
    }
    return out;
}

OperadElement hochschild_diff(OperadKind k, const OperadElement& x) {
    Parity mode = operad_parity(k);
    if (x.arity == 0)
        return {Element(mode), 1};  // normalized complex: the unit is a cycle
    OperadElement m2 = op_multiplication(k);
    auto [xe, xo] = degree_classes(x.val, mode);
    OperadElement out{Element(mode), x.arity + 1};
    for (int dx = 0; dx < 2; dx++) {
        OperadElement a{dx ? xo : xe, x.arity};
        if (a.is_zero())
            continue;
        out.val += circ(k, m2, a).val;
        out.val += circ(k, a, m2).val * Int(dx ? 1 : -1);  // -(-1)^{|x|}
    }
    return out;
}

OperadElement hochschild_product(OperadKind k, const OperadElement& x, const OperadElement& y) {
    Parity mode = operad_parity(k);
    OperadElement m2 = op_multiplication(k);
    auto [xe, xo] = degree_classes(x.val, mode);
    OperadElement out{Element(mode), x.arity + y.arity};
    for (int dx = 0; dx < 2; dx++) {
        OperadElement a{dx ? xo : xe, x.arity};
        if (a.is_zero())
            continue;
        Element term = brace(k, m2, {a, y}).val;
        out.val += term * Int(dx ? 1 : -1);  // (-1)^{|x|+1}
    }
    return out;
}

OperadElement op_permute(OperadKind, const OperadElement& x, const std::vector<int>& perm) {
    if ((int)perm.size() != x.arity + 1)
        throw Error("permutation size mismatch");
    return {permute_points(x.val, perm), x.arity};
}

SignTable diagram_isomorphism(OperadKind k, int arity_max) {
    Parity mode = operad_parity(k);
    Variant v = operad_variant(k);
    SignTable table;
    table.verified = true;

    int i_top = 2 * arity_max + 1;
    for (int i = 0; i <= i_top; i++) {
        // bases and both differentials per arity
        std::map<int, std::vector<Mono>> bases;
        std::map<int, std::map<Mono, int>> index;
        for (int n = std::max(1, i == 0 ? 1 : 1); n <= arity_max + 1; n++) {
            bases[n] = enumerate_basis(v, mode, i, n);
            for (size_t p = 0; p < bases[n].size(); p++)
                index[n][bases[n][p]] = (int)p;
        }
        // constraint edges: sign(target) = ratio * sign(source) per entry
        std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, int>>> adj;
        bool shapes_ok = true;
        for (int n = 1; n <= arity_max; n++) {
            for (size_t c = 0; c < bases[n].size(); c++) {
                Element hd = hochschild_diff(k, {Element(mode, bases[n][c]), n}).val;
                Element gd = diff_mono(bases[n][c], v, mode);
                std::map<Mono, Int> gmap;
                for (const auto& [m, cc] : gd.terms())
                    gmap[m] = cc;
                if (hd.size() != gmap.size())
                    shapes_ok = false;
                for (const auto& [m, hc] : hd.terms()) {
                    auto git = gmap.find(m);
                    if (git == gmap.end() || git->second.abs() != hc.abs()) {
                        shapes_ok = false;
                        continue;
                    }
                    int ratio = git->second == hc ? 1 : -1;
                    auto src = std::make_pair(n, (int)c);
                    auto tgt = std::make_pair(n + 1, index[n + 1].at(m));
                    adj[src].push_back({tgt, ratio});
                    adj[tgt].push_back({src, ratio});
                }
            }
        }
        if (!shapes_ok)
            table.verified = false;
        // two-color each connected component
        std::map<std::pair<int, int>, int> sign;
        for (int n = 1; n <= arity_max + 1; n++)
            for (size_t c = 0; c < bases[n].size(); c++) {
                auto seed = std::make_pair(n, (int)c);
                if (sign.count(seed))
                    continue;
                sign[seed] = 1;
                std::vector<std::pair<int, int>> queue = {seed};
                while (!queue.empty()) {
                    auto node = queue.back();
                    queue.pop_back();
                    auto it = adj.find(node);
                    if (it == adj.end())
                        continue;
                    for (const auto& [next, ratio] : it->second) {
                        int want = sign[node] * ratio;
                        auto hit = sign.find(next);
                        if (hit == sign.end()) {
                            sign[next] = want;
                            queue.push_back(next);
                        } else if (hit->second != want) {
                            table.verified = false;
                        }
                    }
                }
            }
        for (const auto& [np, s] : sign)
            table.sign[{i, np.first, np.second}] = s;
    }
    return table;
}

BigradedComplex hochschild_complex(OperadKind k, int arity_max) {
    Parity mode = operad_parity(k);
    Variant v = operad_variant(k);
    int i_top = k == OperadKind::bv ? 2 * (arity_max + 1) : arity_max;
    return BigradedComplex::build(
        v, mode, i_top, [arity_max](int) { return arity_max; },
        [k](const Mono& m, Parity) {
            return hochschild_diff(k, {Element(operad_parity(k), m), m.points()}).val;
        });
}

}  // namespace bdiag
