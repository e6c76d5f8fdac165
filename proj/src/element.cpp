#include "bdiag/element.hpp"

#include <set>

namespace bdiag {

std::vector<std::pair<Word, int>> assoc_expand(const Word& w, Parity mode) {
    std::vector<std::pair<Word, int>> terms;
    terms.push_back({Word{w[0]}, 1});
    int prefix_parity = gen_parity(w[0], mode);
    for (size_t k = 1; k < w.size(); k++) {
        Gen g = w[k];
        int gp = gen_parity(g, mode);
        int swap_sign = (prefix_parity & gp & 1) ? 1 : -1;  // -(-1)^{X~ g~}
        std::vector<std::pair<Word, int>> next;
        next.reserve(terms.size() * 2);
        for (auto& [t, s] : terms) {
            Word left = t;
            left.push_back(g);
            next.push_back({std::move(left), s});
            Word right;
            right.reserve(t.size() + 1);
            right.push_back(g);
            right.insert(right.end(), t.begin(), t.end());
            next.push_back({std::move(right), s * swap_sign});
        }
        terms = std::move(next);
        prefix_parity ^= gp;
    }
    return terms;
}

std::vector<std::pair<Word, Int>> word_bracket(const Word& u, const Word& v, Parity mode) {
    int pu = word_parity(u, mode), pv = word_parity(v, mode);
    int m_u = gen_point(u[0]), m_v = gen_point(v[0]);
    for (Gen g : u)
        m_u = std::min(m_u, gen_point(g));
    for (Gen g : v)
        m_v = std::min(m_v, gen_point(g));
    bool min_in_u = m_u < m_v;
    int m = std::min(m_u, m_v);

    auto U = assoc_expand(u, mode);
    auto V = assoc_expand(v, mode);
    // [u,v] = u v - (-1)^{u~ v~} v u in the associative superalgebra; the
    // coefficients of the words starting with the minimal point are the
    // left-normed coordinates.
    std::map<Word, long long> coeffs;
    if (min_in_u) {
        for (auto& [a, sa] : U) {
            if (gen_point(a[0]) != m)
                continue;
            for (auto& [b, sb] : V) {
                Word w = a;
                w.insert(w.end(), b.begin(), b.end());
                coeffs[std::move(w)] += (long long)sa * sb;
            }
        }
    } else {
        int outer = (pu & pv & 1) ? 1 : -1;  // -(-1)^{u~ v~}
        for (auto& [b, sb] : V) {
            if (gen_point(b[0]) != m)
                continue;
            for (auto& [a, sa] : U) {
                Word w = b;
                w.insert(w.end(), a.begin(), a.end());
                coeffs[std::move(w)] += (long long)sa * sb * outer;
            }
        }
    }
    std::vector<std::pair<Word, Int>> out;
    for (auto& [w, c] : coeffs)
        if (c != 0)
            out.push_back({w, Int(c)});
    return out;
}

std::pair<Mono, int> sort_factors(std::vector<Word> arrangement, Parity mode) {
    std::vector<int> ex(arrangement.size());
    for (size_t i = 0; i < arrangement.size(); i++)
        ex[i] = factor_exchange_parity(arrangement[i], mode);
    int exponent = 0;
    for (size_t i = 1; i < arrangement.size(); i++) {
        size_t j = i;
        while (j > 0 && gen_point(arrangement[j][0]) < gen_point(arrangement[j - 1][0])) {
            exponent ^= ex[j] & ex[j - 1];
            std::swap(arrangement[j], arrangement[j - 1]);
            std::swap(ex[j], ex[j - 1]);
            j--;
        }
    }
    Mono m;
    m.factors = std::move(arrangement);
    return {std::move(m), exponent ? -1 : 1};
}

namespace {

std::vector<int> mono_points(const Mono& m) {
    std::vector<int> pts;
    for (const auto& f : m.factors)
        for (Gen g : f)
            pts.push_back(gen_point(g));
    std::sort(pts.begin(), pts.end());
    return pts;
}

void check_disjoint(const Mono& a, const Mono& b) {
    auto pa = mono_points(a), pb = mono_points(b);
    std::vector<int> common;
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(common));
    if (!common.empty())
        throw Error("overlapping point sets");
}

}  // namespace

Element mono_product(const Mono& a, const Mono& b, Parity mode) {
    check_disjoint(a, b);
    std::vector<Word> arr = a.factors;
    arr.insert(arr.end(), b.factors.begin(), b.factors.end());
    auto [m, s] = sort_factors(std::move(arr), mode);
    return Element(mode, m, Int(s));
}

template <class C>
static ElementT<C> product_impl(const ElementT<C>& a, const ElementT<C>& b) {
    a.check_mode(b);
    Parity mode = a.terms().empty() ? b.mode() : a.mode();
    ElementT<C> r(mode);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Element p = mono_product(ma, mb, mode);
            for (const auto& [m, c] : p.terms())
                r.add_term(m, ca * cb * C(c));
        }
    return r;
}

Element product(const Element& a, const Element& b) { return product_impl(a, b); }
ElementQ product(const ElementQ& a, const ElementQ& b) { return product_impl(a, b); }

Element lie_bracket(const Element& a, const Element& b) {
    a.check_mode(b);
    Parity mode = a.terms().empty() ? b.mode() : a.mode();
    Element r(mode);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            check_disjoint(ma, mb);
            size_t k = ma.factors.size(), l = mb.factors.size();
            std::vector<int> ea(k), eb(l);
            for (size_t i = 0; i < k; i++)
                ea[i] = factor_exchange_parity(ma.factors[i], mode);
            for (size_t j = 0; j < l; j++)
                eb[j] = factor_exchange_parity(mb.factors[j], mode);
            std::vector<int> suff_a(k + 1, 0), pref_b(l + 1, 0);
            for (size_t i = k; i-- > 0;)
                suff_a[i] = suff_a[i + 1] ^ ea[i];
            for (size_t j = 0; j < l; j++)
                pref_b[j + 1] = pref_b[j] ^ eb[j];
            for (size_t i = 0; i < k; i++) {
                for (size_t j = 0; j < l; j++) {
                    int lam = (ea[i] & suff_a[i + 1]) ^ (eb[j] & pref_b[j]);
                    Int coef = ca * cb * Int(lam ? -1 : 1);
                    for (auto& [w, cw] : word_bracket(ma.factors[i], mb.factors[j], mode)) {
                        std::vector<Word> arr;
                        arr.reserve(k + l - 1);
                        for (size_t p = 0; p < k; p++)
                            if (p != i)
                                arr.push_back(ma.factors[p]);
                        arr.push_back(w);
                        for (size_t q = 0; q < l; q++)
                            if (q != j)
                                arr.push_back(mb.factors[q]);
                        auto [m, s] = sort_factors(std::move(arr), mode);
                        r.add_term(m, coef * cw * Int(s));
                    }
                }
            }
        }
    }
    return r;
}

Element poisson_bracket(const Element& a, const Element& b) {
    if ((!a.is_zero() && a.mode() != Parity::odd_d) || (!b.is_zero() && b.mode() != Parity::odd_d))
        throw Error("poisson bracket requires odd mode");
    return lie_bracket(a, b);
}

Element schouten_bracket(const Element& a, const Element& b) {
    if ((!a.is_zero() && a.mode() != Parity::even_d) || (!b.is_zero() && b.mode() != Parity::even_d))
        throw Error("schouten bracket requires even mode");
    return lie_bracket(a, b);
}

Element delta(const Element& a) {
    if (!a.is_zero() && a.mode() != Parity::even_d)
        throw Error("delta requires even mode");
    Element r(Parity::even_d);
    for (const auto& [ma, ca] : a.terms()) {
        size_t k = ma.factors.size();
        std::vector<int> par(k), ex(k), pref(k + 1, 0);
        for (size_t i = 0; i < k; i++) {
            par[i] = word_parity(ma.factors[i], Parity::even_d);
            ex[i] = par[i] ^ 1;
        }
        for (size_t i = 0; i < k; i++)
            pref[i + 1] = pref[i] ^ ex[i];
        for (size_t i = 0; i < k; i++) {
            for (size_t j = i + 1; j < k; j++) {
                int lam = (ex[i] & pref[i]) ^ (ex[j] & (pref[j] ^ ex[i]));
                int sgn = (lam ^ par[i]) ? -1 : 1;
                for (auto& [w, cw] : word_bracket(ma.factors[i], ma.factors[j], Parity::even_d)) {
                    std::vector<Word> arr;
                    arr.reserve(k - 1);
                    arr.push_back(w);
                    for (size_t p = 0; p < k; p++)
                        if (p != i && p != j)
                            arr.push_back(ma.factors[p]);
                    auto [m, s] = sort_factors(std::move(arr), Parity::even_d);
                    r.add_term(m, ca * cw * Int(sgn * s));
                }
            }
        }
    }
    return r;
}

namespace {

void collect_points(const Expr& e, std::vector<int>& pts) {
    if (e.kind == Expr::leaf) {
        pts.push_back(gen_point(e.gen));
        return;
    }
    for (const auto& s : e.sub)
        collect_points(s, pts);
}

Element eval_expr(const Expr& e, Parity mode) {
    switch (e.kind) {
        case Expr::leaf:
            return Element(mode, Mono{{Word{e.gen}}});
        case Expr::bracket:
            return lie_bracket(eval_expr(e.sub[0], mode), eval_expr(e.sub[1], mode));
        case Expr::product: {
            Element r(mode, kTrivialMono);
            for (const auto& s : e.sub)
                r = product(r, eval_expr(s, mode));
            return r;
        }
    }
    throw Error("bad expression");
}

}  // namespace

Element canonicalize(const Expr& e, Parity mode) {
    std::vector<int> pts;
    collect_points(e, pts);
    std::sort(pts.begin(), pts.end());
    for (size_t i = 1; i < pts.size(); i++)
        if (pts[i] == pts[i - 1])
            throw Error("duplicate generator: multilinearity violation");
    return eval_expr(e, mode);
}

Mono relabel(const Mono& m, const std::function<int(int)>& map) {
    Mono r = m;
    for (auto& f : r.factors)
        for (auto& g : f)
            g = make_gen(map(gen_point(g)), gen_star(g));
    return r;
}

Element relabel(const Element& e, const std::function<int(int)>& map) {
    Element r(e.mode());
    for (const auto& [m, c] : e.terms())
        r.add_term(relabel(m, map), c);
    return r;
}

Expr word_to_expr(const Word& w) {
    Expr e = Expr::make_leaf(w[0]);
    for (size_t k = 1; k < w.size(); k++)
        e = Expr::make_bracket(std::move(e), Expr::make_leaf(w[k]));
    return e;
}

Expr mono_to_expr(const Mono& m) {
    std::vector<Expr> fs;
    for (const auto& f : m.factors)
        fs.push_back(word_to_expr(f));
    return Expr::make_product(std::move(fs));
}

Element permute_points(const Element& e, const std::vector<int>& perm) {
    Element r(e.mode());
    for (const auto& [m, c] : e.terms()) {
        Expr ex = mono_to_expr(m);
        std::function<void(Expr&)> apply = [&](Expr& node) {
            if (node.kind == Expr::leaf) {
                int p = gen_point(node.gen);
                if (p < 1 || p >= (int)perm.size())
                    throw Error("permutation does not cover the points");
                node.gen = make_gen(perm[p], gen_star(node.gen));
            }
            for (auto& s : node.sub)
                apply(s);
        };
        apply(ex);
        r += canonicalize(ex, e.mode()) * c;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Substitution.

namespace {

struct SlotInfo {
    size_t factor = 0, pos = 0;
    int gens_before = 0, stars_before = 0;
    bool starred = false;
    bool found = false;
};

SlotInfo locate(const Mono& b, int t0) {
    SlotInfo s;
    for (size_t fi = 0; fi < b.factors.size() && !s.found; fi++) {
        for (size_t k = 0; k < b.factors[fi].size(); k++) {
            Gen g = b.factors[fi][k];
            if (gen_point(g) == t0) {
                s.factor = fi;
                s.pos = k;
                s.starred = gen_star(g);
                s.found = true;
                break;
            }
            s.gens_before++;
            s.stars_before += gen_star(g);
        }
    }
    return s;
}

Element insert_impl(const Mono& b, int t0, const Element& a, const std::function<int(int)>& map_b,
                    const std::function<int(int)>& map_a) {
    Parity mode = a.mode();
    SlotInfo slot = locate(b, t0);
    if (!slot.found)
        throw Error("missing point: " + std::to_string(t0));

    std::vector<Word> others;
    for (size_t fi = 0; fi < b.factors.size(); fi++)
        if (fi != slot.factor)
            others.push_back(relabel(Mono{{b.factors[fi]}}, map_b).factors[0]);
    const Word& host = b.factors[slot.factor];

    Element out(mode);
    for (const auto& [ma, ca] : a.terms()) {
        int a_parity = ma.parity(mode);
        int exponent;
        if (mode == Parity::odd_d) {
            exponent = ((a_parity ^ 1) & 1) * slot.gens_before;
        } else {
            int eps0 = slot.starred ? 1 : 0;
            exponent = ((a_parity ^ eps0) & 1) * ((int)slot.factor + slot.stars_before);
        }
        Int sgn((exponent & 1) ? -1 : 1);
        Element value(mode, relabel(ma, map_a), Int(1));

        Element expanded(mode);
        if (host.size() == 1) {
            expanded = value;
        } else {
            Element acc = slot.pos == 0
                              ? value
                              : Element(mode, Mono{{Word{make_gen(map_b(gen_point(host[0])), gen_star(host[0]))}}});
            for (size_t k = 1; k < host.size(); k++) {
                Element leaf =
                    k == slot.pos
                        ? value
                        : Element(mode, Mono{{Word{make_gen(map_b(gen_point(host[k])), gen_star(host[k]))}}});
                acc = lie_bracket(acc, leaf);
            }
            expanded = std::move(acc);
        }

        for (const auto& [me, ce] : expanded.terms()) {
            std::vector<Word> arr;
            arr.reserve(others.size() + me.factors.size());
            for (size_t p = 0; p < slot.factor; p++)
                arr.push_back(others[p]);
            for (const auto& f : me.factors)
                arr.push_back(f);
            for (size_t p = slot.factor; p < others.size(); p++)
                arr.push_back(others[p]);
            auto [m, s] = sort_factors(std::move(arr), mode);
            out.add_term(m, ca * ce * sgn * Int(s));
        }
    }
    return out;
}

std::vector<int> element_point_set(const Element& a) {
    std::vector<int> pts;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        auto p = mono_points(m);
        if (first) {
            pts = p;
            first = false;
        } else if (p != pts) {
            throw Error("substituted element has mixed point sets");
        }
    }
    return pts;
}

}  // namespace

Element insert_shared(const Mono& b, int t0, const Element& a) {
    auto a_pts = element_point_set(a);
    std::vector<int> all;
    for (const auto& f : b.factors)
        for (Gen g : f)
            if (gen_point(g) != t0)
                all.push_back(gen_point(g));
    for (int p : a_pts) {
        if (std::find(all.begin(), all.end(), p) != all.end())
            throw Error("point collision: diagram not insertable");
        all.push_back(p);
    }
    std::sort(all.begin(), all.end());
    auto rank = [all](int p) {
        return (int)(std::lower_bound(all.begin(), all.end(), p) - all.begin()) + 1;
    };
    return insert_impl(b, t0, a, rank, rank);
}

Element insert_squeezed(const Mono& b, int t0, const Element& a) {
    int alpha = a.is_zero() ? 0 : (int)element_point_set(a).size();
    auto map_b = [t0, alpha](int p) { return p < t0 ? p : p + alpha - 1; };
    auto map_a = [t0](int p) { return t0 + p - 1; };
    return insert_impl(b, t0, a, map_b, map_a);
}

}  // namespace bdiag
