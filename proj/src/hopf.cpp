#include "bdiag/hopf.hpp"

namespace bdiag {

Element unit_element(Parity mode) { return Element(mode, kTrivialMono); }

namespace {

template <class C>
ElementT<C> hopf_product_impl(const ElementT<C>& a, const ElementT<C>& b) {
    a.check_mode(b);
    Parity mode = a.terms().empty() ? b.mode() : a.mode();
    ElementT<C> out(mode);
    for (const auto& [ma, ca] : a.terms()) {
        int shift = ma.points();
        for (const auto& [mb, cb] : b.terms()) {
            Mono shifted = relabel(mb, [shift](int p) { return p + shift; });
            Mono glued = ma;
            glued.factors.insert(glued.factors.end(), shifted.factors.begin(), shifted.factors.end());
            out.add_term(glued, ca * cb);
        }
    }
    return out;
}

template <class C>
TensorT<C> coproduct_impl(const Mono& m, Parity mode, const C& coef) {
    TensorT<C> out;
    size_t n = m.factors.size();
    std::vector<int> ex(n);
    for (size_t k = 0; k < n; k++)
        ex[k] = factor_exchange_parity(m.factors[k], mode);
    for (uint64_t mask = 0; mask < (1ull << n); mask++) {
        // mask bit set: factor goes to the left leg.  Every right-leg
        // factor moves right past the left-leg factors following it.
        int exponent = 0;
        int left_parity_after = 0;
        for (size_t k = n; k-- > 0;) {
            if ((mask >> k) & 1)
                left_parity_after ^= ex[k];
            else
                exponent ^= ex[k] & left_parity_after;
        }
        std::vector<Word> left, right;
        std::vector<int> lpts, rpts;
        for (size_t k = 0; k < n; k++) {
            if ((mask >> k) & 1) {
                left.push_back(m.factors[k]);
                for (Gen g : m.factors[k])
                    lpts.push_back(gen_point(g));
            } else {
                right.push_back(m.factors[k]);
                for (Gen g : m.factors[k])
                    rpts.push_back(gen_point(g));
            }
        }
        std::sort(lpts.begin(), lpts.end());
        std::sort(rpts.begin(), rpts.end());
        auto rank_of = [](const std::vector<int>& pts) {
            return [&pts](int p) {
                return (int)(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin()) + 1;
            };
        };
        Mono lm{left}, rm{right};
        lm = relabel(lm, rank_of(lpts));
        rm = relabel(rm, rank_of(rpts));
        C c = coef;
        if (exponent)
            c = -c;
        auto key = std::make_pair(lm, rm);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, c);
        else {
            it->second += c;
            if (it->second.is_zero())
                out.erase(it);
        }
    }
    return out;
}

template <class C>
void tensor_add(TensorT<C>& dst, const TensorT<C>& src) {
    for (const auto& [k, c] : src) {
        if (c.is_zero())
            continue;
        auto it = dst.find(k);
        if (it == dst.end())
            dst.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero())
                dst.erase(it);
        }
    }
}

}  // namespace

Element hopf_product(const Element& a, const Element& b) { return hopf_product_impl(a, b); }
ElementQ hopf_product(const ElementQ& a, const ElementQ& b) { return hopf_product_impl(a, b); }

Tensor coproduct(const Mono& m, Parity mode) { return coproduct_impl(m, mode, Int(1)); }

Tensor coproduct(const Element& e) {
    Tensor out;
    for (const auto& [m, c] : e.terms())
        tensor_add(out, coproduct_impl(m, e.mode(), c));
    return out;
}

TensorQ coproduct(const ElementQ& e) {
    TensorQ out;
    for (const auto& [m, c] : e.terms())
        tensor_add(out, coproduct_impl(m, e.mode(), c));
    return out;
}

Element HopfOps::mul(const Element& a, const Element& b) const {
    Element p = hopf_product(a, b);
    return var == Variant::B0 ? b0_reduce(p) : p;
}

ElementQ HopfOps::mul_q(const ElementQ& a, const ElementQ& b) const {
    ElementQ p = hopf_product(a, b);
    return var == Variant::B0 ? b0_reduce(p) : p;
}

Tensor HopfOps::cop(const Mono& m) const {
    Tensor t = coproduct(m, mode);
    if (var != Variant::B0)
        return t;
    Tensor out;
    for (const auto& [lr, c] : t) {
        Element l = b0_reduce(Element(mode, lr.first));
        Element r = b0_reduce(Element(mode, lr.second));
        for (const auto& [lm, lc] : l.terms())
            for (const auto& [rm, rc] : r.terms()) {
                auto key = std::make_pair(lm, rm);
                auto it = out.find(key);
                Int v = c * lc * rc;
                if (it == out.end())
                    out.emplace(key, v);
                else {
                    it->second += v;
                    if (it->second.is_zero())
                        out.erase(it);
                }
            }
    }
    return out;
}

TensorQ HopfOps::cop_q(const Mono& m) const {
    TensorQ out;
    for (const auto& [lr, c] : cop(m))
        out.emplace(lr, Rat(c));
    return out;
}

LinOp convolve(const LinOp& f, const LinOp& g, const HopfOps& ops) {
    return [f, g, ops](const Element& x) {
        Element out(x.mode());
        for (const auto& [m, c] : x.terms()) {
            for (const auto& [lr, s] : ops.cop(m)) {
                Element fl = f(Element(ops.mode, lr.first));
                Element gr = g(Element(ops.mode, lr.second));
                out += ops.mul(fl, gr) * (c * s);
            }
        }
        return out;
    };
}

namespace {

// cut the trivial component: x - unit * counit(x)
template <class C>
ElementT<C> reduced_part(const ElementT<C>& x) {
    ElementT<C> out(x.mode());
    for (const auto& [m, c] : x.terms())
        if (!m.factors.empty())
            out.add_term(m, c);
    return out;
}

template <class C>
C counit_of(const ElementT<C>& x) {
    auto it = x.terms().find(kTrivialMono);
    return it == x.terms().end() ? C(0) : it->second;
}

template <class C, class Mul, class Cop>
ElementT<C> power_impl(int k, const ElementT<C>& x, Parity mode, const Mul& mul, const Cop& cop) {
    if (k == 0) {
        ElementT<C> out(mode);
        out.add_term(kTrivialMono, counit_of(x));
        return out;
    }
    if (k == 1)
        return reduced_part(x);
    ElementT<C> out(mode);
    for (const auto& [m, c] : x.terms()) {
        for (const auto& [lr, s] : cop(m)) {
            if (lr.second.factors.empty())
                continue;  // right leg through (id - unit projector)
            ElementT<C> left = power_impl(k - 1, ElementT<C>(mode, lr.first), mode, mul, cop);
            if (left.is_zero())
                continue;
            out += mul(left, ElementT<C>(mode, lr.second)) * (c * s);
        }
    }
    return out;
}

}  // namespace

Element id_minus_unit_power(int k, const Element& e, const HopfOps& ops) {
    return power_impl(k, e, ops.mode, [&](const Element& a, const Element& b) { return ops.mul(a, b); },
                      [&](const Mono& m) { return ops.cop(m); });
}

Element antipode(const Element& e, const HopfOps& ops) {
    Element acc(ops.mode);
    int bound = 1;
    for (const auto& [m, c] : e.terms())
        bound = std::max(bound, m.points() + 1);
    for (int k = 0; k <= bound; k++) {
        Element t = id_minus_unit_power(k, e, ops);
        if (t.is_zero() && k > 0)
            break;
        acc += k % 2 ? -t : t;
    }
    return acc;
}

ElementQ primitive_projection_q(const ElementQ& e, const HopfOps& ops) {
    ElementQ acc(ops.mode);
    int bound = 1;
    for (const auto& [m, c] : e.terms())
        bound = std::max(bound, m.points() + 1);
    auto mul = [&](const ElementQ& a, const ElementQ& b) { return ops.mul_q(a, b); };
    auto cop = [&](const Mono& m) { return ops.cop_q(m); };
    for (int k = 1; k <= bound; k++) {
        ElementQ t = power_impl(k, e, ops.mode, mul, cop);
        if (t.is_zero())
            break;
        acc += t * Rat(Int(k % 2 ? 1 : -1), Int(k));
    }
    return acc;
}

ElementQ primitive_projection(const Element& e, const HopfOps& ops) {
    return primitive_projection_q(to_rational(e), ops);
}

bool is_primitive(const ElementQ& e, const HopfOps& ops) {
    TensorQ lhs;
    for (const auto& [m, c] : e.terms())
        tensor_add(lhs, [&] {
            TensorQ t;
            for (const auto& [lr, s] : ops.cop_q(m)) {
                auto it = t.find(lr);
                Rat v = s * c;
                if (it == t.end())
                    t.emplace(lr, v);
                else
                    it->second += v;
            }
            return t;
        }());
    TensorQ rhs;
    for (const auto& [m, c] : e.terms()) {
        rhs[{m, kTrivialMono}] += c;
        rhs[{kTrivialMono, m}] += c;
    }
    for (auto it = rhs.begin(); it != rhs.end();)
        it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
    return lhs == rhs;
}

std::vector<Mono> connected_components(const Mono& m) {
    if (m.factors.empty())
        return {};
    int j = m.points();
    std::vector<char> spanned(j + 1, 0);  // spanned[c]: some factor crosses c..c+1
    for (const auto& f : m.factors) {
        int lo = gen_point(f[0]), hi = lo;
        for (Gen g : f) {
            lo = std::min(lo, gen_point(g));
            hi = std::max(hi, gen_point(g));
        }
        for (int c = lo; c < hi; c++)
            spanned[c] = 1;
    }
    // segment id per point
    std::vector<int> seg(j + 1, 0), seg_lo(1, 1);
    for (int p = 2; p <= j; p++) {
        seg[p] = seg[p - 1] + (spanned[p - 1] ? 0 : 1);
        if (seg[p] == (int)seg_lo.size())
            seg_lo.push_back(p);
    }
    seg[1] = 0;
    std::vector<Mono> comps(seg_lo.size());
    for (const auto& f : m.factors) {
        int s = seg[gen_point(f[0])];
        comps[s].factors.push_back(f);
    }
    for (size_t s = 0; s < comps.size(); s++) {
        int off = seg_lo[s] - 1;
        comps[s] = relabel(comps[s], [off](int p) { return p - off; });
    }
    return comps;
}

}  // namespace bdiag
