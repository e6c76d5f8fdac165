#include "bdiag/insertion.hpp"

namespace bdiag {

int weight_parity(const Element& e) {
    if (e.is_zero())
        return 0;
    if (!e.homogeneous())
        throw Error("weight parity requires a homogeneous element");
    return e.terms().begin()->first.weight_parity(e.mode());
}

Element star_map(const Element& a) {
    if (!a.is_zero() && a.mode() != Parity::even_d)
        throw Error("star map lives on the starred even complex");
    Element out(Parity::even_d);
    Element starred_gen(Parity::even_d, Mono{{{make_gen(1, true)}}});
    for (const auto& [m, c] : a.terms()) {
        int p = m.weight_parity(Parity::even_d);
        Int sgn((p ^ 1) ? -1 : 1);  // (-1)^{p-1}
        for (const auto& f : m.factors)
            for (Gen g : f)
                if (!gen_star(g))
                    out += insert_squeezed(m, gen_point(g), starred_gen) * (c * sgn);
    }
    return out;
}

Element circle_map(const Element& a) {
    if (!a.is_zero() && a.mode() != Parity::even_d)
        throw Error("circle map lives on the starred even complex");
    Element out(Parity::even_d);
    for (const auto& [m, c] : a.terms()) {
        int p = m.weight_parity(Parity::even_d);
        Int sgn((p ^ 1) ? -1 : 1);
        out += delta(Element(Parity::even_d, m)) * (c * sgn);
    }
    return out;
}

Element star_star_map(const Element& a) { return star_map(a) + circle_map(a); }

namespace {

Element insert_value_at(const Element& a, const Mono& bm, int t, bool starred, TriangleKind kind) {
    switch (kind) {
        case TriangleKind::plain:
            return insert_squeezed(bm, t, a);
        case TriangleKind::bar:
            return insert_squeezed(bm, t, starred ? star_map(a) : a);
        case TriangleKind::barbar:
            return starred ? insert_squeezed(bm, t, circle_map(a)) : Element(a.mode());
        case TriangleKind::full:
            return insert_squeezed(bm, t, starred ? star_star_map(a) : a);
    }
    throw Error("bad insertion kind");
}

}  // namespace

Element triangle_j(const Element& a, const Element& b, int j, TriangleKind kind) {
    a.check_mode(b);
    Parity mode = a.is_zero() ? b.mode() : a.mode();
    Element out(mode);
    if (j < 1)
        throw Error("slots are numbered from one");
    for (const auto& [bm, cb] : b.terms()) {
        if (j > bm.points())
            continue;
        bool starred = false;
        for (const auto& f : bm.factors)
            for (Gen g : f)
                if (gen_point(g) == j)
                    starred = gen_star(g);
        out += insert_value_at(a, bm, j, starred, kind) * cb;
    }
    return out;
}

Element triangle(const Element& a, const Element& b, TriangleKind kind) {
    a.check_mode(b);
    Parity mode = a.is_zero() ? b.mode() : a.mode();
    Element out(mode);
    int jmax = 0;
    for (const auto& [bm, cb] : b.terms())
        jmax = std::max(jmax, bm.points());
    for (int j = 1; j <= jmax; j++)
        out += triangle_j(a, b, j, kind);
    return out;
}

TriangleKind triangle_kind_for(Variant v, Parity mode) {
    switch (v) {
        case Variant::B:
        case Variant::B0:
        case Variant::GenB:
            return TriangleKind::plain;
        case Variant::Bstar:
        case Variant::GenBstar:
            if (mode == Parity::even_d)
                return TriangleKind::full;
            throw Error("no insertion calculus on the starred odd complex");
    }
    throw Error("bad variant");
}

Element kirillov_bracket(const Element& a, const Element& b, Variant v) {
    a.check_mode(b);
    Parity mode = a.is_zero() ? b.mode() : a.mode();
    TriangleKind kind = triangle_kind_for(v, mode);
    for (const Element* e : {&a, &b})
        for (const auto& [m, c] : e->terms())
            if (!mono_in_variant(m, v))
                throw Error("diagram not in variant " + variant_name(v));
    int pa = weight_parity(a), pb = weight_parity(b);
    Int sgn(((pa ^ 1) & (pb ^ 1)) ? 1 : -1);  // -(-1)^{(p(A)-1)(p(B)-1)}
    return triangle(a, b, kind) + triangle(b, a, kind) * sgn;
}

}  // namespace bdiag
