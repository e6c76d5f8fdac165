#include "bdiag/complex.hpp"

namespace bdiag {

BigradedComplex BigradedComplex::build(Variant v, Parity mode, int i_max,
                                       std::function<int(int)> j_cap, DiffFn diff) {
    BigradedComplex c;
    c.var_ = v;
    c.mode_ = mode;
    c.i_max_ = i_max;
    c.j_cap_ = j_cap ? std::move(j_cap) : [](int i) { return 2 * i; };
    c.diff_ = diff ? std::move(diff)
                   : [v](const Mono& m, Parity p) { return diff_mono(m, v, p); };
    for (int i = 0; i <= i_max; i++) {
        for (int j = 0; j <= c.j_cap_(i) + 1; j++) {
            auto b = enumerate_basis(v, mode, i, j);
            auto& idx = c.index_[{i, j}];
            for (size_t k = 0; k < b.size(); k++)
                idx[b[k]] = (int)k;
            c.bases_[{i, j}] = std::move(b);
        }
    }
    return c;
}

const std::vector<Mono>& BigradedComplex::basis(int i, int j) const {
    static const std::vector<Mono> empty;
    auto it = bases_.find({i, j});
    return it == bases_.end() ? empty : it->second;
}

const ZMat& BigradedComplex::matrix(int i, int j) const {
    auto it = mats_.find({i, j});
    if (it != mats_.end())
        return it->second;
    if (!stored(i, j))
        throw Error("bidegree not built");
    const auto& src = basis(i, j);
    const auto& dst = basis(i, j + 1);
    auto tgt_idx = index_.find({i, j + 1});
    ZMat m((int)dst.size(), (int)src.size());
    for (size_t col = 0; col < src.size(); col++) {
        Element d = diff_(src[col], mode_);
        for (const auto& [mm, cc] : d.terms()) {
            if (tgt_idx == index_.end())
                throw Error("differential image left the built range");
            auto hit = tgt_idx->second.find(mm);
            if (hit == tgt_idx->second.end())
                throw Error("differential image misses the basis");
            m.at(hit->second, (int)col) = cc;
        }
    }
    return mats_.emplace(std::make_pair(i, j), std::move(m)).first->second;
}

ZMat BigradedComplex::column(const Element& e, int i, int j) const {
    auto idx = index_.find({i, j});
    if (idx == index_.end())
        throw Error("bidegree not built");
    ZMat col((int)basis(i, j).size(), 1);
    for (const auto& [m, c] : e.terms()) {
        auto hit = idx->second.find(m);
        if (hit == idx->second.end())
            throw Error("element outside the stored basis");
        col.at(hit->second, 0) = c;
    }
    return col;
}

Element BigradedComplex::from_column(const ZMat& col, int i, int j, int c) const {
    const auto& b = basis(i, j);
    Element e(mode_);
    for (int r = 0; r < col.rows(); r++)
        e.add_term(b[r], col.at(r, c));
    return e;
}

ZMat BigradedComplex::in_matrix(int i, int j) const {
    if (j == 0 || !stored(i, j - 1))
        return ZMat((int)basis(i, j).size(), 0);
    return matrix(i, j - 1);
}

HomologyGroup BigradedComplex::homology(int i, int j) const {
    return homology_group(matrix(i, j), in_matrix(i, j));
}

long long BigradedComplex::homology_rank(int i, int j) const {
    return homology_rank_q(matrix(i, j), in_matrix(i, j));
}

long long BigradedComplex::homology_rank_p(int i, int j, long long p) const {
    return homology_rank_mod_p(matrix(i, j), in_matrix(i, j), p);
}

QSpace homology_space_q(const BigradedComplex& c, int i, int j) {
    QSpace q;
    q.kernel = kernel_basis(c.matrix(i, j));
    ZMat in = j > 0 && c.stored(i, j - 1) ? c.matrix(i, j - 1) : ZMat(q.kernel.rows(), 0);
    q.boundaries = solve_in_span(q.kernel, in);
    q.hdim = q.kernel.cols() - rank_q(q.boundaries);
    return q;
}

ZMat chain_map_matrix(const std::function<Element(const Mono&)>& f, const BigradedComplex& src,
                      const BigradedComplex& dst, int i, int j) {
    const auto& sb = src.basis(i, j);
    ZMat m((int)dst.basis(i, j).size(), (int)sb.size());
    for (size_t col = 0; col < sb.size(); col++) {
        ZMat c = dst.column(f(sb[col]), i, j);
        for (int r = 0; r < c.rows(); r++)
            m.at(r, (int)col) = c.at(r, 0);
    }
    return m;
}

ZMat matrix_in_basis(Variant v, Parity mode, const std::vector<Element>& source,
                     const std::vector<Element>& target) {
    if (source.empty())
        return ZMat((int)target.size(), 0);
    auto prep = [&](const Element& e) { return v == Variant::B0 ? b0_reduce(e) : e; };
    std::vector<Element> src, tgt;
    for (const auto& e : source)
        src.push_back(prep(e));
    for (const auto& e : target)
        tgt.push_back(prep(e));
    int i = src[0].complexity(), j = src[0].points();
    for (const auto& e : src)
        if (!e.homogeneous() || e.is_zero() || e.complexity() != i || e.points() != j)
            throw Error("basis mismatch: source not a homogeneous basis");
    auto ambient = enumerate_basis(v, mode, i, j + 1);
    if (tgt.size() != ambient.size())
        throw Error("basis mismatch: target has the wrong dimension");
    std::map<Mono, int> idx;
    for (size_t k = 0; k < ambient.size(); k++)
        idx[ambient[k]] = (int)k;
    auto to_col = [&](const Element& e, ZMat& m, int col) {
        for (const auto& [mm, cc] : e.terms()) {
            auto it = idx.find(mm);
            if (it == idx.end())
                throw Error("basis mismatch: element outside the bidegree");
            m.at(it->second, col) = cc;
        }
    };
    ZMat t((int)ambient.size(), (int)tgt.size());
    for (size_t k = 0; k < tgt.size(); k++)
        to_col(tgt[k], t, (int)k);
    ZMat d((int)ambient.size(), (int)src.size());
    for (size_t k = 0; k < src.size(); k++)
        to_col(diff(src[k], v), d, (int)k);
    try {
        return solve_in_span(t, d);
    } catch (const Error&) {
        throw Error("basis mismatch: differential does not resolve in the target basis");
    }
}

int rank_q_concat(const ZMat& a, const ZMat& b) {
    if (a.rows() != b.rows())
        throw Error("matrix shape mismatch");
    ZMat m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++)
            m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); j++)
            m.at(i, a.cols() + j) = b.at(i, j);
    }
    return rank_q(m);
}

InducedMapReport check_induced_iso(const BigradedComplex& src, const BigradedComplex& dst,
                                   const std::function<Element(const Mono&)>& f, int i, int j) {
    InducedMapReport rep;
    ZMat fm = chain_map_matrix(f, src, dst, i, j);
    ZMat fm_next = chain_map_matrix(f, src, dst, i, j + 1);
    rep.chain_map = fm_next * src.matrix(i, j) == dst.matrix(i, j) * fm;

    HomologyGroup h1 = src.homology(i, j), h2 = dst.homology(i, j);
    rep.groups_match = h1 == h2;

    QSpace q1 = homology_space_q(src, i, j);
    QSpace q2 = homology_space_q(dst, i, j);
    // image of the source cycles inside the target cycle space; surjective
    // onto H2 iff it spans the cycles together with the boundaries
    ZMat fk = fm * q1.kernel;
    ZMat coords = solve_in_span(q2.kernel, fk);
    bool surjective = rank_q_concat(coords, q2.boundaries) == q2.kernel.cols();
    rep.iso_q = q1.hdim == q2.hdim && surjective;
    return rep;
}

}  // namespace bdiag
