#include "bdiag/diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace bdiag {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::B: return "b";
        case Variant::Bstar: return "bstar";
        case Variant::B0: return "b0";
        case Variant::GenB: return "gen-b";
        case Variant::GenBstar: return "gen-bstar";
    }
    return "?";
}

Variant variant_from_name(const std::string& s) {
    if (s == "b") return Variant::B;
    if (s == "bstar" || s == "b*") return Variant::Bstar;
    if (s == "b0") return Variant::B0;
    if (s == "gen-b") return Variant::GenB;
    if (s == "gen-bstar" || s == "gen-b*") return Variant::GenBstar;
    throw Error("unknown variant: " + s);
}

bool mono_in_variant(const Mono& m, Variant v) {
    bool generalized = v == Variant::GenB || v == Variant::GenBstar;
    bool stars_allowed = v == Variant::Bstar || v == Variant::GenBstar;
    for (const auto& f : m.factors) {
        if (f.size() == 1 && !gen_star(f[0]) && !generalized)
            return false;
        if (!stars_allowed)
            for (Gen g : f)
                if (gen_star(g))
                    return false;
    }
    return true;
}

Element project_nongeneralized(const Element& e) {
    Element r(e.mode());
    for (const auto& [m, c] : e.terms())
        if (!m.has_isolated_simple_point())
            r.add_term(m, c);
    return r;
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace {

void partitions_rec(const std::vector<int>& free_pts, std::vector<std::vector<int>>& blocks,
                    const std::function<void()>& emit) {
    if (free_pts.empty()) {
        emit();
        return;
    }
    int head = free_pts[0];
    std::vector<int> rest(free_pts.begin() + 1, free_pts.end());
    size_t n = rest.size();
    for (uint64_t mask = 0; mask < (1ull << n); mask++) {
        std::vector<int> block = {head};
        std::vector<int> remaining;
        for (size_t k = 0; k < n; k++)
            ((mask >> k) & 1 ? block : remaining).push_back(rest[k]);
        blocks.push_back(std::move(block));
        partitions_rec(remaining, blocks, emit);
        blocks.pop_back();
    }
}

void words_for_blocks(const std::vector<std::vector<int>>& blocks, uint64_t star_mask, size_t bi,
                      std::vector<Word>& factors, std::vector<Mono>& out) {
    if (bi == blocks.size()) {
        Mono m;
        m.factors = factors;
        std::sort(m.factors.begin(), m.factors.end(),
                  [](const Word& a, const Word& b) { return gen_point(a[0]) < gen_point(b[0]); });
        out.push_back(std::move(m));
        return;
    }
    const auto& blk = blocks[bi];
    auto mk = [&](int p) { return make_gen(p, (star_mask >> (p - 1)) & 1); };
    std::vector<int> tail(blk.begin() + 1, blk.end());
    std::sort(tail.begin(), tail.end());
    do {
        Word w;
        w.push_back(mk(blk[0]));
        for (int p : tail)
            w.push_back(mk(p));
        factors.push_back(std::move(w));
        words_for_blocks(blocks, star_mask, bi + 1, factors, out);
        factors.pop_back();
    } while (std::next_permutation(tail.begin(), tail.end()));
}

struct BasisKey {
    std::vector<int> sizes_desc;
    uint64_t stars;
    Mono mono;

    bool operator<(const BasisKey& o) const {
        if (sizes_desc != o.sizes_desc)
            return sizes_desc > o.sizes_desc;  // larger groups first
        if (stars != o.stars)
            return stars < o.stars;
        return mono < o.mono;
    }
};

}  // namespace

std::vector<Mono> enumerate_basis(Variant v, Parity mode, int i, int j) {
    if (i < 0 || j < 0)
        throw Error("negative bidegree");
    if (v == Variant::B0)
        return b0_space(mode, i, j).representatives();
    if (j >= 63)
        throw Error("point count out of range");

    bool stars_allowed = v == Variant::Bstar || v == Variant::GenBstar;
    bool generalized = v == Variant::GenB || v == Variant::GenBstar;
    if (j == 0)
        return i == 0 ? std::vector<Mono>{kTrivialMono} : std::vector<Mono>{};

    std::vector<BasisKey> keyed;
    std::vector<int> pts(j);
    for (int p = 0; p < j; p++)
        pts[p] = p + 1;
    std::vector<std::vector<int>> blocks;
    partitions_rec(pts, blocks, [&]() {
        int base_complexity = 0;
        for (const auto& b : blocks)
            base_complexity += (int)b.size() - 1;
        int stars_needed = i - base_complexity;
        if (stars_needed < 0 || (!stars_allowed && stars_needed > 0))
            return;
        uint64_t full = (1ull << j) - 1;
        for (uint64_t star_mask = 0; star_mask <= full; star_mask++) {
            if (__builtin_popcountll(star_mask) != stars_needed)
                continue;
            bool ok = true;
            for (const auto& b : blocks)
                if (b.size() == 1 && !((star_mask >> (b[0] - 1)) & 1) && !generalized)
                    ok = false;
            if (!ok)
                continue;
            std::vector<Word> factors;
            std::vector<Mono> monos;
            words_for_blocks(blocks, star_mask, 0, factors, monos);
            std::vector<int> sizes;
            for (const auto& b : blocks)
                sizes.push_back((int)b.size());
            std::sort(sizes.rbegin(), sizes.rend());
            for (auto& m : monos)
                keyed.push_back({sizes, star_mask, std::move(m)});
        }
    });
    std::sort(keyed.begin(), keyed.end());
    std::vector<Mono> out;
    out.reserve(keyed.size());
    for (auto& k : keyed)
        out.push_back(std::move(k.mono));
    return out;
}

// ---------------------------------------------------------------------------
// Differentials.

namespace {

int star_at(const Mono& m, int t) {
    for (const auto& f : m.factors)
        for (Gen g : f)
            if (gen_point(g) == t)
                return gen_star(g) ? 1 : 0;
    return -1;
}

}  // namespace

Element split_simple_point(const Mono& m, int t, Parity mode) {
    Element two(mode);
    two.add_term(Mono{{{make_gen(1, false)}, {make_gen(2, false)}}}, Int(1));
    return insert_squeezed(m, t, two);
}

Element split_star_point(const Mono& m, int t, Parity mode, bool keep_star_terms, bool keep_bracket_term) {
    Element value(mode);
    if (keep_star_terms) {
        value.add_term(Mono{{{make_gen(1, false)}, {make_gen(2, true)}}}, Int(1));
        value.add_term(Mono{{{make_gen(1, true)}, {make_gen(2, false)}}},
                       Int(mode == Parity::odd_d ? 1 : -1));
    }
    if (keep_bracket_term)
        value.add_term(Mono{{{make_gen(1, false), make_gen(2, false)}}},
                       Int(mode == Parity::odd_d ? 1 : -1));
    if (value.is_zero())
        return Element(mode);
    return insert_squeezed(m, t, value);
}

Element diff_point(const Mono& m, int t, Parity mode) {
    int st = star_at(m, t);
    if (st != 0)
        throw Error(st < 0 ? "missing point" : "point carries an asterisk");
    return project_nongeneralized(split_simple_point(m, t, mode));
}

Element diff_asterisk(const Mono& m, int t, Parity mode) {
    int st = star_at(m, t);
    if (st != 1)
        throw Error(st < 0 ? "missing point" : "point is not starred");
    return project_nongeneralized(split_star_point(m, t, mode, true, true));
}

namespace {

// boundary term (x_{t-} - x_{t+}) * A of the generalized differential
Element generalized_boundary(const Mono& m, Parity mode) {
    int j = m.points();
    Element low = mono_product(Mono{{{make_gen(1, false)}}},
                               relabel(m, [](int p) { return p + 1; }), mode);
    Element high = mono_product(Mono{{{make_gen(j + 1, false)}}}, m, mode);
    return low - high;
}

enum class Part { full, bar, barbar };

Element diff_mono_impl(const Mono& m, Variant v, Parity mode, Part part) {
    bool generalized = v == Variant::GenB || v == Variant::GenBstar;
    if (generalized && part != Part::full)
        throw Error("bar decomposition lives on the non-generalized complexes");
    Element out(mode);
    for (const auto& f : m.factors) {
        for (Gen g : f) {
            int t = gen_point(g);
            if (!gen_star(g)) {
                if (part != Part::barbar)
                    out += split_simple_point(m, t, mode);
            } else {
                out += split_star_point(m, t, mode, part != Part::barbar, part != Part::bar);
            }
        }
    }
    if (generalized)
        return out - generalized_boundary(m, mode);
    return project_nongeneralized(out);
}

Element diff_impl(const Element& e, Variant v, Part part) {
    if (!e.homogeneous())
        throw Error("differential requires a homogeneous bidegree");
    Element out(e.mode());
    for (const auto& [m, c] : e.terms()) {
        if (!mono_in_variant(m, v))
            throw Error("diagram not in variant " + variant_name(v));
        out += diff_mono_impl(m, v, e.mode(), part) * c;
    }
    return out;
}

}  // namespace

Element diff_mono(const Mono& m, Variant v, Parity mode) {
    if (v == Variant::B0)
        return b0_reduce(diff_mono_impl(m, Variant::B, mode, Part::full));
    return diff_mono_impl(m, v, mode, Part::full);
}

Element diff(const Element& e, Variant v) {
    if (v == Variant::B0)
        return b0_reduce(diff_impl(e, Variant::B, Part::full));
    return diff_impl(e, v, Part::full);
}

Element diff_bar(const Element& e, Variant v) {
    if (v != Variant::Bstar)
        throw Error("bar part is defined on the starred variant");
    return diff_impl(e, v, Part::bar);
}

Element diff_barbar(const Element& e, Variant v) {
    if (v != Variant::Bstar)
        throw Error("double-bar part is defined on the starred variant");
    return diff_impl(e, v, Part::barbar);
}

// ---------------------------------------------------------------------------
// Neighbor supercommutativity quotient.

B0Space::B0Space(Parity mode, int i, int j) : mode_(mode) {
    full_ = enumerate_basis(Variant::B, mode, i, j);
    for (size_t k = 0; k < full_.size(); k++)
        index_[full_[k]] = (int)k;
    int n = (int)full_.size();

    // Relation rows: within one group, every bracket containing a bracket
    // of two globally adjacent points, tensored with every basis word on
    // the other groups.
    std::vector<std::vector<Int>> rel;
    std::map<std::vector<std::vector<int>>, bool> seen_config;
    for (const auto& base : full_) {
        std::vector<std::vector<int>> blocks;
        for (const auto& f : base.factors) {
            std::vector<int> b;
            for (Gen g : f)
                b.push_back(gen_point(g));
            std::sort(b.begin(), b.end());
            blocks.push_back(b);
        }
        if (!seen_config.emplace(blocks, true).second)
            continue;

        for (size_t bi = 0; bi < blocks.size(); bi++) {
            const auto& g = blocks[bi];
            for (size_t a = 0; a + 1 < g.size(); a++) {
                if (g[a + 1] != g[a] + 1)
                    continue;  // pair must be adjacent on the whole line
                int t1 = g[a], t2 = g[a + 1];
                std::vector<int> rest;
                for (int p : g)
                    if (p != t1 && p != t2)
                        rest.push_back(p);
                std::sort(rest.begin(), rest.end());
                // other groups: all basis word combinations
                std::vector<std::vector<Word>> choices;
                for (size_t bj = 0; bj < blocks.size(); bj++) {
                    if (bj == bi)
                        continue;
                    std::vector<Word> ws;
                    std::vector<int> tail(blocks[bj].begin() + 1, blocks[bj].end());
                    std::sort(tail.begin(), tail.end());
                    do {
                        Word w{make_gen(blocks[bj][0], false)};
                        for (int p : tail)
                            w.push_back(make_gen(p, false));
                        ws.push_back(std::move(w));
                    } while (std::next_permutation(tail.begin(), tail.end()));
                    choices.push_back(std::move(ws));
                }
                do {
                    Expr tree = Expr::make_bracket(Expr::make_leaf(make_gen(t1, false)),
                                                   Expr::make_leaf(make_gen(t2, false)));
                    for (int p : rest)
                        tree = Expr::make_bracket(std::move(tree), Expr::make_leaf(make_gen(p, false)));
                    std::vector<size_t> pick(choices.size(), 0);
                    while (true) {
                        std::vector<Expr> fs;
                        fs.push_back(tree);
                        for (size_t ci = 0; ci < choices.size(); ci++)
                            fs.push_back(word_to_expr(choices[ci][pick[ci]]));
                        Element e = canonicalize(Expr::make_product(fs), mode);
                        std::vector<Int> row(n, Int(0));
                        for (const auto& [mm, cc] : e.terms())
                            row[index_.at(mm)] = cc;
                        rel.push_back(std::move(row));
                        size_t ci = 0;
                        for (; ci < pick.size(); ci++) {
                            if (++pick[ci] < choices[ci].size())
                                break;
                            pick[ci] = 0;
                        }
                        if (ci == pick.size() || choices.empty())
                            break;
                    }
                } while (std::next_permutation(rest.begin(), rest.end()));
            }
        }
    }

    // Integer reduced row echelon form.  The quotient is a free module, so
    // every pivot must normalize to 1; anything else is a saturation bug.
    std::vector<char> is_pivot(n, 0);
    size_t row_at = 0;
    for (int c = 0; c < n && row_at < rel.size(); c++) {
        size_t best = SIZE_MAX;
        for (size_t r = row_at; r < rel.size(); r++) {
            if (rel[r][c].is_zero())
                continue;
            if (best == SIZE_MAX || rel[r][c].abs() < rel[best][c].abs())
                best = r;
        }
        if (best == SIZE_MAX)
            continue;
        std::swap(rel[row_at], rel[best]);
        while (true) {
            bool again = false;
            for (size_t r = row_at + 1; r < rel.size(); r++) {
                if (rel[r][c].is_zero())
                    continue;
                Int q = rel[r][c] / rel[row_at][c];
                if (!q.is_zero())
                    for (int cc = 0; cc < n; cc++)
                        rel[r][cc] -= q * rel[row_at][cc];
                if (!rel[r][c].is_zero()) {
                    std::swap(rel[row_at], rel[r]);
                    again = true;
                }
            }
            if (!again)
                break;
        }
        if (rel[row_at][c].is_neg())
            for (int cc = 0; cc < n; cc++)
                rel[row_at][cc] = -rel[row_at][cc];
        if (!rel[row_at][c].is_one())
            throw Error("neighbor quotient is not saturated at this bidegree");
        is_pivot[c] = 1;
        rows_.push_back({c, rel[row_at]});
        row_at++;
    }
    for (size_t r = rows_.size(); r-- > 0;)
        for (size_t r2 = 0; r2 < r; r2++) {
            Int f = rows_[r2].second[rows_[r].first];
            if (f.is_zero())
                continue;
            for (int c = 0; c < n; c++)
                rows_[r2].second[c] -= f * rows_[r].second[c];
        }
    for (int c = 0; c < n; c++)
        if (!is_pivot[c])
            reps_.push_back(full_[c]);
}

namespace {

template <class C>
ElementT<C> reduce_impl(const ElementT<C>& e, Parity mode, const std::vector<Mono>& full,
                        const std::map<Mono, int>& index,
                        const std::vector<std::pair<int, std::vector<Int>>>& rows) {
    std::vector<C> v(full.size(), C(0));
    for (const auto& [m, c] : e.terms()) {
        if (m.star_count() > 0)
            continue;  // starred diagrams map to zero
        auto it = index.find(m);
        if (it == index.end())
            throw Error("monomial outside the bidegree of this quotient");
        v[it->second] = c;
    }
    for (const auto& [pc, row] : rows) {
        if (v[pc].is_zero())
            continue;
        C f = v[pc];
        for (size_t c = 0; c < v.size(); c++)
            if (!row[c].is_zero())
                v[c] -= f * C(row[c]);
    }
    ElementT<C> out(mode);
    for (size_t c = 0; c < v.size(); c++)
        out.add_term(full[c], v[c]);
    return out;
}

}  // namespace

Element B0Space::reduce(const Element& e) const { return reduce_impl(e, mode_, full_, index_, rows_); }
ElementQ B0Space::reduce(const ElementQ& e) const { return reduce_impl(e, mode_, full_, index_, rows_); }

const B0Space& b0_space(Parity mode, int i, int j) {
    static std::map<std::tuple<int, int, int>, std::unique_ptr<B0Space>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(mode == Parity::odd_d ? 0 : 1, i, j);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<B0Space>(mode, i, j)).first;
    return *it->second;
}

namespace {

template <class C>
ElementT<C> b0_reduce_impl(const ElementT<C>& e) {
    ElementT<C> out(e.mode());
    std::map<std::pair<int, int>, ElementT<C>> by_degree;
    for (const auto& [m, c] : e.terms()) {
        if (m.star_count() > 0)
            continue;
        auto key = std::make_pair(m.complexity(), m.points());
        auto it = by_degree.find(key);
        if (it == by_degree.end())
            it = by_degree.emplace(key, ElementT<C>(e.mode())).first;
        it->second.add_term(m, c);
    }
    for (auto& [ij, part] : by_degree)
        out += b0_space(e.mode(), ij.first, ij.second).reduce(part);
    return out;
}

}  // namespace

Element b0_reduce(const Element& e) { return b0_reduce_impl(e); }
ElementQ b0_reduce(const ElementQ& e) { return b0_reduce_impl(e); }

}  // namespace bdiag
