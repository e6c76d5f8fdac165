#include "bdiag/chord.hpp"

#include <algorithm>

namespace bdiag {

namespace {

using SparseIntRow = std::vector<std::pair<int, Int>>;

SparseIntRow combine_rows(const SparseIntRow& x, const Int& cx, const SparseIntRow& y, const Int& cy) {
    SparseIntRow out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back({x[i].first, cx * x[i].second});
            i++;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.push_back({y[j].first, cy * y[j].second});
            j++;
        } else {
            Int v = cx * x[i].second + cy * y[j].second;
            if (!v.is_zero())
                out.push_back({x[i].first, v});
            i++;
            j++;
        }
    }
    return out;
}

void content_normalize(SparseIntRow& r) {
    Int g(0);
    for (auto& [c, v] : r)
        g = Int::gcd(g, v);
    if (!g.is_zero() && !g.is_one())
        for (auto& [c, v] : r)
            v = v / g;
}

const Int* find_col(const SparseIntRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const std::pair<int, Int>& e, int c) { return e.first < c; });
    return it != r.end() && it->first == col ? &it->second : nullptr;
}

}  // namespace

ChordAlgebra::ChordAlgebra(Parity mode, bool with_one_term, int i_max)
    : mode_(mode), with_one_term_(with_one_term), i_max_(i_max) {
    levels_.resize(i_max + 1);
    for (int i = 0; i <= i_max; i++) {
        Level& lv = levels_[i];
        lv.basis = enumerate_basis(Variant::B, mode, i, 2 * i);
        for (size_t k = 0; k < lv.basis.size(); k++)
            lv.index[lv.basis[k]] = (int)k;
        int n = (int)lv.basis.size();

        // relation rows: boundaries of the diagrams one point below
        Variant src = with_one_term ? Variant::Bstar : Variant::B;
        std::vector<SparseIntRow> rel;
        auto below = i > 0 ? enumerate_basis(src, mode, i, 2 * i - 1) : std::vector<Mono>{};
        for (const auto& m : below) {
            Element d = diff_mono(m, src, mode);
            SparseIntRow row;
            for (const auto& [mm, cc] : d.terms())
                row.push_back({lv.index.at(mm), cc});
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (!row.empty())
                rel.push_back(std::move(row));
        }

        // integral echelon for membership (gcd reduction per pivot column)
        {
            auto rows = rel;
            std::vector<char> used(rows.size(), 0);
            for (int c = 0; c < n; c++) {
                // gcd-combine every row leading at c into one pivot row
                while (true) {
                    std::vector<size_t> leads;
                    for (size_t r = 0; r < rows.size(); r++)
                        if (!used[r] && !rows[r].empty() && rows[r][0].first == c)
                            leads.push_back(r);
                    if (leads.size() <= 1) {
                        if (leads.size() == 1) {
                            size_t r = leads[0];
                            used[r] = 1;
                            if (rows[r][0].second.is_neg())
                                for (auto& [cc, vv] : rows[r])
                                    vv = -vv;
                            lv.hnf.push_back({c, std::vector<Int>()});
                            auto& dense = lv.hnf.back().second;
                            dense.assign(n, Int(0));
                            for (auto& [cc, vv] : rows[r])
                                dense[cc] = vv;
                        }
                        break;
                    }
                    // reduce the larger lead by the smaller
                    size_t a = leads[0];
                    for (size_t t : leads)
                        if (rows[t][0].second.abs() < rows[a][0].second.abs())
                            a = t;
                    for (size_t t : leads) {
                        if (t == a)
                            continue;
                        Int q = rows[t][0].second / rows[a][0].second;
                        rows[t] = combine_rows(rows[t], Int(1), rows[a], -q);
                    }
                }
            }
        }

        // rational reduced echelon for quotient coordinates
        {
            auto rows = rel;
            for (auto& r : rows)
                content_normalize(r);
            std::map<int, SparseIntRow> pivot_rows;
            for (auto& r0 : rows) {
                SparseIntRow r = std::move(r0);
                while (!r.empty()) {
                    auto it = pivot_rows.find(r[0].first);
                    if (it == pivot_rows.end())
                        break;
                    Int g = Int::gcd(r[0].second, it->second[0].second);
                    r = combine_rows(r, it->second[0].second / g, it->second, -(r[0].second / g));
                    content_normalize(r);
                }
                if (!r.empty())
                    pivot_rows.emplace(r[0].first, std::move(r));
            }
            // back-substitute to full reduction
            for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
                for (auto jt = pivot_rows.begin(); jt->first != it->first; ++jt) {
                    const Int* hit = find_col(jt->second, it->first);
                    if (!hit)
                        continue;
                    Int g = Int::gcd(*hit, it->second[0].second);
                    jt->second = combine_rows(jt->second, it->second[0].second / g, it->second,
                                              -(*hit / g));
                    content_normalize(jt->second);
                }
            }
            std::vector<char> is_pivot(n, 0);
            for (auto& [pc, row] : pivot_rows) {
                is_pivot[pc] = 1;
                lv.rref.push_back({pc, std::move(row)});
            }
            for (int c = 0; c < n; c++)
                if (!is_pivot[c])
                    lv.rep_cols.push_back(c);
        }
    }
}

long long ChordAlgebra::dimension(int i) const { return (long long)levels_[i].rep_cols.size(); }

const std::vector<Mono>& ChordAlgebra::diagrams(int i) const { return levels_[i].basis; }

const std::vector<int>& ChordAlgebra::representative_cols(int i) const { return levels_[i].rep_cols; }

std::vector<Rat> ChordAlgebra::reduce_vec(std::vector<Rat> v, int i) const {
    const Level& lv = levels_[i];
    for (const auto& [pc, row] : lv.rref) {
        if (v[pc].is_zero())
            continue;
        Rat f = v[pc] / Rat(row[0].second);
        for (const auto& [c, rv] : row)
            v[c] -= f * Rat(rv);
    }
    std::vector<Rat> out;
    out.reserve(lv.rep_cols.size());
    for (int c : lv.rep_cols)
        out.push_back(v[c]);
    return out;
}

std::vector<Rat> ChordAlgebra::reduce(const ElementQ& e, int i) const {
    const Level& lv = levels_[i];
    std::vector<Rat> v(lv.basis.size(), Rat(0));
    for (const auto& [m, c] : e.terms()) {
        auto it = lv.index.find(m);
        if (it == lv.index.end())
            throw Error("element is not a chord combination of this degree");
        v[it->second] = c;
    }
    return reduce_vec(std::move(v), i);
}

bool ChordAlgebra::relation_member_z(const Element& e, int i) const {
    const Level& lv = levels_[i];
    std::vector<Int> v(lv.basis.size(), Int(0));
    for (const auto& [m, c] : e.terms()) {
        auto it = lv.index.find(m);
        if (it == lv.index.end())
            return false;
        v[it->second] = c;
    }
    for (const auto& [pc, row] : lv.hnf) {
        if (v[pc].is_zero())
            continue;
        Int q, r;
        Int::divmod(v[pc], row[pc], q, r);
        if (!r.is_zero())
            return false;
        for (size_t c = 0; c < v.size(); c++)
            if (!row[c].is_zero())
                v[c] -= q * row[c];
    }
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

bool ChordAlgebra::circular_invariance(int i) const {
    const Level& lv = levels_[i];
    int n2 = 2 * i;
    std::vector<int> perm(n2 + 1);
    perm[1] = n2;
    for (int p = 2; p <= n2; p++)
        perm[p] = p - 1;
    for (const auto& m : lv.basis) {
        Element rotated = permute_points(Element(mode_, m), perm);
        Element difference = Element(mode_, m) - rotated;
        if (!relation_member_z(difference, i))
            return false;
    }
    return true;
}

std::vector<Rat> ChordAlgebra::conv_power(int k, int i, int rep_pos) {
    auto key = std::make_tuple(k, i, rep_pos);
    auto memo = power_memo_.find(key);
    if (memo != power_memo_.end())
        return memo->second;
    const Level& lv = levels_[i];
    std::vector<Rat> out(lv.rep_cols.size(), Rat(0));
    if (k == 0) {
        // unit projector: zero except in degree zero
        if (i == 0)
            out[0] = Rat(1);
    } else if (k == 1) {
        if (i > 0)
            out[rep_pos] = Rat(1);
    } else {
        const Mono& m = lv.basis[lv.rep_cols[rep_pos]];
        std::vector<Rat> acc(lv.basis.size(), Rat(0));
        for (const auto& [lr, s] : coproduct(m, mode_)) {
            const Mono& left = lr.first;
            const Mono& right = lr.second;
            if (right.factors.empty())
                continue;  // id - unit projector kills the trivial leg
            int il = left.complexity();
            std::vector<Rat> lred = reduce(ElementQ(mode_, left, Rat(1)), il);
            for (size_t lp = 0; lp < lred.size(); lp++) {
                if (lred[lp].is_zero())
                    continue;
                std::vector<Rat> tkl = conv_power(k - 1, il, (int)lp);
                for (size_t q = 0; q < tkl.size(); q++) {
                    if (tkl[q].is_zero())
                        continue;
                    const Mono& lrep = levels_[il].basis[levels_[il].rep_cols[q]];
                    Element glued = hopf_product(Element(mode_, lrep), Element(mode_, right));
                    for (const auto& [gm, gc] : glued.terms())
                        acc[lv.index.at(gm)] += Rat(s) * lred[lp] * tkl[q] * Rat(gc);
                }
            }
        }
        out = reduce_vec(std::move(acc), i);
    }
    power_memo_.emplace(key, out);
    return out;
}

long long ChordAlgebra::primitive_dimension(int i) {
    const Level& lv = levels_[i];
    int dim = (int)lv.rep_cols.size();
    if (dim == 0)
        return 0;
    // matrix of log-star-id: sum (-1)^{k+1}/k (id - unit)^{* k}
    std::vector<std::vector<Rat>> p1(dim, std::vector<Rat>(dim, Rat(0)));
    for (int col = 0; col < dim; col++) {
        for (int k = 1; k <= i + 1; k++) {
            std::vector<Rat> t = conv_power(k, i, col);
            bool nonzero = false;
            for (int r = 0; r < dim; r++) {
                if (!t[r].is_zero())
                    nonzero = true;
                p1[r][col] += t[r] * Rat(Int(k % 2 ? 1 : -1), Int(k));
            }
            if (!nonzero && k > 1)
                break;
        }
    }
    // rank over Q: clear denominators columnwise into a ZMat
    ZMat m(dim, dim);
    for (int c = 0; c < dim; c++) {
        Int lcm(1);
        for (int r = 0; r < dim; r++) {
            const Int& den = p1[r][c].den();
            lcm = lcm / Int::gcd(lcm, den) * den;
        }
        for (int r = 0; r < dim; r++)
            m.at(r, c) = p1[r][c].num() * (lcm / p1[r][c].den());
    }
    return rank_q(m);
}

}  // namespace bdiag
