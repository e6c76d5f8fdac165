#include "bdiag/zmatrix.hpp"

#include <algorithm>

namespace bdiag {

ZMat operator*(const ZMat& a, const ZMat& b) {
    if (a.cols() != b.rows())
        throw Error("matrix shape mismatch");
    ZMat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int k = 0; k < a.cols(); k++) {
            if (a.at(i, k).is_zero())
                continue;
            for (int j = 0; j < b.cols(); j++)
                if (!b.at(k, j).is_zero())
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

ZMat ZMat::transposed() const {
    ZMat t(c_, r_);
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++)
            t.at(j, i) = a_[i][j];
    return t;
}

bool ZMat::is_zero() const {
    for (const auto& row : a_)
        for (const auto& v : row)
            if (!v.is_zero())
                return false;
    return true;
}

SmithForm smith_normal_form(const ZMat& m, bool want_u, bool want_v) {
    int r = m.rows(), c = m.cols();
    ZMat a = m;
    SmithForm s;
    s.has_u = want_u;
    s.has_v = want_v;
    s.det_u = Int(1);
    s.det_v = Int(1);
    if (want_u)
        s.U = ZMat::identity(r);
    if (want_v)
        s.V = ZMat::identity(c);

    auto row_sub = [&](int dst, int src, const Int& q) {  // row dst -= q * row src
        for (int j = 0; j < c; j++)
            if (!a.at(src, j).is_zero())
                a.at(dst, j) -= q * a.at(src, j);
        if (want_u)
            for (int j = 0; j < r; j++)
                if (!s.U.at(src, j).is_zero())
                    s.U.at(dst, j) -= q * s.U.at(src, j);
    };
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < r; i++)
            if (!a.at(i, src).is_zero())
                a.at(i, dst) -= q * a.at(i, src);
        if (want_v)
            for (int i = 0; i < c; i++)
                if (!s.V.at(i, src).is_zero())
                    s.V.at(i, dst) -= q * s.V.at(i, src);
    };
    auto row_swap = [&](int x, int y) {
        if (x == y)
            return;
        std::swap(a.row(x), a.row(y));
        if (want_u)
            std::swap(s.U.row(x), s.U.row(y));
        s.det_u = -s.det_u;
    };
    auto col_swap = [&](int x, int y) {
        if (x == y)
            return;
        for (int i = 0; i < r; i++)
            std::swap(a.at(i, x), a.at(i, y));
        if (want_v)
            for (int i = 0; i < c; i++)
                std::swap(s.V.at(i, x), s.V.at(i, y));
        s.det_v = -s.det_v;
    };
    auto row_neg = [&](int x) {
        for (int j = 0; j < c; j++)
            a.at(x, j) = -a.at(x, j);
        if (want_u)
            for (int j = 0; j < r; j++)
                s.U.at(x, j) = -s.U.at(x, j);
        s.det_u = -s.det_u;
    };

    int t = 0;
    int n = std::min(r, c);
    for (; t < n; t++) {
        int pr = -1, pc = -1;
        for (int i = t; i < r; i++)
            for (int j = t; j < c; j++) {
                if (a.at(i, j).is_zero())
                    continue;
                if (pr < 0 || a.at(i, j).abs() < a.at(pr, pc).abs()) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0)
            break;
        row_swap(t, pr);
        col_swap(t, pc);
        while (true) {
            bool clean = true;
            for (int i = t + 1; i < r; i++) {
                if (a.at(i, t).is_zero())
                    continue;
                Int q = a.at(i, t) / a.at(t, t);
                if (!q.is_zero())
                    row_sub(i, t, q);
                if (!a.at(i, t).is_zero()) {
                    row_swap(t, i);  // strictly smaller remainder becomes pivot
                    clean = false;
                }
            }
            for (int j = t + 1; j < c; j++) {
                if (a.at(t, j).is_zero())
                    continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (!q.is_zero())
                    col_sub(j, t, q);
                if (!a.at(t, j).is_zero()) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (clean)
                break;
        }
        if (a.at(t, t).is_neg())
            row_neg(t);
    }
    s.rank = t;

    // enforce the divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < s.rank; i++) {
            Int rem = a.at(i + 1, i + 1) % a.at(i, i);
            if (rem.is_zero())
                continue;
            changed = true;
            col_sub(i, i + 1, Int(-1));  // fold d_{i+1} into column i
            while (true) {
                bool clean = true;
                if (!a.at(i + 1, i).is_zero()) {
                    Int q = a.at(i + 1, i) / a.at(i, i);
                    if (!q.is_zero())
                        row_sub(i + 1, i, q);
                    if (!a.at(i + 1, i).is_zero()) {
                        row_swap(i, i + 1);
                        clean = false;
                    }
                }
                if (!a.at(i, i + 1).is_zero()) {
                    Int q = a.at(i, i + 1) / a.at(i, i);
                    if (!q.is_zero())
                        col_sub(i + 1, i, q);
                    if (!a.at(i, i + 1).is_zero()) {
                        col_swap(i, i + 1);
                        clean = false;
                    }
                }
                if (clean)
                    break;
            }
            if (a.at(i, i).is_neg())
                row_neg(i);
            if (a.at(i + 1, i + 1).is_neg())
                row_neg(i + 1);
        }
    }
    for (int i = 0; i < s.rank; i++)
        s.diag.push_back(a.at(i, i));
    return s;
}

bool verify_smith(const ZMat& m, const SmithForm& s) {
    if (!s.has_u || !s.has_v)
        return false;
    if (!(s.det_u.abs().is_one() && s.det_v.abs().is_one()))
        return false;
    ZMat d = s.U * m * s.V;
    for (int i = 0; i < d.rows(); i++)
        for (int j = 0; j < d.cols(); j++) {
            Int expect = (i == j && i < s.rank) ? s.diag[i] : Int(0);
            if (d.at(i, j) != expect)
                return false;
        }
    for (int i = 0; i + 1 < s.rank; i++)
        if (!(s.diag[i + 1] % s.diag[i]).is_zero())
            return false;
    return true;
}

ZMat kernel_basis(const ZMat& m) {
    SmithForm s = smith_normal_form(m, false, true);
    ZMat k(m.cols(), m.cols() - s.rank);
    for (int j = s.rank; j < m.cols(); j++)
        for (int i = 0; i < m.cols(); i++)
            k.at(i, j - s.rank) = s.V.at(i, j);
    return k;
}

ZMat solve_in_span(const ZMat& k, const ZMat& cols) {
    if (k.rows() != cols.rows())
        throw Error("matrix shape mismatch");
    int n = k.rows(), w = k.cols(), m = cols.cols();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(w + m, Int(0)));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < w; j++)
            a[i][j] = k.at(i, j);
        for (int j = 0; j < m; j++)
            a[i][w + j] = cols.at(i, j);
    }
    // fraction-free reduced echelon of [k | cols]
    std::vector<int> pivot_row_of(w, -1);
    int rr = 0;
    for (int c = 0; c < w && rr < n; c++) {
        int best = -1;
        for (int i = rr; i < n; i++)
            if (!a[i][c].is_zero() && (best < 0 || a[i][c].abs() < a[best][c].abs()))
                best = i;
        if (best < 0)
            continue;
        std::swap(a[rr], a[best]);
        for (int i = 0; i < n; i++) {
            if (i == rr || a[i][c].is_zero())
                continue;
            Int g = Int::gcd(a[i][c], a[rr][c]);
            Int mi = a[rr][c] / g, mr = a[i][c] / g;
            for (int j = 0; j < w + m; j++)
                a[i][j] = a[i][j] * mi - a[rr][j] * mr;
        }
        pivot_row_of[c] = rr;
        rr++;
    }
    ZMat x(w, m);
    for (int c = 0; c < w; c++) {
        int pr = pivot_row_of[c];
        if (pr < 0)
            throw Error("span basis is rank deficient");
        for (int j = 0; j < m; j++) {
            Int q, rem;
            Int::divmod(a[pr][w + j], a[pr][c], q, rem);
            if (!rem.is_zero())
                throw Error("column is not an integral combination of the span basis");
            x.at(c, j) = q;
        }
    }
    for (int i = rr; i < n; i++)
        for (int j = 0; j < m; j++)
            if (!a[i][w + j].is_zero())
                throw Error("column lies outside the span");
    if (!(k * x == cols))
        throw Error("span solve verification failed");
    return x;
}

bool in_image(const ZMat& m, const ZMat& col) {
    if (m.rows() != col.rows())
        throw Error("matrix shape mismatch");
    SmithForm s = smith_normal_form(m, true, false);
    ZMat u = s.U * col;
    for (int j = 0; j < col.cols(); j++) {
        for (int r = 0; r < m.rows(); r++) {
            if (r < s.rank) {
                if (!(u.at(r, j) % s.diag[r]).is_zero())
                    return false;
            } else if (!u.at(r, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct SparseRow {
    std::vector<std::pair<int, Int>> e;  // sorted by column

    void normalize() {
        Int g(0);
        for (auto& [c, v] : e)
            g = Int::gcd(g, v);
        if (!g.is_zero() && !g.is_one())
            for (auto& [c, v] : e)
                v = v / g;
    }
};

SparseRow combine(const SparseRow& x, const Int& cx, const SparseRow& y, const Int& cy) {
    SparseRow out;  // cx*x + cy*y
    out.e.reserve(x.e.size() + y.e.size());
    size_t i = 0, j = 0;
    while (i < x.e.size() || j < y.e.size()) {
        if (j == y.e.size() || (i < x.e.size() && x.e[i].first < y.e[j].first)) {
            out.e.push_back({x.e[i].first, cx * x.e[i].second});
            i++;
        } else if (i == x.e.size() || y.e[j].first < x.e[i].first) {
            out.e.push_back({y.e[j].first, cy * y.e[j].second});
            j++;
        } else {
            Int v = cx * x.e[i].second + cy * y.e[j].second;
            if (!v.is_zero())
                out.e.push_back({x.e[i].first, v});
            i++;
            j++;
        }
    }
    return out;
}

}  // namespace

int rank_q(const ZMat& m) {
    std::vector<SparseRow> rows;
    for (int i = 0; i < m.rows(); i++) {
        SparseRow r;
        for (int j = 0; j < m.cols(); j++)
            if (!m.at(i, j).is_zero())
                r.e.push_back({j, m.at(i, j)});
        if (!r.e.empty())
            rows.push_back(std::move(r));
    }
    int rank = 0;
    while (!rows.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < rows.size(); i++)
            if (rows[i].e.size() < rows[best].e.size())
                best = i;
        SparseRow piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        piv.normalize();
        rank++;
        int pc = piv.e[0].first;
        const Int& pv = piv.e[0].second;
        std::vector<SparseRow> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            const Int* hit = nullptr;
            for (auto& [c, v] : row.e) {
                if (c == pc) {
                    hit = &v;
                    break;
                }
                if (c > pc)
                    break;
            }
            if (!hit) {
                next.push_back(std::move(row));
                continue;
            }
            Int g = Int::gcd(*hit, pv);
            SparseRow r2 = combine(row, pv / g, piv, -(*hit / g));
            if (!r2.e.empty()) {
                r2.normalize();
                next.push_back(std::move(r2));
            }
        }
        rows = std::move(next);
    }
    return rank;
}

int rank_mod_p(const ZMat& m, long long p) {
    if (p < 2)
        throw Error("modulus must be a prime >= 2");
    int r = m.rows(), c = m.cols();
    std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
    for (int i = 0; i < r; i++)
        for (int j = 0; j < c; j++)
            a[i][j] = m.at(i, j).mod_ll(p);
    auto inv = [&](long long x) {
        long long b = p - 2, acc = 1;
        while (b) {
            if (b & 1)
                acc = acc * x % p;
            x = x * x % p;
            b >>= 1;
        }
        return acc;
    };
    int rank = 0;
    for (int col = 0; col < c && rank < r; col++) {
        int piv = -1;
        for (int i = rank; i < r; i++)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[rank], a[piv]);
        long long iv = inv(a[rank][col]);
        for (int j = col; j < c; j++)
            a[rank][j] = a[rank][j] * iv % p;
        for (int i = 0; i < r; i++) {
            if (i == rank || a[i][col] == 0)
                continue;
            long long f = a[i][col];
            for (int j = col; j < c; j++) {
                a[i][j] = (a[i][j] - f * a[rank][j]) % p;
                if (a[i][j] < 0)
                    a[i][j] += p;
            }
        }
        rank++;
    }
    return rank;
}

std::string HomologyGroup::str() const {
    std::string s = "rank " + std::to_string(rank);
    if (!torsion.empty()) {
        s += ", torsion [";
        for (size_t i = 0; i < torsion.size(); i++)
            s += (i ? "," : "") + torsion[i].str();
        s += "]";
    }
    return s;
}

HomologyGroup homology_group(const ZMat& out, const ZMat& in) {
    if (out.cols() != in.rows())
        throw Error("boundary matrices do not compose");
    ZMat k = kernel_basis(out);
    ZMat coords = solve_in_span(k, in);
    SmithForm s = smith_normal_form(coords, false, false);
    HomologyGroup h;
    h.rank = k.cols() - s.rank;
    for (const auto& d : s.diag)
        if (!d.is_one())
            h.torsion.push_back(d);
    return h;
}

long long homology_rank_q(const ZMat& out, const ZMat& in) {
    return out.cols() - rank_q(out) - rank_q(in);
}

long long homology_rank_mod_p(const ZMat& out, const ZMat& in, long long p) {
    return out.cols() - rank_mod_p(out, p) - rank_mod_p(in, p);
}

}  // namespace bdiag
