#include "equicover/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace equicover {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return QMat(0, 0);
    QMat m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        assert(int(rows[i].size()) == m.cols);
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMat QMat::transpose() const {
    QMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& o) const {
    assert(cols == o.rows);
    QMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    QMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    QMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

bool QMat::operator==(const QMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
}

bool QMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::vector<Rat> QMat::col(int j) const {
    std::vector<Rat> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Rat> QMat::row(int i) const {
    std::vector<Rat> v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

void QMat::set_col(int j, const std::vector<Rat>& v) {
    assert(int(v.size()) == rows);
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

std::vector<Rat> mat_vec(const QMat& m, const std::vector<Rat>& v) {
    assert(int(v.size()) == m.cols);
    std::vector<Rat> r(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMat m) { return int(rref(m).size()); }

QMat kernel(const QMat& m) {
    QMat w = m;
    std::vector<int> piv = rref(w);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    QMat k(m.cols, int(free_cols.size()));
    for (int idx = 0; idx < int(free_cols.size()); ++idx) {
        int fc = free_cols[idx];
        k.at(fc, idx) = 1;
        for (int pr = 0; pr < int(piv.size()); ++pr)
            k.at(piv[pr], idx) = -w.at(pr, fc);
    }
    return k;
}

Rat determinant(QMat m) {
    assert(m.rows == m.cols);
    Rat det = 1;
    for (int c = 0; c < m.cols; ++c) {
        int piv = -1;
        for (int i = c; i < m.rows; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rat inv = 1 / m.at(c, c);
        for (int i = c + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

std::vector<Rat> solve_unique(const QMat& m, const std::vector<Rat>& b) {
    QMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols)
        throw std::runtime_error("solve_unique: inconsistent system");
    if (int(piv.size()) != m.cols)
        throw std::runtime_error("solve_unique: underdetermined system");
    std::vector<Rat> x(m.cols, Rat(0));
    for (int r = 0; r < int(piv.size()); ++r) x[piv[r]] = aug.at(r, m.cols);
    return x;
}

QMat solve_unique_mat(const QMat& m, const QMat& B) {
    assert(m.rows == B.rows);
    QMat aug(m.rows, m.cols + B.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        for (int j = 0; j < B.cols; ++j) aug.at(i, m.cols + j) = B.at(i, j);
    }
    std::vector<int> piv = rref(aug);
    for (int c : piv)
        if (c >= m.cols) throw std::runtime_error("solve_unique_mat: inconsistent system");
    if (int(piv.size()) != m.cols)
        throw std::runtime_error("solve_unique_mat: underdetermined system");
    QMat X(m.cols, B.cols);
    for (int r = 0; r < int(piv.size()); ++r)
        for (int j = 0; j < B.cols; ++j) X.at(piv[r], j) = aug.at(r, m.cols + j);
    return X;
}

std::optional<QMat> inverse(const QMat& m) {
    if (m.rows != m.cols) return std::nullopt;
    QMat aug(m.rows, 2 * m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = 1;
    }
    std::vector<int> piv = rref(aug);
    if (int(piv.size()) != m.rows || piv.back() != m.rows - 1) return std::nullopt;
    QMat inv(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

bool SpanBuilder::insert(std::vector<Rat> v) {
    assert(int(v.size()) == dim);
    for (size_t k = 0; k < rows.size(); ++k) {
        const Rat& c = v[pivots[k]];
        if (c != 0) {
            for (int j = 0; j < dim; ++j)
                if (rows[k][j] != 0) v[j] -= c * rows[k][j];
        }
    }
    int p = -1;
    for (int j = 0; j < dim; ++j)
        if (v[j] != 0) { p = j; break; }
    if (p < 0) return false;
    Rat inv = 1 / v[p];
    for (int j = 0; j < dim; ++j) v[j] *= inv;
    for (size_t k = 0; k < rows.size(); ++k) {
        const Rat& c = rows[k][p];
        if (c != 0) {
            for (int j = 0; j < dim; ++j)
                if (v[j] != 0) rows[k][j] -= c * v[j];
        }
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
}

bool SpanBuilder::contains(std::vector<Rat> v) const {
    for (size_t k = 0; k < rows.size(); ++k) {
        const Rat& c = v[pivots[k]];
        if (c != 0)
            for (int j = 0; j < dim; ++j)
                if (rows[k][j] != 0) v[j] -= c * rows[k][j];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::transpose() const {
    ZMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMat ZMat::operator*(const ZMat& o) const {
    assert(cols == o.rows);
    ZMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

ZMat ZMat::operator+(const ZMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    ZMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

ZMat ZMat::operator-(const ZMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    ZMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

bool ZMat::operator==(const ZMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
}

QMat ZMat::to_q() const {
    QMat m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = Rat(a[i]);
    return m;
}

ZMat ZMat::from_q(const QMat& m) {
    ZMat z(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) z.a[i] = to_int(m.a[i]);
    return z;
}

std::vector<Int> mat_vec(const ZMat& m, const std::vector<Int>& v) {
    assert(int(v.size()) == m.cols);
    std::vector<Int> r(m.rows, Int(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

namespace {

void row_op(ZMat& A, ZMat& U, int dst, int src, const Int& f) {
    for (int j = 0; j < A.cols; ++j) A.at(dst, j) -= f * A.at(src, j);
    for (int j = 0; j < U.cols; ++j) U.at(dst, j) -= f * U.at(src, j);
}
void col_op(ZMat& A, ZMat& V, int dst, int src, const Int& f) {
    for (int i = 0; i < A.rows; ++i) A.at(i, dst) -= f * A.at(i, src);
    for (int i = 0; i < V.rows; ++i) V.at(i, dst) -= f * V.at(i, src);
}
void row_swap(ZMat& A, ZMat& U, int i1, int i2) {
    for (int j = 0; j < A.cols; ++j) swap(A.at(i1, j), A.at(i2, j));
    for (int j = 0; j < U.cols; ++j) swap(U.at(i1, j), U.at(i2, j));
}
void col_swap(ZMat& A, ZMat& V, int j1, int j2) {
    for (int i = 0; i < A.rows; ++i) swap(A.at(i, j1), A.at(i, j2));
    for (int i = 0; i < V.rows; ++i) swap(V.at(i, j1), V.at(i, j2));
}
void row_negate(ZMat& A, ZMat& U, int i) {
    for (int j = 0; j < A.cols; ++j) A.at(i, j) = -A.at(i, j);
    for (int j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
}

} // namespace

SmithResult smith_normal_form(const ZMat& A0) {
    SmithResult res;
    res.S = A0;
    res.U = ZMat::identity(A0.rows);
    res.V = ZMat::identity(A0.cols);
    ZMat& S = res.S;
    ZMat& U = res.U;
    ZMat& V = res.V;

    int t = 0;
    int nmin = std::min(S.rows, S.cols);
    while (t < nmin) {
        // locate smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < S.rows; ++i)
            for (int j = t; j < S.cols; ++j)
                if (S.at(i, j) != 0 &&
                    (pi < 0 || cmp(abs(S.at(i, j)), abs(S.at(pi, pj))) < 0)) {
                    pi = i; pj = j;
                }
        if (pi < 0) break;
        row_swap(S, U, t, pi);
        col_swap(S, V, t, pj);
        if (S.at(t, t) < 0) row_negate(S, U, t);

        bool clean = true;
        for (int i = t + 1; i < S.rows; ++i) {
            if (S.at(i, t) == 0) continue;
            Int f = S.at(i, t) / S.at(t, t); // floor toward zero is fine, iterate
            row_op(S, U, i, t, f);
            if (S.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < S.cols; ++j) {
            if (S.at(t, j) == 0) continue;
            Int f = S.at(t, j) / S.at(t, t);
            col_op(S, V, j, t, f);
            if (S.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // repeat with a smaller pivot now present

        // divisibility condition: pivot must divide all remaining entries
        bool divides = true;
        for (int i = t + 1; i < S.rows && divides; ++i)
            for (int j = t + 1; j < S.cols && divides; ++j)
                if (S.at(i, j) % S.at(t, t) != 0) {
                    // fold the offending row into row t and restart this pivot
                    row_op(S, U, t, i, Int(-1));
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    res.rank = t;
    return res;
}

ZMat z_kernel(const ZMat& A) {
    SmithResult s = smith_normal_form(A);
    int k = A.cols - s.rank;
    ZMat K(A.cols, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < A.cols; ++i) K.at(i, j) = s.V.at(i, s.rank + j);
    return K;
}

Int z_determinant(const ZMat& A) {
    assert(A.rows == A.cols);
    Rat d = determinant(A.to_q());
    return to_int(d);
}

ZMat z_inverse_unimodular(const ZMat& A) {
    auto inv = inverse(A.to_q());
    if (!inv) throw std::runtime_error("z_inverse_unimodular: singular matrix");
    return ZMat::from_q(*inv);
}

std::optional<ZMat> symplectic_standardize(const ZMat& J) {
    int n = J.rows;
    if (n != J.cols || n % 2 != 0) return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (J.at(i, j) != -J.at(j, i)) return std::nullopt;
    Int det = z_determinant(J);
    if (det != 1 && det != -1) return std::nullopt;

    // symplectic Gram-Schmidt over Z: working basis as columns of F
    ZMat F = ZMat::identity(n);
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i;
    auto pairing = [&](int ci, int cj) {
        Int s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (F.at(i, ci) != 0 && J.at(i, j) != 0)
                    s += F.at(i, ci) * J.at(i, j) * F.at(j, cj);
        return s;
    };
    std::vector<int> order;
    while (!remaining.empty()) {
        int u = remaining[0];
        // find partner with pairing of minimal nonzero absolute value, then
        // shrink it to 1 with gcd-style column ops
        while (true) {
            int best = -1;
            Int bestv = 0;
            for (size_t k = 1; k < remaining.size(); ++k) {
                Int p = pairing(u, remaining[k]);
                if (p != 0 && (best < 0 || cmp(abs(p), abs(bestv)) < 0)) {
                    best = int(k);
                    bestv = p;
                }
            }
            if (best < 0) return std::nullopt; // degenerate on the remainder
            int w = remaining[best];
            if (bestv == 1 || bestv == -1) {
                if (bestv == -1)
                    for (int i = 0; i < n; ++i) F.at(i, w) = -F.at(i, w);
                // reduce all other remaining columns against the pair (u, w)
                for (size_t k = 1; k < remaining.size(); ++k) {
                    int c = remaining[k];
                    if (c == w) continue;
                    Int pu = pairing(u, c);
                    Int pw = pairing(w, c);
                    // c := c - pw*u' ... adjust so that c pairs to 0 with both
                    for (int i = 0; i < n; ++i)
                        F.at(i, c) -= pu * F.at(i, w) - pw * F.at(i, u);
                }
                order.push_back(u);
                order.push_back(w);
                std::vector<int> rest;
                for (int c : remaining)
                    if (c != u && c != w) rest.push_back(c);
                remaining = rest;
                break;
            }
            // gcd step: fold some other partner into w to shrink |pairing|
            bool reduced = false;
            for (size_t k = 1; k < remaining.size() && !reduced; ++k) {
                int c = remaining[k];
                if (c == w) continue;
                Int p = pairing(u, c);
                if (p == 0) continue;
                Int q = p / bestv;
                for (int i = 0; i < n; ++i) F.at(i, c) -= q * F.at(i, w);
                if (pairing(u, c) != 0) reduced = true; // strictly smaller remainder
                else if (p % bestv != 0) reduced = true;
            }
            if (!reduced) {
                // no progress possible with gcd folding; |bestv| must divide
                // everything, contradicting unimodularity unless it is 1
                return std::nullopt;
            }
        }
    }
    // permute columns into the chosen order
    ZMat P(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) P.at(i, j) = F.at(i, order[j]);
    return P;
}

int joint_fixed_dim_mod_p(const std::vector<ZMat>& mats, long p) {
    if (mats.empty()) return 0;
    int n = mats[0].rows;
    std::vector<std::vector<long>> rows;
    for (const auto& M : mats) {
        assert(M.rows == n && M.cols == n);
        for (int i = 0; i < n; ++i) {
            std::vector<long> r(n);
            for (int j = 0; j < n; ++j) {
                Int v = M.at(i, j) - (i == j ? 1 : 0);
                long m = mpz_fdiv_ui(v.get_mpz_t(), (unsigned long)p);
                r[j] = m;
            }
            rows.push_back(std::move(r));
        }
    }
    // rank over GF(p)
    int rnk = 0;
    for (int c = 0; c < n && rnk < int(rows.size()); ++c) {
        int piv = -1;
        for (int i = rnk; i < int(rows.size()); ++i)
            if (rows[i][c] % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rnk]);
        // normalize pivot
        long inv = 1;
        {
            long a = rows[rnk][c] % p, m = p, x0 = 0, x1 = 1;
            while (a > 1) { long q = a / m; long t = m; m = a % m; a = t;
                            t = x0; x0 = x1 - q * x0; x1 = t; }
            inv = ((x1 % p) + p) % p;
        }
        for (int j = 0; j < n; ++j) rows[rnk][j] = (rows[rnk][j] * inv) % p;
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == rnk) continue;
            long f = rows[i][c] % p;
            if (f == 0) continue;
            for (int j = 0; j < n; ++j)
                rows[i][j] = ((rows[i][j] - f * rows[rnk][j]) % p + p) % p;
        }
        ++rnk;
    }
    return n - rnk;
}

} // namespace equicover
