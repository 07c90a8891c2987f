#include "strat/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace strat {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    assert(x.cols == y.rows);
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v) {
    assert(int(v.size()) == m.cols);
    std::vector<Int> r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

namespace {

// Elementary operations applied to D are mirrored on the transform
// matrices so that U * M * V = D stays invariant.
struct SnfWork {
    IntMat D, U, Uinv, V, Vinv;

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < D.cols; ++j) std::swap(D.at(r1, j), D.at(r2, j));
        for (int j = 0; j < U.cols; ++j) std::swap(U.at(r1, j), U.at(r2, j));
        for (int i = 0; i < Uinv.rows; ++i) std::swap(Uinv.at(i, r1), Uinv.at(i, r2));
    }
    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < D.rows; ++i) std::swap(D.at(i, c1), D.at(i, c2));
        for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, c1), V.at(i, c2));
        for (int j = 0; j < Vinv.cols; ++j) std::swap(Vinv.at(c1, j), Vinv.at(c2, j));
    }
    // row r1 += k * row r2
    void add_row(int r1, int r2, const Int& k) {
        if (k == 0) return;
        for (int j = 0; j < D.cols; ++j) D.at(r1, j) += k * D.at(r2, j);
        for (int j = 0; j < U.cols; ++j) U.at(r1, j) += k * U.at(r2, j);
        for (int i = 0; i < Uinv.rows; ++i) Uinv.at(i, r2) -= k * Uinv.at(i, r1);
    }
    // col c1 += k * col c2
    void add_col(int c1, int c2, const Int& k) {
        if (k == 0) return;
        for (int i = 0; i < D.rows; ++i) D.at(i, c1) += k * D.at(i, c2);
        for (int i = 0; i < V.rows; ++i) V.at(i, c1) += k * V.at(i, c2);
        for (int j = 0; j < Vinv.cols; ++j) Vinv.at(c2, j) -= k * Vinv.at(c1, j);
    }
    void negate_row(int r) {
        for (int j = 0; j < D.cols; ++j) D.at(r, j) = -D.at(r, j);
        for (int j = 0; j < U.cols; ++j) U.at(r, j) = -U.at(r, j);
        for (int i = 0; i < Uinv.rows; ++i) Uinv.at(i, r) = -Uinv.at(i, r);
    }
};

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
    SnfWork w;
    w.D = m;
    w.U = IntMat::identity(m.rows);
    w.Uinv = IntMat::identity(m.rows);
    w.V = IntMat::identity(m.cols);
    w.Vinv = IntMat::identity(m.cols);

    int n = std::min(m.rows, m.cols);
    for (int t = 0; t < n; ++t) {
        // Smallest-absolute-value pivot in the trailing block, to keep
        // intermediate entries small.
        int pr = -1, pc = -1;
        Int best;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                const Int& v = w.D.at(i, j);
                if (v == 0) continue;
                Int av = int_abs(v);
                if (pr < 0 || av < best) {
                    pr = i;
                    pc = j;
                    best = av;
                }
            }
        if (pr < 0) break;  // trailing block is zero
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                if (w.D.at(i, t) == 0) continue;
                Int q = w.D.at(i, t) / w.D.at(t, t);
                w.add_row(i, t, -q);
                if (w.D.at(i, t) != 0) {
                    // remainder is smaller; promote it to the pivot
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m.cols; ++j) {
                if (w.D.at(t, j) == 0) continue;
                Int q = w.D.at(t, j) / w.D.at(t, t);
                w.add_col(j, t, -q);
                if (w.D.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }

        // Enforce divisibility of the remaining block by the pivot.
        for (;;) {
            int br = -1;
            for (int i = t + 1; i < m.rows && br < 0; ++i)
                for (int j = t + 1; j < m.cols; ++j)
                    if (w.D.at(i, j) % w.D.at(t, t) != 0) {
                        br = i;
                        break;
                    }
            if (br < 0) break;
            w.add_row(t, br, 1);
            // Re-clear the pivot row; this shrinks the pivot via gcd steps.
            for (;;) {
                bool clean = true;
                for (int j = t + 1; j < m.cols; ++j) {
                    if (w.D.at(t, j) == 0) continue;
                    Int q = w.D.at(t, j) / w.D.at(t, t);
                    w.add_col(j, t, -q);
                    if (w.D.at(t, j) != 0) {
                        w.swap_cols(t, j);
                        clean = false;
                    }
                }
                if (!clean) {
                    for (int i = t + 1; i < m.rows; ++i) {
                        if (w.D.at(i, t) == 0) continue;
                        Int q = w.D.at(i, t) / w.D.at(t, t);
                        w.add_row(i, t, -q);
                        if (w.D.at(i, t) != 0) w.swap_rows(t, i);
                    }
                    continue;
                }
                for (int i = t + 1; i < m.rows; ++i) {
                    if (w.D.at(i, t) == 0) continue;
                    Int q = w.D.at(i, t) / w.D.at(t, t);
                    w.add_row(i, t, -q);
                    if (w.D.at(i, t) != 0) {
                        w.swap_rows(t, i);
                        clean = false;
                    }
                }
                if (clean) break;
            }
        }

        if (w.D.at(t, t) < 0) w.negate_row(t);
    }

    SnfResult r;
    r.D = std::move(w.D);
    r.U = std::move(w.U);
    r.Uinv = std::move(w.Uinv);
    r.V = std::move(w.V);
    r.Vinv = std::move(w.Vinv);
    return r;
}

std::vector<Int> SnfResult::diagonal() const {
    int n = std::min(D.rows, D.cols);
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = D.at(i, i);
    return d;
}

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> out;
    for (const Int& d : diagonal())
        if (d != 0) out.push_back(d);
    return out;
}

int SnfResult::rank() const { return int(invariant_factors().size()); }

std::optional<std::vector<Int>> solve_integer(const SnfResult& snf, const std::vector<Int>& b) {
    // M x = b  <=>  D y = U b with x = V y.
    std::vector<Int> c = mat_vec(snf.U, b);
    int n = std::min(snf.D.rows, snf.D.cols);
    std::vector<Int> y(snf.D.cols, Int(0));
    for (int i = 0; i < snf.D.rows; ++i) {
        Int d = i < n ? snf.D.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return mat_vec(snf.V, y);
}

std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b) {
    return solve_integer(smith_normal_form(m), b);
}

std::vector<std::vector<Int>> integer_kernel(const IntMat& m) {
    SnfResult snf = smith_normal_form(m);
    int n = std::min(m.rows, m.cols);
    std::vector<std::vector<Int>> basis;
    for (int j = 0; j < m.cols; ++j) {
        bool zero = j >= n || snf.D.at(j, j) == 0;
        if (!zero) continue;
        std::vector<Int> col(m.cols);
        for (int i = 0; i < m.cols; ++i) col[i] = snf.V.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

// --- rational --------------------------------------------------------------

namespace {

// Row echelon reduction; returns pivot columns. Modifies m (and b rows when
// provided).
std::vector<int> rat_echelon(RatMat& m, std::vector<Rat>* b) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
            if (b) std::swap((*b)[p], (*b)[row]);
        }
        Rat inv = m.at(row, col);
        for (int j = 0; j < m.cols; ++j) m.at(row, j) /= inv;
        if (b) (*b)[row] /= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
            if (b) (*b)[i] -= f * (*b)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rat_rank(RatMat m) { return int(rat_echelon(m, nullptr).size()); }

std::optional<std::vector<Rat>> rat_solve(RatMat m, std::vector<Rat> b) {
    std::vector<int> pivots = rat_echelon(m, &b);
    int r = int(pivots.size());
    for (int i = r; i < m.rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(m.cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivots[i]] = b[i];
    return x;
}

std::vector<std::vector<Rat>> rat_kernel(RatMat m) {
    std::vector<int> pivots = rat_echelon(m, nullptr);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[j] = 1;
        for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = -m.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rat_det_sign(RatMat m) {
    assert(m.rows == m.cols);
    int sign = 1;
    for (int col = 0; col < m.cols; ++col) {
        int p = -1;
        for (int i = col; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(col, j));
            sign = -sign;
        }
        if (m.at(col, col) < 0) sign = -sign;
        for (int i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(col, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return sign;
}

// --- GF(2) ------------------------------------------------------------------

namespace {

std::vector<int> gf2_echelon(GF2Mat& m, std::vector<unsigned char>* b) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
            if (b) std::swap((*b)[p], (*b)[row]);
        }
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || !m.at(i, col)) continue;
            for (int j = 0; j < m.cols; ++j) m.at(i, j) ^= m.at(row, j);
            if (b) (*b)[i] ^= (*b)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int gf2_rank(GF2Mat m) { return int(gf2_echelon(m, nullptr).size()); }

std::optional<std::vector<unsigned char>> gf2_solve(GF2Mat m, std::vector<unsigned char> b) {
    std::vector<int> pivots = gf2_echelon(m, &b);
    int r = int(pivots.size());
    for (int i = r; i < m.rows; ++i)
        if (b[i]) return std::nullopt;
    std::vector<unsigned char> x(m.cols, 0);
    for (int i = 0; i < r; ++i) x[pivots[i]] = b[i];
    return x;
}

std::vector<std::vector<unsigned char>> gf2_kernel(GF2Mat m) {
    std::vector<int> pivots = gf2_echelon(m, nullptr);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<unsigned char>> basis;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<unsigned char> v(m.cols, 0);
        v[j] = 1;
        for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = m.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace strat
