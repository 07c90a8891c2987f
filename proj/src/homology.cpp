#include "strat/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace strat {

namespace {

int basepoint_position(const std::vector<int>& vt) {
    int best = 0;
    for (int p = 1; p < int(vt.size()); ++p)
        if (vt[p] < vt[best]) best = p;
    return best;
}

// Iterated face keeping exactly the two given vertex positions (p < q),
// yielding the straight edge of the cell through those positions.
int edge_through_positions(const DeltaComplex& x, int dim, int idx, int p, int q) {
    int d = dim, c = idx;
    for (int pos = dim; pos >= 0; --pos) {
        if (pos == p || pos == q) continue;
        c = x.face(d, c, pos);
        --d;
    }
    return c;  // now a 1-cell
}

}  // namespace

ValidationReport validate_cocycle(const DeltaComplex& x, const Z2Cocycle& l) {
    ValidationReport rep;
    if (int(l.edge_sign.size()) != x.num_cells(1)) {
        rep.add("cocycle_size", "cocycle must assign a sign to every 1-cell");
        return rep;
    }
    for (int e = 0; e < x.num_cells(1); ++e)
        if (l.edge_sign[e] != 1 && l.edge_sign[e] != -1)
            rep.add("cocycle_value", "edge " + std::to_string(e) + " sign is not +1/-1");
    if (!rep.ok()) return rep;
    for (int t = 0; t < x.num_cells(2); ++t) {
        int prod = 1;
        for (int j = 0; j <= 2; ++j) prod *= l.edge_sign[x.face(2, t, j)];
        if (prod != 1)
            rep.add("cocycle_condition",
                    "2-cell " + std::to_string(t) + " has boundary product -1");
    }
    return rep;
}

int transport_sign(const DeltaComplex& x, const Z2Cocycle& l, int dim, int idx, int j) {
    if (dim == 0) return 1;
    const auto& vt = x.vertex_tuple(dim, idx);
    int p = basepoint_position(vt);
    int fcell = x.face(dim, idx, j);
    int bf = basepoint_position(x.vertex_tuple(dim - 1, fcell));
    int q = bf < j ? bf : bf + 1;
    if (p == q) return 1;
    int e = edge_through_positions(x, dim, idx, std::min(p, q), std::max(p, q));
    return l.sign(e);
}

Chain twisted_boundary(const Chain& c, const DeltaComplex& x, const Z2Cocycle& l) {
    ValidationReport rep = validate_cocycle(x, l);
    if (!rep.ok()) throw std::invalid_argument("twisted_boundary: " + rep.issues[0].message);
    int k = c.dim();
    Chain out(c.ring(), k - 1);
    if (k == 0) return out;
    for (const auto& [cell, v] : c.coeffs()) {
        if (cell < 0 || cell >= x.num_cells(k))
            throw std::invalid_argument("twisted_boundary: unknown cell identifier");
        for (int j = 0; j <= k; ++j) {
            Rat s = (j % 2 == 0) ? v : -v;
            if (transport_sign(x, l, k, cell, j) < 0) s = -s;
            out.add(x.face(k, cell, j), s);
        }
    }
    return out;
}

IntMat boundary_matrix(const DeltaComplex& x, int k) {
    int rows = k >= 1 ? x.num_cells(k - 1) : 0;
    int cols = x.num_cells(k);
    IntMat m(rows, cols);
    if (k < 1) return m;
    for (int c = 0; c < cols; ++c)
        for (int j = 0; j <= k; ++j) {
            int f = x.face(k, c, j);
            m.at(f, c) += (j % 2 == 0) ? 1 : -1;
        }
    return m;
}

IntMat boundary_matrix(const DeltaComplex& x, int k, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    std::vector<int> row_of(x.num_cells(k - 1), -1);
    for (int i = 0; i < int(rows.size()); ++i) row_of[rows[i]] = i;
    IntMat m(int(rows.size()), int(cols.size()));
    for (int c = 0; c < int(cols.size()); ++c)
        for (int j = 0; j <= k; ++j) {
            int f = x.face(k, cols[c], j);
            if (row_of[f] >= 0) m.at(row_of[f], c) += (j % 2 == 0) ? 1 : -1;
        }
    return m;
}

IntMat twisted_boundary_matrix(const DeltaComplex& x, const Z2Cocycle& l, int k) {
    int rows = k >= 1 ? x.num_cells(k - 1) : 0;
    int cols = x.num_cells(k);
    IntMat m(rows, cols);
    if (k < 1) return m;
    for (int c = 0; c < cols; ++c)
        for (int j = 0; j <= k; ++j) {
            int f = x.face(k, c, j);
            int s = (j % 2 == 0) ? 1 : -1;
            s *= transport_sign(x, l, k, c, j);
            m.at(f, c) += s;
        }
    return m;
}

namespace {

Chain chain_from_int_vector(Ring ring, int dim, const std::vector<Int>& v) {
    Chain c(ring, dim);
    for (int i = 0; i < int(v.size()); ++i)
        if (v[i] != 0) c.add(i, Rat(v[i]));
    return c;
}

// Presentation of ker(dk) / im(dk1) over Z, with coordinate data.
HomologyBasis z_basis(int dim, const IntMat& dk, const IntMat& dk1) {
    HomologyBasis hb;
    hb.ring = Ring::Z;
    hb.dim = dim;
    hb.group.ring = Ring::Z;

    auto kbasis = integer_kernel(dk);
    int r = int(kbasis.size());
    int n = dk.cols;
    hb.kernel = IntMat(n, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) hb.kernel.at(i, j) = kbasis[j][i];

    // Express the image of dk1 in kernel coordinates (each boundary is a
    // cycle, so the solve must succeed).
    SnfResult ksnf = smith_normal_form(hb.kernel);
    IntMat C(r, dk1.cols);
    for (int c = 0; c < dk1.cols; ++c) {
        std::vector<Int> col(dk1.rows);
        for (int i = 0; i < dk1.rows; ++i) col[i] = dk1.at(i, c);
        auto y = solve_integer(ksnf, col);
        if (!y) throw std::logic_error("homology: boundary is not a cycle");
        for (int i = 0; i < r; ++i) C.at(i, c) = (*y)[i];
    }

    SnfResult csnf = smith_normal_form(C);
    hb.coord = csnf.U;
    std::vector<Int> diag = csnf.diagonal();
    diag.resize(r, Int(0));

    for (int i = 0; i < r; ++i) {
        if (diag[i] == 1) continue;  // trivial coordinate
        hb.moduli.push_back(diag[i]);
        // generator: kernel * (Uinv e_i)
        std::vector<Int> e(r, Int(0));
        e[i] = 1;
        std::vector<Int> yc = mat_vec(csnf.Uinv, e);
        std::vector<Int> zc = mat_vec(hb.kernel, yc);
        hb.group.witnesses.push_back(chain_from_int_vector(Ring::Z, dim, zc));
        if (diag[i] == 0)
            hb.group.rank += 1;
        else
            hb.group.torsion.push_back(diag[i]);
    }
    // Keep track of which raw coordinates survive.
    int kept = 0;
    hb.image_pivots.clear();
    for (int i = 0; i < r; ++i)
        if (diag[i] != 1) {
            hb.image_pivots.push_back(i);  // reused as "kept index" list over Z
            ++kept;
        }
    (void)kept;
    return hb;
}

// Shared field-case presentation; `mod2` switches GF(2) arithmetic.
HomologyBasis field_basis(Ring ring, int dim, const IntMat& dk, const IntMat& dk1) {
    HomologyBasis hb;
    hb.ring = ring;
    hb.dim = dim;
    hb.group.ring = ring;
    bool mod2 = ring == Ring::Z2;

    int n = dk.cols;
    std::vector<std::vector<Rat>> kb;
    if (mod2) {
        GF2Mat m(dk.rows, dk.cols);
        for (int i = 0; i < dk.rows; ++i)
            for (int j = 0; j < dk.cols; ++j) {
                Int v = dk.at(i, j) % 2;
                m.at(i, j) = v != 0;
            }
        for (auto& kv : gf2_kernel(m)) {
            std::vector<Rat> col(n);
            for (int i = 0; i < n; ++i) col[i] = int(kv[i]);
            kb.push_back(std::move(col));
        }
    } else {
        RatMat m(dk.rows, dk.cols);
        for (int i = 0; i < dk.rows; ++i)
            for (int j = 0; j < dk.cols; ++j) m.at(i, j) = Rat(dk.at(i, j));
        kb = rat_kernel(m);
    }
    int r = int(kb.size());
    hb.kernel_q = RatMat(n, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) hb.kernel_q.at(i, j) = kb[j][i];

    // Image of dk1 in kernel coordinates, then row-reduce the transpose to
    // get a canonical reduction: pivots are killed coordinates.
    std::vector<std::vector<Rat>> img_coords;
    for (int c = 0; c < dk1.cols; ++c) {
        std::vector<Rat> col(dk1.rows);
        bool zero = true;
        for (int i = 0; i < dk1.rows; ++i) {
            col[i] = Rat(dk1.at(i, c));
            if (mod2) {
                Int v = dk1.at(i, c) % 2;
                col[i] = v != 0 ? 1 : 0;
            }
            if (col[i] != 0) zero = false;
        }
        if (zero) continue;
        std::optional<std::vector<Rat>> y;
        if (mod2) {
            GF2Mat km(n, r);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < r; ++j) km.at(i, j) = hb.kernel_q.at(i, j) != 0;
            std::vector<unsigned char> bb(n);
            for (int i = 0; i < n; ++i) bb[i] = col[i] != 0;
            auto sol = gf2_solve(km, bb);
            if (sol) {
                y.emplace(r);
                for (int j = 0; j < r; ++j) (*y)[j] = int((*sol)[j]);
            }
        } else {
            y = rat_solve(hb.kernel_q, col);
        }
        if (!y) throw std::logic_error("homology: boundary is not a cycle");
        img_coords.push_back(*y);
    }

    // RREF of the image rows (each row a generator of the image subspace in
    // kernel coordinates).
    RatMat rows(int(img_coords.size()), r);
    for (int i = 0; i < int(img_coords.size()); ++i)
        for (int j = 0; j < r; ++j) rows.at(i, j) = img_coords[i][j];
    // mod-2 aware row reduction over Rat entries restricted to {0,1}
    std::vector<int> pivots;
    {
        int row = 0;
        for (int col = 0; col < r && row < rows.rows; ++col) {
            int p = -1;
            for (int i = row; i < rows.rows; ++i)
                if (rows.at(i, col) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            for (int j = 0; j < r; ++j) std::swap(rows.at(p, j), rows.at(row, j));
            Rat inv = rows.at(row, col);
            for (int j = 0; j < r; ++j) {
                rows.at(row, j) /= inv;
                if (mod2) rows.at(row, j) = ring_normalize(Ring::Z2, rows.at(row, j));
            }
            for (int i = 0; i < rows.rows; ++i) {
                if (i == row || rows.at(i, col) == 0) continue;
                Rat f = rows.at(i, col);
                for (int j = 0; j < r; ++j) {
                    rows.at(i, j) -= f * rows.at(row, j);
                    if (mod2) rows.at(i, j) = ring_normalize(Ring::Z2, rows.at(i, j));
                }
            }
            pivots.push_back(col);
            ++row;
        }
    }
    hb.image_in_kernel_q = rows;
    hb.image_pivots = pivots;

    std::vector<bool> is_pivot(r, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int j = 0; j < r; ++j) {
        if (is_pivot[j]) continue;
        hb.group.rank += 1;
        Chain w(ring, dim);
        for (int i = 0; i < n; ++i)
            if (hb.kernel_q.at(i, j) != 0) w.add(i, hb.kernel_q.at(i, j));
        hb.group.witnesses.push_back(std::move(w));
    }
    return hb;
}

}  // namespace

ClassCoords HomologyBasis::coords(const Chain& z) const {
    if (z.dim() != dim) throw std::invalid_argument("coords: wrong degree");
    if (ring == Ring::Z) {
        std::vector<Int> v(kernel.rows, Int(0));
        for (const auto& [c, val] : z.coeffs()) {
            if (denominator(val) != 1) throw std::invalid_argument("coords: non-integer chain");
            v[c] = numerator(val);
        }
        auto y = solve_integer(kernel, v);
        if (!y) throw std::invalid_argument("coords: chain is not a cycle");
        std::vector<Int> w = mat_vec(coord, *y);
        ClassCoords out;
        int mi = 0;
        for (int kept : image_pivots) {
            Int m = moduli[mi++];
            Int val = w[kept];
            if (m != 0) {
                val %= m;
                if (val < 0) val += m;
            }
            out.push_back(Rat(val));
        }
        return out;
    }
    bool mod2 = ring == Ring::Z2;
    int n = kernel_q.rows, r = kernel_q.cols;
    std::vector<Rat> v(n, Rat(0));
    for (const auto& [c, val] : z.coeffs()) v[c] = val;
    std::optional<std::vector<Rat>> y;
    if (mod2) {
        GF2Mat km(n, r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < r; ++j) km.at(i, j) = kernel_q.at(i, j) != 0;
        std::vector<unsigned char> bb(n);
        for (int i = 0; i < n; ++i) bb[i] = ring_normalize(Ring::Z2, v[i]) != 0;
        auto sol = gf2_solve(km, bb);
        if (sol) {
            y.emplace(r);
            for (int j = 0; j < r; ++j) (*y)[j] = int((*sol)[j]);
        }
    } else {
        y = rat_solve(kernel_q, v);
    }
    if (!y) throw std::invalid_argument("coords: chain is not a cycle");
    // reduce modulo image rows
    for (int i = 0; i < image_in_kernel_q.rows && i < int(image_pivots.size()); ++i) {
        int p = image_pivots[i];
        Rat f = (*y)[p];
        if (f == 0) continue;
        for (int j = 0; j < r; ++j) {
            (*y)[j] -= f * image_in_kernel_q.at(i, j);
            if (mod2) (*y)[j] = ring_normalize(Ring::Z2, (*y)[j]);
        }
    }
    std::vector<bool> is_pivot(r, false);
    for (int p : image_pivots) is_pivot[p] = true;
    ClassCoords out;
    for (int j = 0; j < r; ++j)
        if (!is_pivot[j]) out.push_back((*y)[j]);
    return out;
}

HomologyBasis homology_basis(const DeltaComplex& x, Ring ring, int k) {
    IntMat dk, dk1;
    if (k < 0 || k > x.top_dim()) {
        dk = IntMat(0, 0);
        dk1 = IntMat(0, 0);
    } else {
        dk = boundary_matrix(x, k);
        dk1 = k + 1 <= x.top_dim() ? boundary_matrix(x, k + 1) : IntMat(x.num_cells(k), 0);
    }
    return ring == Ring::Z ? z_basis(k, dk, dk1) : field_basis(ring, k, dk, dk1);
}

AbelianGroupPresentation homology_groups(const DeltaComplex& x, Ring ring, int k) {
    return homology_basis(x, ring, k).group;
}

AbelianGroupPresentation twisted_homology(const DeltaComplex& x, const Z2Cocycle& l, Ring ring,
                                          int k) {
    ValidationReport rep = validate_cocycle(x, l);
    if (!rep.ok()) throw std::invalid_argument("twisted_homology: " + rep.issues[0].message);
    IntMat dk, dk1;
    if (k < 0 || k > x.top_dim()) {
        dk = IntMat(0, 0);
        dk1 = IntMat(0, 0);
    } else {
        dk = twisted_boundary_matrix(x, l, k);
        dk1 = k + 1 <= x.top_dim() ? twisted_boundary_matrix(x, l, k + 1)
                                   : IntMat(x.num_cells(k), 0);
    }
    return (ring == Ring::Z ? z_basis(k, dk, dk1) : field_basis(ring, k, dk, dk1)).group;
}

BoundaryWitness is_boundary(const Chain& c, const DeltaComplex& x) {
    if (!boundary_chain(c, x).is_zero())
        throw std::invalid_argument("is_boundary: chain is not a cycle");
    std::vector<std::vector<int>> all(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d)
        for (int i = 0; i < x.num_cells(d); ++i) all[d].push_back(i);
    return is_boundary_relative(c, x, all);
}

BoundaryWitness is_boundary_relative(const Chain& c, const DeltaComplex& x,
                                     const std::vector<std::vector<int>>& cells_by_dim) {
    int k = c.dim();
    BoundaryWitness out;
    const std::vector<int>& rows = cells_by_dim[k];
    std::vector<int> cols;
    if (k + 1 <= x.top_dim()) cols = cells_by_dim[k + 1];
    IntMat m = k + 1 <= x.top_dim() ? boundary_matrix(x, k + 1, rows, cols)
                                    : IntMat(int(rows.size()), 0);

    std::vector<int> row_of(x.num_cells(k), -1);
    for (int i = 0; i < int(rows.size()); ++i) row_of[rows[i]] = i;
    for (const auto& [cell, v] : c.coeffs())
        if (row_of[cell] < 0)
            throw std::invalid_argument("is_boundary_relative: chain leaves the locus");

    switch (c.ring()) {
        case Ring::Z: {
            std::vector<Int> b(rows.size(), Int(0));
            for (const auto& [cell, v] : c.coeffs()) b[row_of[cell]] = numerator(v);
            auto sol = solve_integer(m, b);
            if (sol) {
                out.is_boundary = true;
                Chain w(c.ring(), k + 1);
                for (int j = 0; j < int(cols.size()); ++j)
                    if ((*sol)[j] != 0) w.add(cols[j], Rat((*sol)[j]));
                out.witness = std::move(w);
            }
            break;
        }
        case Ring::Q: {
            RatMat rm(m.rows, m.cols);
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j) rm.at(i, j) = Rat(m.at(i, j));
            std::vector<Rat> b(rows.size(), Rat(0));
            for (const auto& [cell, v] : c.coeffs()) b[row_of[cell]] = v;
            auto sol = rat_solve(rm, b);
            if (sol) {
                out.is_boundary = true;
                Chain w(c.ring(), k + 1);
                for (int j = 0; j < int(cols.size()); ++j)
                    if ((*sol)[j] != 0) w.add(cols[j], (*sol)[j]);
                out.witness = std::move(w);
            }
            break;
        }
        case Ring::Z2: {
            GF2Mat gm(m.rows, m.cols);
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j) gm.at(i, j) = (m.at(i, j) % 2) != 0;
            std::vector<unsigned char> b(rows.size(), 0);
            for (const auto& [cell, v] : c.coeffs())
                b[row_of[cell]] = ring_normalize(Ring::Z2, v) != 0;
            auto sol = gf2_solve(gm, b);
            if (sol) {
                out.is_boundary = true;
                Chain w(c.ring(), k + 1);
                for (int j = 0; j < int(cols.size()); ++j)
                    if ((*sol)[j]) w.add(cols[j], Rat(1));
                out.witness = std::move(w);
            }
            break;
        }
    }
    return out;
}

}  // namespace strat
