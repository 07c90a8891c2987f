#include "strat/delta_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "strat/matrix.hpp"

namespace strat {

int DeltaComplex::total_cells() const {
    int n = 0;
    for (const auto& d : cells_) n += int(d.size());
    return n;
}

int DeltaComplex::add_vertex() {
    cells_[0].push_back({});
    frozen_ = false;
    return int(cells_[0].size()) - 1;
}

int DeltaComplex::add_cell(int dim, std::vector<int> faces) {
    if (dim < 1 || dim > top_dim())
        throw std::invalid_argument("add_cell: dimension out of range");
    if (int(faces.size()) != dim + 1)
        throw std::invalid_argument("add_cell: face tuple must have dim+1 entries");
    cells_[dim].push_back(std::move(faces));
    frozen_ = false;
    return int(cells_[dim].size()) - 1;
}

void DeltaComplex::set_label(CellRef c, const std::string& label) {
    labels_[{c.dim, c.idx}] = label;
}

std::optional<std::string> DeltaComplex::label(CellRef c) const {
    auto it = labels_.find({c.dim, c.idx});
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>& DeltaComplex::vertex_tuple(int dim, int idx) const {
    if (!frozen_) throw std::logic_error("vertex_tuple: complex not frozen");
    return vertex_tuples_[dim].at(idx);
}

void DeltaComplex::freeze() {
    for (int k = 1; k <= top_dim(); ++k)
        for (int i = 0; i < num_cells(k); ++i)
            for (int f : cells_[k][i])
                if (f < 0 || f >= num_cells(k - 1))
                    throw std::invalid_argument("freeze: dangling face identifier");
    vertex_tuples_.assign(cells_.size(), {});
    vertex_tuples_[0].resize(num_cells(0));
    for (int i = 0; i < num_cells(0); ++i) vertex_tuples_[0][i] = {i};
    for (int k = 1; k <= top_dim(); ++k) {
        vertex_tuples_[k].resize(num_cells(k));
        for (int i = 0; i < num_cells(k); ++i) {
            // vertex 0 comes from face_1 (face_0 when k = 1 would drop it);
            // vertices 1..k come from face_0.
            const auto& rest = vertex_tuples_[k - 1][cells_[k][i][0]];
            int v0 = vertex_tuples_[k - 1][cells_[k][i][1]][0];
            std::vector<int> t;
            t.reserve(k + 1);
            t.push_back(v0);
            t.insert(t.end(), rest.begin(), rest.end());
            vertex_tuples_[k][i] = std::move(t);
        }
    }
    frozen_ = true;
}

Rat Chain::coeff(int cell) const {
    auto it = coeffs_.find(cell);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void Chain::add(int cell, const Rat& v) {
    Rat nv = ring_normalize(ring_, coeff(cell) + v);
    if (nv == 0)
        coeffs_.erase(cell);
    else
        coeffs_[cell] = nv;
}

void Chain::set(int cell, const Rat& v) {
    Rat nv = ring_normalize(ring_, v);
    if (nv == 0)
        coeffs_.erase(cell);
    else
        coeffs_[cell] = nv;
}

Chain Chain::operator+(const Chain& o) const {
    if (ring_ != o.ring_ || dim_ != o.dim_)
        throw std::invalid_argument("chain addition: ring/degree mismatch");
    Chain r = *this;
    for (const auto& [c, v] : o.coeffs_) r.add(c, v);
    return r;
}

Chain Chain::operator-() const {
    Chain r(ring_, dim_);
    for (const auto& [c, v] : coeffs_) r.set(c, -v);
    return r;
}

ValidationReport validate_complex(const DeltaComplex& x) {
    ValidationReport rep;
    for (int k = 1; k <= x.top_dim(); ++k)
        for (int i = 0; i < x.num_cells(k); ++i) {
            const auto& f = x.faces(k, i);
            if (int(f.size()) != k + 1) {
                rep.add("face_arity", "cell (" + std::to_string(k) + "," + std::to_string(i) +
                                          ") has " + std::to_string(f.size()) + " faces");
                continue;
            }
            for (int j = 0; j <= k; ++j)
                if (f[j] < 0 || f[j] >= x.num_cells(k - 1))
                    rep.add("closure", "cell (" + std::to_string(k) + "," + std::to_string(i) +
                                           ") face " + std::to_string(j) + " is dangling");
        }
    if (!rep.ok()) return rep;

    // simplicial identity: face_i(face_j(s)) = face_{j-1}(face_i(s)), i < j
    for (int k = 2; k <= x.top_dim(); ++k)
        for (int c = 0; c < x.num_cells(k); ++c)
            for (int j = 1; j <= k; ++j)
                for (int i = 0; i < j; ++i) {
                    int lhs = x.face(k - 1, x.face(k, c, j), i);
                    int rhs = x.face(k - 1, x.face(k, c, i), j - 1);
                    if (lhs != rhs)
                        rep.add("simplicial_identity",
                                "cell (" + std::to_string(k) + "," + std::to_string(c) +
                                    ") violates the identity at (i,j)=(" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
                }
    return rep;
}

Chain boundary_chain(const Chain& c, const DeltaComplex& x) {
    int k = c.dim();
    Chain out(c.ring(), k - 1);
    if (k == 0) return out;  // zero chain in degree -1 by convention
    for (const auto& [cell, v] : c.coeffs()) {
        if (cell < 0 || cell >= x.num_cells(k))
            throw std::invalid_argument("boundary_chain: unknown cell identifier");
        for (int j = 0; j <= k; ++j) {
            Rat s = (j % 2 == 0) ? v : -v;
            out.add(x.face(k, cell, j), s);
        }
    }
    return out;
}

std::vector<CellRef> closure_cells(const DeltaComplex& x, const std::vector<CellRef>& cells) {
    std::set<CellRef> seen;
    std::vector<CellRef> stack;
    for (CellRef c : cells) {
        if (!x.has_cell(c)) throw std::invalid_argument("closure_cells: unknown cell");
        if (seen.insert(c).second) stack.push_back(c);
    }
    while (!stack.empty()) {
        CellRef c = stack.back();
        stack.pop_back();
        if (c.dim == 0) continue;
        for (int f : x.faces(c.dim, c.idx)) {
            CellRef fc{c.dim - 1, f};
            if (seen.insert(fc).second) stack.push_back(fc);
        }
    }
    return {seen.begin(), seen.end()};
}

SubcomplexResult subcomplex(const DeltaComplex& x, const std::vector<CellRef>& cells) {
    std::vector<CellRef> closed = closure_cells(x, cells);
    std::vector<std::vector<int>> keep(x.top_dim() + 1);
    for (CellRef c : closed) keep[c.dim].push_back(c.idx);
    for (auto& v : keep) std::sort(v.begin(), v.end());

    int new_top = 0;
    for (int k = 0; k <= x.top_dim(); ++k)
        if (!keep[k].empty()) new_top = k;

    SubcomplexResult r;
    r.complex = DeltaComplex(new_top);
    r.to_old.resize(x.top_dim() + 1);
    r.to_new.resize(x.top_dim() + 1);
    for (int k = 0; k <= x.top_dim(); ++k) r.to_new[k].assign(x.num_cells(k), -1);

    for (int k = 0; k <= new_top; ++k)
        for (int old : keep[k]) {
            int ni;
            if (k == 0) {
                ni = r.complex.add_vertex();
            } else {
                std::vector<int> nf;
                for (int f : x.faces(k, old)) nf.push_back(r.to_new[k - 1][f]);
                ni = r.complex.add_cell(k, std::move(nf));
            }
            r.to_new[k][old] = ni;
            r.to_old[k].push_back(old);
            if (auto lbl = x.label({k, old})) r.complex.set_label({k, ni}, *lbl);
        }
    r.complex.freeze();
    return r;
}

std::vector<CellRef> star(const DeltaComplex& x, const std::vector<CellRef>& cells) {
    for (CellRef c : cells)
        if (!x.has_cell(c)) throw std::invalid_argument("star: unknown cell");
    // mark[dim][idx]: cell is in the star
    std::vector<std::vector<char>> mark(x.top_dim() + 1);
    for (int k = 0; k <= x.top_dim(); ++k) mark[k].assign(x.num_cells(k), 0);
    for (CellRef c : cells) mark[c.dim][c.idx] = 1;
    for (int k = 1; k <= x.top_dim(); ++k)
        for (int i = 0; i < x.num_cells(k); ++i)
            for (int f : x.faces(k, i))
                if (mark[k - 1][f]) {
                    mark[k][i] = 1;
                    break;
                }
    std::vector<CellRef> out;
    for (int k = 0; k <= x.top_dim(); ++k)
        for (int i = 0; i < x.num_cells(k); ++i)
            if (mark[k][i]) out.push_back({k, i});
    return out;
}

SubcomplexResult closed_star(const DeltaComplex& x, const std::vector<CellRef>& cells) {
    return subcomplex(x, star(x, cells));
}

ValidationReport validate_realization(const DeltaComplex& x, const AffineRealization& r) {
    ValidationReport rep;
    if (int(r.coords.size()) != x.num_cells(0)) {
        rep.add("coords_count", "coordinate count differs from vertex count");
        return rep;
    }
    for (int v = 0; v < x.num_cells(0); ++v)
        if (int(r.coords[v].size()) != r.ambient)
            rep.add("ambient", "vertex " + std::to_string(v) + " has wrong ambient dimension");
    if (!rep.ok()) return rep;

    for (int k = 1; k <= x.top_dim(); ++k)
        for (int i = 0; i < x.num_cells(k); ++i) {
            auto basis = cell_tangent_basis(x, r, {k, i});
            RatMat m(r.ambient, k);
            for (int j = 0; j < k; ++j)
                for (int a = 0; a < r.ambient; ++a) m.at(a, j) = basis[j][a];
            if (rat_rank(m) != k)
                rep.add("affine_dependence", "cell (" + std::to_string(k) + "," +
                                                 std::to_string(i) +
                                                 ") has affinely dependent vertices");
        }
    return rep;
}

std::vector<std::vector<Rat>> cell_tangent_basis(const DeltaComplex& x,
                                                 const AffineRealization& r, CellRef c) {
    const auto& vt = x.vertex_tuple(c.dim, c.idx);
    std::vector<std::vector<Rat>> basis;
    for (int j = 1; j <= c.dim; ++j) {
        std::vector<Rat> v(r.ambient);
        for (int a = 0; a < r.ambient; ++a) v[a] = r.coords[vt[j]][a] - r.coords[vt[0]][a];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> cell_barycenter(const DeltaComplex& x, const AffineRealization& r, CellRef c) {
    const auto& vt = x.vertex_tuple(c.dim, c.idx);
    std::vector<Rat> p(r.ambient, Rat(0));
    for (int v : vt)
        for (int a = 0; a < r.ambient; ++a) p[a] += r.coords[v][a];
    for (auto& q : p) q /= int(vt.size());
    return p;
}

}  // namespace strat
