#include "strat/strat_map.hpp"

#include <set>
#include <stdexcept>

namespace strat {

StratifiedMap identity_map(const SManifold& s) {
    StratifiedMap f;
    f.source = &s;
    f.target = &s;
    f.cell_map.resize(s.complex.top_dim() + 1);
    for (int d = 0; d <= s.complex.top_dim(); ++d)
        for (int i = 0; i < s.complex.num_cells(d); ++i) f.cell_map[d].push_back({d, i});
    f.stratum_map.resize(s.num_strata);
    for (int i = 0; i < s.num_strata; ++i) f.stratum_map[i] = i;
    if (s.realization) {
        f.vertex_images = s.realization->coords;
    }
    return f;
}

StratifiedMap compose(const StratifiedMap& g, const StratifiedMap& f) {
    if (f.target != g.source) throw std::invalid_argument("compose: target/source mismatch");
    StratifiedMap h;
    h.source = f.source;
    h.target = g.target;
    h.cell_map.resize(f.cell_map.size());
    for (int d = 0; d < int(f.cell_map.size()); ++d)
        for (const CellRef& c : f.cell_map[d]) h.cell_map[d].push_back(g.image(c));
    h.stratum_map.resize(f.stratum_map.size());
    for (int i = 0; i < int(f.stratum_map.size()); ++i)
        h.stratum_map[i] = g.stratum_map[f.stratum_map[i]];
    if (f.has_affine() && g.has_affine()) {
        // Affine images of source vertices under g: evaluate g affinely on
        // the image cell. We only need the vertex images; when f maps a
        // vertex to a target vertex this is a lookup, otherwise evaluate via
        // barycentric coordinates of the affine image (not needed in this
        // project: vertex images are vertices for all corpus maps).
        std::vector<std::vector<Rat>> imgs;
        bool ok = true;
        for (int v = 0; v < f.source->complex.num_cells(0); ++v) {
            CellRef iv = f.image({0, v});
            if (iv.dim != 0) {
                ok = false;
                break;
            }
            imgs.push_back((*g.vertex_images)[iv.idx]);
        }
        if (ok) h.vertex_images = std::move(imgs);
    }
    return h;
}

namespace {

bool is_iterated_face(const DeltaComplex& x, CellRef big, CellRef small) {
    if (small == big) return true;
    if (small.dim >= big.dim) return false;
    std::set<CellRef> frontier{big};
    for (int d = big.dim; d > small.dim; --d) {
        std::set<CellRef> next;
        for (CellRef c : frontier)
            for (int f : x.faces(c.dim, c.idx)) next.insert({d - 1, f});
        frontier = std::move(next);
    }
    return frontier.count(small) > 0;
}

}  // namespace

ValidationReport validate_map(const StratifiedMap& f) {
    ValidationReport rep;
    const SManifold& X = *f.source;
    const SManifold& Y = *f.target;
    if (int(f.cell_map.size()) != X.complex.top_dim() + 1) {
        rep.add("cell_map", "cell map missing dimensions");
        return rep;
    }
    for (int d = 0; d <= X.complex.top_dim(); ++d) {
        if (int(f.cell_map[d].size()) != X.complex.num_cells(d)) {
            rep.add("cell_map", "cell map wrong arity in dimension " + std::to_string(d));
            return rep;
        }
        for (int i = 0; i < X.complex.num_cells(d); ++i) {
            CellRef img = f.cell_map[d][i];
            if (!Y.complex.has_cell(img))
                rep.add("cell_map", "image cell missing for (" + std::to_string(d) + "," +
                                        std::to_string(i) + ")");
            else if (img.dim > d)
                rep.add("cell_map", "image dimension exceeds source dimension at (" +
                                        std::to_string(d) + "," + std::to_string(i) + ")");
        }
    }
    if (!rep.ok()) return rep;

    // face compatibility
    for (int d = 1; d <= X.complex.top_dim(); ++d)
        for (int i = 0; i < X.complex.num_cells(d); ++i) {
            CellRef img = f.cell_map[d][i];
            for (int j = 0; j <= d; ++j) {
                CellRef fi = f.cell_map[d - 1][X.complex.face(d, i, j)];
                if (!is_iterated_face(Y.complex, img, fi))
                    rep.add("continuity", "face image of (" + std::to_string(d) + "," +
                                              std::to_string(i) + ") at face " +
                                              std::to_string(j) +
                                              " is not a face of the cell image");
            }
            // dimension-preserving cells must map face-by-face
            if (img.dim == d)
                for (int j = 0; j <= d; ++j) {
                    CellRef fi = f.cell_map[d - 1][X.complex.face(d, i, j)];
                    if (fi != CellRef{d - 1, Y.complex.face(d, img.idx, j)})
                        rep.add("continuity", "nondegenerate cell (" + std::to_string(d) + "," +
                                                  std::to_string(i) +
                                                  ") does not commute with face maps");
                }
        }

    // stratum discipline
    if (int(f.stratum_map.size()) != X.num_strata) {
        rep.add("strata", "stratum map has wrong arity");
        return rep;
    }
    for (int s = 0; s < X.num_strata; ++s)
        for (CellRef c : X.cells_of_stratum(s)) {
            int t = Y.stratum(f.image(c));
            if (t != f.stratum_map[s]) {
                rep.add("strata", "stratum " + std::to_string(s) +
                                      " does not land in a single stratum");
                break;
            }
        }

    // affine data consistency: vertex images must be the coordinates of the
    // image vertices when the image is a vertex, and for every cell the
    // affine extension of the vertex images must have image inside the
    // affine hull of the image cell. We check the first (exact, and what the
    // corpus uses); collapsed cells are checked for constancy when the image
    // is a vertex.
    if (f.has_affine()) {
        if (!Y.realization) {
            rep.add("affine", "affine data present but target has no realization");
            return rep;
        }
        if (int(f.vertex_images->size()) != X.complex.num_cells(0)) {
            rep.add("affine", "vertex image count mismatch");
            return rep;
        }
        for (int v = 0; v < X.complex.num_cells(0); ++v) {
            CellRef iv = f.image({0, v});
            if (iv.dim == 0 && (*f.vertex_images)[v] != Y.realization->coords[iv.idx])
                rep.add("affine", "vertex " + std::to_string(v) +
                                      " affine image differs from its cell image");
            if (int((*f.vertex_images)[v].size()) != Y.realization->ambient)
                rep.add("affine", "vertex " + std::to_string(v) + " has wrong ambient dimension");
        }
    }
    return rep;
}

Chain pushforward(const StratifiedMap& f, const Chain& c) {
    Chain out(c.ring(), c.dim());
    for (const auto& [cell, v] : c.coeffs()) {
        CellRef img = f.cell_map[c.dim()][cell];
        if (img.dim == c.dim()) out.add(img.idx, v);
    }
    return out;
}

std::vector<std::vector<Rat>> map_tangent_columns(const StratifiedMap& f, CellRef c) {
    if (!f.has_affine()) throw std::invalid_argument("map_tangent_columns: no affine data");
    const auto& vt = f.source->complex.vertex_tuple(c.dim, c.idx);
    std::vector<std::vector<Rat>> cols;
    const auto& vi = *f.vertex_images;
    for (int j = 1; j <= c.dim; ++j) {
        std::vector<Rat> col(vi[vt[0]].size());
        for (int a = 0; a < int(col.size()); ++a) col[a] = vi[vt[j]][a] - vi[vt[0]][a];
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace strat
