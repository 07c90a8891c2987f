#ifndef STRAT_STRAT_MAP_HPP
#define STRAT_STRAT_MAP_HPP

#include <optional>
#include <vector>

#include "strat/smanifold.hpp"

namespace strat {

/**
 * A stratum-respecting cellular map between stratified models. Cells may map
 * to cells of lower dimension (collapse); face compatibility requires the
 * image of each face to be the assigned image cell or an iterated face of
 * it. Optional affine data gives the vertex images in the target's ambient
 * coordinates (the map is then affine on every realized cell).
 */
struct StratifiedMap {
    const SManifold* source = nullptr;
    const SManifold* target = nullptr;
    // cell_map[d][i] = image of the i-th d-cell (dimension <= d).
    std::vector<std::vector<CellRef>> cell_map;
    // Derived/declared stratum assignment (source stratum -> target stratum).
    std::vector<int> stratum_map;
    // Vertex images in target ambient coordinates, when both sides carry
    // realizations.
    std::optional<std::vector<std::vector<Rat>>> vertex_images;

    CellRef image(CellRef c) const { return cell_map[c.dim][c.idx]; }
    bool has_affine() const { return vertex_images.has_value(); }
};

// Identity map on s.
StratifiedMap identity_map(const SManifold& s);

// Composition g(f(.)); source/target pointers must agree.
StratifiedMap compose(const StratifiedMap& g, const StratifiedMap& f);

// Checks: cell images exist; face compatibility; stratum discipline (every
// stratum lands in exactly one stratum); affine data consistent with the
// cell images (vertices of image cells match the affine images of
// vertices... exact, when both realizations are present).
ValidationReport validate_map(const StratifiedMap& f);

// Pushforward of chains: collapsed cells contribute zero; dimension-
// preserving images contribute with coefficient +1 (face orders are
// preserved by cellular maps).
Chain pushforward(const StratifiedMap& f, const Chain& c);

// Linear part of the affine map on a realized cell: images of the tangent
// basis vectors of the cell (columns, in target ambient coordinates).
std::vector<std::vector<Rat>> map_tangent_columns(const StratifiedMap& f, CellRef c);

}  // namespace strat

#endif
