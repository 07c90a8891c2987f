#ifndef STRAT_HOMOLOGY_HPP
#define STRAT_HOMOLOGY_HPP

#include <optional>
#include <vector>

#include "strat/delta_complex.hpp"
#include "strat/matrix.hpp"

namespace strat {

/**
 * A finitely generated abelian group (or vector space over Z2/Q) presented by
 * free rank and invariant factors, with cycle witnesses for the generators.
 * Over a field the torsion list is empty and rank is the dimension.
 */
struct AbelianGroupPresentation {
    Ring ring = Ring::Z;
    long rank = 0;
    std::vector<Int> torsion;  // each > 1, d_i | d_{i+1}
    // Witness cycles: one chain per torsion generator, then per free
    // generator, in coordinate order.
    std::vector<Chain> witnesses;

    long num_coords() const { return long(torsion.size()) + rank; }
    bool same_shape(const AbelianGroupPresentation& o) const {
        return ring == o.ring && rank == o.rank && torsion == o.torsion;
    }
};

// Class coordinates of a cycle: entry i is taken modulo torsion[i] for the
// torsion coordinates and is an exact integer/field scalar for free ones.
using ClassCoords = std::vector<Rat>;

/** Z2-local system presented as a +/-1 value on every 1-cell. */
struct Z2Cocycle {
    std::vector<int> edge_sign;  // per 1-cell, each +1 or -1

    int sign(int edge) const { return edge_sign[edge]; }
};

// Cocycle condition: the product of the values on the three faces of every
// 2-cell is +1.
ValidationReport validate_cocycle(const DeltaComplex& x, const Z2Cocycle& l);

// Monodromy factor of the j-th face term of a cell, under the transport
// convention: each cell's basepoint is its lexicographically least vertex
// (least id, then least position); the factor is the cocycle value on the
// straight edge of the cell joining the cell's basepoint to the face's
// basepoint (+1 when they coincide).
int transport_sign(const DeltaComplex& x, const Z2Cocycle& l, int dim, int idx, int j);

// Boundary operator with local coefficients. Throws on cocycle violation.
Chain twisted_boundary(const Chain& c, const DeltaComplex& x, const Z2Cocycle& l);

// --- chain complexes over cell subsets --------------------------------------

// Boundary matrix C_k -> C_{k-1} over Z (entries are signed incidence
// counts); rows index (k-1)-cells, columns k-cells. Optional cell filters
// restrict rows/columns to an open union of cells (Borel-Moore style chains
// of a locally closed union).
IntMat boundary_matrix(const DeltaComplex& x, int k);
IntMat boundary_matrix(const DeltaComplex& x, int k, const std::vector<int>& rows,
                       const std::vector<int>& cols);
IntMat twisted_boundary_matrix(const DeltaComplex& x, const Z2Cocycle& l, int k);

// --- homology ----------------------------------------------------------------

// Internal basis data allowing coordinates of cycles in the presentation.
struct HomologyBasis {
    AbelianGroupPresentation group;
    // Over Z: kernel basis K (n_k x r), coordinate transform, diagonal.
    IntMat kernel;        // columns span ker d_k
    IntMat coord;         // maps kernel coordinates to presentation coordinates
    std::vector<Int> moduli;  // per presentation coordinate: 0 = free, else d_i >= 2
    // Field cases keep rational data.
    RatMat kernel_q;
    RatMat image_in_kernel_q;  // image coords, reduced; used for field reduction
    std::vector<int> image_pivots;
    Ring ring = Ring::Z;
    int dim = 0;

    // Coordinates of a cycle z in the presentation (throws if z is not a
    // cycle of the complex used to build this basis).
    ClassCoords coords(const Chain& z) const;
};

// Homology of the cellular chain complex in degree k over the ring.
// Degrees outside [0, top_dim] give the zero group.
AbelianGroupPresentation homology_groups(const DeltaComplex& x, Ring ring, int k);
HomologyBasis homology_basis(const DeltaComplex& x, Ring ring, int k);

// Twisted variants.
AbelianGroupPresentation twisted_homology(const DeltaComplex& x, const Z2Cocycle& l, Ring ring,
                                          int k);

// Is the (checked) cycle c a boundary? Returns a witness chain b with
// d(b) = c when true. Throws std::invalid_argument when c is not a cycle.
struct BoundaryWitness {
    bool is_boundary = false;
    std::optional<Chain> witness;
};
BoundaryWitness is_boundary(const Chain& c, const DeltaComplex& x);

// Variant over a locally closed union of cells: chains and boundaries are
// restricted to the given cells (coefficients outside are dropped).
BoundaryWitness is_boundary_relative(const Chain& c, const DeltaComplex& x,
                                     const std::vector<std::vector<int>>& cells_by_dim);

}  // namespace strat

#endif
