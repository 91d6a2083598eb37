#pragma once

#include <array>

#include "atn/phase_cohomology.hpp"
#include "atn/tensorcore.hpp"

namespace atn {

// Order-two group, exponent g*h*k mod 2 on the non-identity triple.
Cochain z2_nontrivial_three_cocycle();
// Order-four group, exponent a*floor((b+c)/4) mod 4: the carry representative.
Cochain z4_carry_three_cocycle();

// Translation-invariant ring operator: left translation on every site times
// omega(element, r_i, r_i^-1 r_{i+1}) per bond, periodic. Axes {"row", "col"}.
Tensor build_mpu_operator(const FiniteGroup& g, const Cochain& w3, int element, int ring);

bool verify_mpu_group_law(const FiniteGroup& g, const Cochain& w3, int ring, double tol = 1e-9);
bool verify_mpu_unitarity(const FiniteGroup& g, const Cochain& w3, int element, int ring,
                          double tol = 1e-9);
// Exact per-bond decomposition of the composite weight: for all (r, s),
//   w3(eg, eh r, r^-1 s) + w3(eh, r, r^-1 s) = w3(eg eh, r, r^-1 s) + w3(eg, eh, s) - w3(eg, eh, r).
bool verify_product_phase_decomposition(const FiniteGroup& g, const Cochain& w3, int eg, int eh,
                                        ScalarWitness* w = nullptr);
// Conjugate-weight identity behind unitarity, entrywise for all (k, l):
//   -w3(eg, eg^-1 k, k^-1 l) = w3(eg, eg^-1, k) + w3(eg^-1, k, k^-1 l) - w3(eg, eg^-1, l).
bool verify_conjugate_weight_identity(const FiniteGroup& g, const Cochain& w3, int eg,
                                      ScalarWitness* w = nullptr);

// Two-colored square torus. Squares with even x+y host the on-site action,
// odd squares carry one shared label each. Every edge touches exactly one
// square of each color. Edge ids: horizontal edges first (index y*lx+x for the
// edge below square (x,y)), then vertical (lx*ly + y*lx+x, left of square (x,y)).
struct Chessboard {
    int lx = 0, ly = 0;

    int edges() const { return 2 * lx * ly; }
    int hedge(int x, int y) const;  // bottom edge of square (x, y)
    int vedge(int x, int y) const;  // left edge of square (x, y)
    bool is_site(int x, int y) const { return ((x + y) % 2 + 2) % 2 == 0; }
    // Edges of square (x, y) in reading order (top, right, bottom, left).
    std::array<int, 4> square_edges(int x, int y) const;
    std::vector<std::array<int, 2>> site_squares() const;
    std::vector<std::array<int, 2>> plaquette_squares() const;
};

Chessboard build_chessboard(int lx, int ly);

// One independent label per odd square, copied onto its four edges.
GhzSum chessboard_state(const FiniteGroup& g, const Chessboard& cb, long long modulus);

// On-site action on one even square's four edges, site order (top, right,
// bottom, left): left translation on each edge and four corner phases, the
// conjugated pair on the west side. corner_swap flips one corner (test hook).
BasisMap build_onsite_u(const FiniteGroup& g, const Cochain& w3, int element,
                        bool corner_swap = false);

bool verify_global_symmetry_2d(const FiniteGroup& g, const Cochain& w3, int lx, int ly,
                               bool corner_swap_control = false);

// Pushing the on-site action into the surrounding labels:
// (i) on the one-site patch the action equals edge translations plus arc
//     weights read from the neighbor labels,
// (ii) the boundary ring operator for eg composed with its inverse is the
//     projector onto per-bond pairs,
// (iii) growing the region cancels the facing arc weights across shared odd
//     squares as a scalar identity.
// drop_phase_control removes the arc weights from the pushed form (must fail).
bool verify_virtual_pushing_2d(const FiniteGroup& g, const Cochain& w3,
                               bool drop_phase_control = false);

// Ring of pair blocks: delta-chained labels with one arc weight per block.
// Dead configs are the broken-chain inputs.
BasisMap boundary_ring_operator(const FiniteGroup& g, const Cochain& w3, int element, int blocks,
                                bool drop_phase = false);

}  // namespace atn
