#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "atn/phase_cohomology.hpp"
#include "atn/tensorcore.hpp"

namespace atn {

// Periodic triangular lattice. Vertices carry group labels; each unit cell
// (x, y) holds one up and one down triangle. Both orientations list the vertex
// from the opposite row in the middle slot; the group-law and single-triangle
// gate checks pin this ordering.
struct TriTorus {
    int lx = 0, ly = 0;
    std::vector<std::array<int, 3>> up, down;

    int vertices() const { return lx * ly; }
    int vertex(int x, int y) const {
        x = ((x % lx) + lx) % lx;
        y = ((y % ly) + ly) % ly;
        return y * lx + x;
    }
};

TriTorus build_lattice(int lx, int ly);

// Total phase exponent of the element's move on one vertex labeling:
// up triangles add omega(e, r1, r1^-1 r2, r2^-1 r3), down triangles subtract.
long long tnu_phase(const Cochain& omega, const TriTorus& t, int element,
                    std::span<const int> config);

// The full operator: left translation on every vertex times the lattice phase.
// Requires a normalized cocycle; the identity element gives the identity map.
BasisMap build_tnu(const Cochain& omega, int element, const TriTorus& t);

enum class CheckMode { exhaustive, sample };

struct GroupLawReport {
    bool ok = true;
    std::size_t checked = 0;
    int eg = 0, eh = 0;
    std::vector<int> witness_config;
};

bool verify_group_law(const Cochain& omega, const TriTorus& t, CheckMode mode,
                      std::size_t samples, std::uint64_t seed, GroupLawReport* rep = nullptr);

// U_g^dagger equals U_{g^-1} as maps, and the conjugate-weight identity that
// backs it holds entrywise for every label triple.
bool verify_unitarity(const Cochain& omega, const TriTorus& t, int element);

// Composing the eg and eh operators leaves per-edge correction factors that
// cancel between the up and down triangle sharing each edge. Checks the paired
// geometry on a small torus and the three-term reduction for all labels.
bool verify_boundary_fusion(const Cochain& omega, int eg, int eh, ScalarWitness* w = nullptr);

// Weight attached to a plaquette move on the four boundary labels.
PhaseInt plaquette_vertex_weight(const Cochain& omega, int eg, int eh, int ek, int el);

// The six-triangle dictionary around one site reproduces the plaquette weight
// pattern for both element arguments.
bool verify_plaquette_consistency(const Cochain& omega, int eg, int eh);

}  // namespace atn
