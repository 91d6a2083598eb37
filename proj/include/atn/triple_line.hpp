#pragma once

#include <array>
#include <optional>

#include "atn/phase_cohomology.hpp"
#include "atn/tensorcore.hpp"

namespace atn {

enum class Orientation { up, down };

// Site tensor of the string-operator network. It reads the three incident edge
// labels, relabels them by the group element, and carries a four-cocycle phase.
// Up and down orientations carry conjugate phases.
struct TripleLineSite {
    FiniteGroup group;
    Cochain omega;  // level 4, normalized
    int element = 0;
    Orientation orient = Orientation::up;
    // Test hook: one label triple whose amplitude is forced to zero.
    std::optional<std::array<int, 3>> zeroed;

    // Phase exponent at edge labels (k1, k2, k3); nullopt when the entry is zeroed.
    std::optional<long long> weight(int k1, int k2, int k3) const;
};

TripleLineSite build_site(const FiniteGroup& g, const Cochain& omega, int element, Orientation o);

// Product of two site tensors for eg and eh equals the site tensor for eg*eh
// dressed with its three corner factors, for every label triple. Down
// orientation must satisfy the conjugate identity.
bool verify_product_relation(const FiniteGroup& g, const Cochain& omega, int eg, int eh,
                             ScalarWitness* w = nullptr);

// Overlap of fusion dressings: equal element pairs give unit weight for every
// label, pairs that differ but share the product admit a vanishing-overlap
// witness label.
bool verify_fusion_orthogonality(const FiniteGroup& g, const Cochain& omega);

// Recoupling a triple product shifts the dressing by a pure scalar; the scalar
// identity must hold for every pair of transversal labels.
bool verify_associator_relation(const FiniteGroup& g, const Cochain& omega, int eg, int eh, int ek,
                                ScalarWitness* w = nullptr);

// Around a closed ring of transversal labels, the recoupling scalars cancel.
bool verify_fusion_associativity_ring(const FiniteGroup& g, const Cochain& omega, int eg, int eh,
                                      int ek, int ring);

// The quadruple-product recoupling scalar is label-independent and reproduces
// the cocycle entry. Throws InternalCheckError if the extraction is not constant.
PhaseInt extract_pentagon_scalar(const FiniteGroup& g, const Cochain& omega, int eg, int eh,
                                 int ek, int el);

// single_vertex: one site, three dangling edges. theta: two sites of opposite
// orientation sharing all three edges (the smallest closed patch).
enum class PatchKind { single_vertex, theta };

// (i) the identity-element network equals the outer product of the per-edge
// pair state with itself, (ii) it squares to itself up to its trace, and
// (iii) on the closed patch the composite weights of eg then eg^{-1} equal the
// identity-network weights for every labeling and every element.
bool verify_identity_projector(const FiniteGroup& g, const Cochain& omega, PatchKind patch);

// Distinct label triples must map to distinct nonzero physical columns.
bool verify_left_invertible(const TripleLineSite& site);

}  // namespace atn
