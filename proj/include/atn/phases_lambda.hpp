#pragma once

#include <iosfwd>
#include <optional>

#include "atn/phase_cohomology.hpp"

namespace atn {

// Finite left G-action on a set X. action[g*size + x] = g.x.
struct GSet {
    int size = 1;
    std::vector<int> action;

    int act(int g, int x) const { return action[static_cast<std::size_t>(g) * size + x]; }
    // Identity acts trivially and (gh).x = g.(h.x); throws ValidationError otherwise.
    void validate(const FiniteGroup& g) const;
};

GSet trivial_gset(const FiniteGroup& g);
// Left translation on the cosets xH. coset_of maps each group element to its coset index;
// coset 0 contains the identity.
GSet coset_gset(const FiniteGroup& g, const std::vector<int>& subgroup_elems,
                std::vector<int>* coset_of = nullptr);
// First line "size=<m>", then |G| rows of m entries.
GSet gset_from_stream(std::istream& in, const FiniteGroup& g);

// Candidate solution of the mixed equation: three group slots and one set slot.
struct LambdaField {
    FiniteGroup group;
    GSet xs;
    long long modulus = 1;
    std::vector<long long> values;

    std::size_t index(int g, int h, int k, int x) const {
        std::size_t n = static_cast<std::size_t>(group.order());
        return ((static_cast<std::size_t>(g) * n + h) * n + k) * xs.size + x;
    }
    long long at(int g, int h, int k, int x) const { return values[index(g, h, k, x)]; }
};

// Residual of the five-term mixed equation against the four-cocycle, indexed by
// (g, h, k, l, x):
//   lam(g,h,k,l.x) + lam(g,hk,l,x) + lam(h,k,l,x) - lam(g,h,kl,x) - lam(gh,k,l,x) - omega(g,h,k,l).
std::vector<long long> mixed_residual(const LambdaField& lam, const Cochain& omega);
bool satisfies_mixed_equation(const LambdaField& lam, const Cochain& omega);

struct LambdaClassification {
    bool solvable = false;
    std::optional<LambdaField> representative;
    BigInt solution_count = 0;  // solutions of the inhomogeneous system mod l
    BigInt freedom_image = 0;   // image size of the beta-shift map
    BigInt classes = 0;         // homogeneous kernel size / freedom image
    long long modulus = 0;
};

// Solve the mixed equation for lambda over Z_l and count solutions modulo the
// two-slot beta freedom. The kernel size must divide by the freedom image
// exactly; anything else raises InternalCheckError.
LambdaClassification classify_lambda(const FiniteGroup& g, const Cochain& omega, const GSet& xs,
                                     long long l);

// On a one-point set the mixed equation is solvable exactly when omega bounds.
// Dual routes (mixed solver and direct coboundary search) must agree at
// l = 2|G| and 4|G|; disagreement raises InternalCheckError. Returns true when
// omega is obstructed both ways at both moduli.
bool anomaly_obstruction(const FiniteGroup& g, const Cochain& omega);

struct RestrictionResult {
    Cochain lambda_tilde;        // level-3 cochain on the subgroup
    bool three_cocycle = false;  // closure of the restriction
};

// Restrict lambda at a fixed point of the action to the stabilizing subgroup,
// shifted by a trivializing alpha with d(alpha) = omega on that subgroup. When
// alpha is null it is searched at lambda's modulus and doubled once.
RestrictionResult restrict_to_unbroken(const LambdaField& lam, const Cochain& omega,
                                       const std::vector<int>& subgroup_elems, int fixed_x,
                                       const Cochain* alpha = nullptr);

}  // namespace atn
