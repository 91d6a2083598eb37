#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "atn/group.hpp"
#include "atn/phase_cohomology.hpp"

namespace atn {

// Dense complex tensor with named axes. Row-major, first axis most significant.
struct Tensor {
    std::vector<std::string> axes;
    std::vector<std::size_t> dims;
    std::vector<std::complex<double>> data;

    static Tensor zeros(std::vector<std::string> axes, std::vector<std::size_t> dims);
    std::size_t size() const { return data.size(); }
    int axis(const std::string& name) const;  // throws ValidationError if absent
    std::size_t flat(std::span<const std::size_t> idx) const;
    std::complex<double>& at(std::span<const std::size_t> idx) { return data[flat(idx)]; }
    std::complex<double> at(std::span<const std::size_t> idx) const { return data[flat(idx)]; }
};

// Contract equal-dimension axis pairs (name in a, name in b).
// Result axes: a's free axes then b's free axes, original order kept.
Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<std::pair<std::string, std::string>>& pairs);
Tensor conj(const Tensor& t);
Tensor rename_axis(Tensor t, const std::string& from, const std::string& to);
// Axis names must be disjoint.
Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor scale(Tensor t, std::complex<double> s);
Tensor add(const Tensor& a, const Tensor& b);
// Axis name sets must agree; b is aligned to a's axis order before comparing.
bool allclose(const Tensor& a, const Tensor& b, double tol = 1e-9);
double frobenius_norm(const Tensor& t);

// delta(out, g*in) on the group basis. Axes {"out", "in"}.
Tensor left_regular(const FiniteGroup& g, int element);
// Unnormalized sum_t |t,t>. Axes {"left", "right"}.
Tensor max_entangled_pair(const FiniteGroup& g);

// ---- Generalized-permutation operator on a product of group-basis sites ----
// Config encoding: site 0 is the least significant digit base group_order.
struct BasisMap {
    int group_order = 1;
    int sites = 0;
    long long modulus = 1;
    std::vector<std::size_t> perm;
    std::vector<long long> phase;       // exponent mod modulus
    std::vector<std::uint8_t> dead;     // nonzero marks an annihilated input config

    static BasisMap identity(int group_order, int sites, long long modulus);
    std::size_t configs() const { return perm.size(); }
    bool any_dead() const;
};

std::size_t encode_config(std::span<const int> config, int group_order);
void decode_config(std::size_t idx, int group_order, std::span<int> out);

// apply b first, then a
BasisMap compose(const BasisMap& a, const BasisMap& b);
// Requires a bijective permutation with no dead configs.
BasisMap dagger(const BasisMap& m);
bool equal_maps(const BasisMap& a, const BasisMap& b);
// Axes {"row", "col"}; guard: total dimension <= 4096 by default.
Tensor basis_map_to_dense(const BasisMap& m);

// ---- Integer-weighted sums of product basis states over group-label sites ----
struct GhzSum {
    int group_order = 1;
    int sites = 0;
    long long modulus = 1;
    struct Term {
        std::vector<int> config;
        long long phase = 0;   // exponent mod modulus
        long long weight = 1;  // integer multiplicity
    };
    std::vector<Term> terms;
};

// All sites carry the same label: sum_t |t,...,t>.
GhzSum ghz_state(int group_order, int parties, long long modulus);
// Product of independent GHZ factors over a partition of the sites.
GhzSum ghz_product(int group_order, int total_sites, long long modulus,
                   const std::vector<std::vector<int>>& factors);
// Merge identical (config, phase) terms, drop zero weights.
void canonicalize(GhzSum& s);
GhzSum apply(const BasisMap& m, const GhzSum& s);
// m acts on the listed sites (m.sites == site_list length), identity elsewhere.
GhzSum apply_local(const BasisMap& m, const GhzSum& s, std::span<const int> site_list);
// Exact equality as complex superpositions: per-config phase polynomials are
// compared modulo the cyclotomic polynomial of the modulus.
bool equal_states(const GhzSum& a, const GhzSum& b);
// Dense vector, axes {"state"}; guard on total dimension.
Tensor ghz_to_vector(const GhzSum& s);

// Monic integer cyclotomic polynomial, ascending coefficients.
std::vector<long long> cyclotomic_polynomial(long long n);

}  // namespace atn
