#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atn/group.hpp"

namespace atn {

using BigInt = boost::multiprecision::cpp_int;

// Root of unity exp(2*pi*i*num/modulus), stored exactly as an exponent.
struct PhaseInt {
    long long num = 0;
    long long modulus = 1;

    PhaseInt() = default;
    PhaseInt(long long n, long long l) : num(((n % l) + l) % l), modulus(l) {}
    PhaseInt operator*(const PhaseInt& o) const;
    PhaseInt conj() const { return PhaseInt(-num, modulus); }
    std::complex<double> to_complex() const;
    bool operator==(const PhaseInt& o) const;
};

// First violation of a scalar identity: the label tuple and both exponents.
struct ScalarWitness {
    std::vector<int> where;
    long long lhs = 0, rhs = 0;
};

// n-cochain on G with values in Z_modulus (exponents of phases).
// Flat storage, tuple (g1..gn) at index ((g1*|G| + g2)*|G| + ...) so g1 is most significant.
struct Cochain {
    FiniteGroup group;
    int level = 0;
    long long modulus = 1;
    std::vector<long long> values;

    static Cochain zero(const FiniteGroup& g, int level, long long modulus);

    std::size_t size() const { return values.size(); }
    std::size_t index(std::span<const int> tuple) const;
    void tuple_of(std::size_t idx, std::span<int> out) const;
    long long at(std::span<const int> tuple) const { return values[index(tuple)]; }
    long long& at(std::span<const int> tuple) { return values[index(tuple)]; }
    long long operator()(std::initializer_list<int> tuple) const {
        return at(std::span<const int>(tuple.begin(), tuple.size()));
    }
    void reduce();  // bring all values into [0, modulus)

    // Same group, level and modulus required.
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    bool operator==(const Cochain& o) const;
};

// Inhomogeneous coboundary, level n -> n+1:
// (dc)(g1..g_{n+1}) = c(g2..g_{n+1}) + sum_i (-1)^i c(..g_i g_{i+1}..) + (-1)^{n+1} c(g1..g_n).
Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);
// Zero on every tuple containing the identity.
bool is_normalized(const Cochain& c);

// Multiply exponents into a coarser ring; new_modulus must be a multiple of c.modulus.
Cochain rescale(const Cochain& c, long long new_modulus);
// Uniform values on identity-free tuples, zero elsewhere. Deterministic in seed.
Cochain random_normalized_cochain(const FiniteGroup& g, int level, long long modulus,
                                  std::uint64_t seed);

// The four on-site 4-cocycle representatives on Z2xZ2 (element = 2*first + second, modulus 2):
// value(g,h,k,l) = p0*g0*h1*k1*l1 + p1*g1*h0*k0*l0.
Cochain zxz_four_cocycle(int p0, int p1);

// ---- Integer matrices, Smith normal form, modular linear solving ----

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    static IntMat identity(int n);
};

// u * input * v = d with d diagonal, nonnegative, each entry dividing the next.
struct SmithResult {
    IntMat d, u, v;
    int rank = 0;
    std::vector<BigInt> diagonal;  // the rank nonzero invariant factors
};
SmithResult smith_normal_form(IntMat m);

// Rank over the rationals (fraction-free elimination).
int integer_rank(IntMat m);

// One solution of m*x = b (mod l) plus the exact solution count mod l.
struct ModSolveResult {
    bool solvable = false;
    std::vector<long long> x;
    BigInt solution_count = 0;
};
ModSolveResult solve_mod_linear(const SmithResult& s, const std::vector<long long>& b, long long l);
ModSolveResult solve_mod_linear(const IntMat& m, const std::vector<long long>& b, long long l);

// |kernel of m acting on (Z_l)^cols| and |image of m in (Z_l)^rows|.
BigInt kernel_size_mod(const SmithResult& s, int cols, long long l);
BigInt image_size_mod(const SmithResult& s, long long l);

// ---- Cohomology of finite groups with U(1) coefficients ----

// Invariant factors (>1, ascending) of H^n(G, U(1)), computed as the torsion of
// H^{n+1}(G, Z) on the normalized bar complex. The free rank must come out zero
// for a finite group; a nonzero value raises InternalCheckError.
std::vector<long long> cohomology_group(const FiniteGroup& g, int n);

// Witness alpha over Z_{l_search} with d(alpha) = c1 - c2, if one exists.
// Both moduli must divide l_search. Searches the full (non-normalized) complex.
std::optional<Cochain> coboundary_equivalent(const Cochain& c1, const Cochain& c2,
                                             long long l_search);

// Shift c by a coboundary so it vanishes on identity-containing tuples.
// Solves only the identity-tuple rows; retries once at doubled modulus.
struct NormalizeResult {
    Cochain normalized;
    Cochain alpha;  // c_rescaled - d(alpha) = normalized, alpha.modulus = normalized.modulus
};
NormalizeResult normalize_cocycle(const Cochain& c);

// ---- Cochain file I/O ----
// Header "group=<spec> level=<n> modulus=<l>", then lines "g1 ... gn -> value".
// Missing tuples read as zero.
Cochain cochain_from_stream(std::istream& in);
Cochain cochain_from_file(const std::string& path);
void cochain_to_stream(std::ostream& out, const Cochain& c, const std::string& group_spec);

}  // namespace atn
