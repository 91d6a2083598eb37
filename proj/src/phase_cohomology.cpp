#include "atn/phase_cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "atn/errors.hpp"

namespace atn {

PhaseInt PhaseInt::operator*(const PhaseInt& o) const {
    if (modulus != o.modulus) throw ValidationError("phase modulus mismatch");
    return PhaseInt(num + o.num, modulus);
}

std::complex<double> PhaseInt::to_complex() const {
    double arg = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(modulus);
    return {std::cos(arg), std::sin(arg)};
}

bool PhaseInt::operator==(const PhaseInt& o) const {
    // Equal as roots of unity: num/modulus agree as reduced fractions.
    return static_cast<BigInt>(num) * o.modulus == static_cast<BigInt>(o.num) * modulus;
}

namespace {

std::size_t checked_pow(std::size_t base, int exp, const std::string& what) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::size_t(1) << 52) throw GuardError(what + ": size overflow");
        r *= base;
    }
    return r;
}

}  // namespace

Cochain Cochain::zero(const FiniteGroup& g, int level, long long modulus) {
    if (level < 0) throw ValidationError("cochain level must be nonnegative");
    if (modulus <= 0) throw ValidationError("cochain modulus must be positive");
    Cochain c;
    c.group = g;
    c.level = level;
    c.modulus = modulus;
    c.values.assign(checked_pow(g.order(), level, "cochain"), 0);
    return c;
}

std::size_t Cochain::index(std::span<const int> tuple) const {
    std::size_t idx = 0;
    const int n = group.order();
    for (int g : tuple) idx = idx * n + static_cast<std::size_t>(g);
    return idx;
}

void Cochain::tuple_of(std::size_t idx, std::span<int> out) const {
    const int n = group.order();
    for (int i = level - 1; i >= 0; --i) {
        out[i] = static_cast<int>(idx % n);
        idx /= n;
    }
}

void Cochain::reduce() {
    for (auto& v : values) v = ((v % modulus) + modulus) % modulus;
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (!(group == o.group) || level != o.level || modulus != o.modulus)
        throw ValidationError("cochain shape mismatch in +");
    Cochain r = *this;
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = (values[i] + o.values[i]) % modulus;
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    if (!(group == o.group) || level != o.level || modulus != o.modulus)
        throw ValidationError("cochain shape mismatch in -");
    Cochain r = *this;
    for (std::size_t i = 0; i < values.size(); ++i)
        r.values[i] = ((values[i] - o.values[i]) % modulus + modulus) % modulus;
    return r;
}

bool Cochain::operator==(const Cochain& o) const {
    if (!(group == o.group) || level != o.level || modulus != o.modulus) return false;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (((values[i] - o.values[i]) % modulus + modulus) % modulus != 0) return false;
    return true;
}

Cochain coboundary(const Cochain& c) {
    const int n = c.group.order();
    const int lvl = c.level;
    check_guard(checked_pow(n, lvl + 1, "coboundary"), 100000000, "coboundary target size");
    Cochain out = Cochain::zero(c.group, lvl + 1, c.modulus);
    std::vector<int> t(lvl + 1), sub(std::max(lvl, 0));
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        out.tuple_of(idx, t);
        long long acc = 0;
        // drop first argument
        std::copy(t.begin() + 1, t.end(), sub.begin());
        acc += c.at(std::span<const int>(sub.data(), lvl));
        // merge adjacent arguments
        long long sign = -1;
        for (int i = 0; i < lvl; ++i) {
            for (int j = 0, k = 0; j <= lvl; ++j) {
                if (j == i) {
                    sub[k++] = c.group.mul(t[i], t[i + 1]);
                    ++j;  // skip the merged partner
                } else {
                    sub[k++] = t[j];
                }
            }
            acc += sign * c.at(std::span<const int>(sub.data(), lvl));
            sign = -sign;
        }
        // drop last argument
        std::copy(t.begin(), t.end() - 1, sub.begin());
        acc += sign * c.at(std::span<const int>(sub.data(), lvl));
        out.values[idx] = ((acc % c.modulus) + c.modulus) % c.modulus;
    }
    return out;
}

bool is_cocycle(const Cochain& c) {
    Cochain d = coboundary(c);
    return std::all_of(d.values.begin(), d.values.end(),
                       [&](long long v) { return v % d.modulus == 0; });
}

bool is_normalized(const Cochain& c) {
    std::vector<int> t(c.level);
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        if (c.values[idx] % c.modulus == 0) continue;
        c.tuple_of(idx, t);
        if (std::find(t.begin(), t.end(), c.group.identity()) != t.end()) return false;
    }
    return true;
}

Cochain rescale(const Cochain& c, long long new_modulus) {
    if (new_modulus % c.modulus != 0)
        throw ValidationError("rescale target " + std::to_string(new_modulus) +
                              " is not a multiple of modulus " + std::to_string(c.modulus));
    long long f = new_modulus / c.modulus;
    Cochain r = c;
    r.modulus = new_modulus;
    for (auto& v : r.values) v = (v % c.modulus + c.modulus) % c.modulus * f;
    return r;
}

Cochain random_normalized_cochain(const FiniteGroup& g, int level, long long modulus,
                                  std::uint64_t seed) {
    Cochain c = Cochain::zero(g, level, modulus);
    // Plain modulo keeps the stream identical across standard library implementations.
    std::mt19937_64 rng(seed);
    std::vector<int> t(level);
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        c.tuple_of(idx, t);
        if (std::find(t.begin(), t.end(), g.identity()) != t.end()) continue;
        c.values[idx] = static_cast<long long>(rng() % static_cast<std::uint64_t>(modulus));
    }
    return c;
}

Cochain zxz_four_cocycle(int p0, int p1) {
    if ((p0 != 0 && p0 != 1) || (p1 != 0 && p1 != 1))
        throw ValidationError("cocycle class indices must be 0 or 1");
    FiniteGroup g = group_from_spec("Z2xZ2");
    Cochain c = Cochain::zero(g, 4, 2);
    // Element 2*a + b encodes the pair (a, b).
    auto hi = [](int x) { return x >> 1; };
    auto lo = [](int x) { return x & 1; };
    std::array<int, 4> t{};
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        c.tuple_of(idx, t);
        long long v = static_cast<long long>(p0) * hi(t[0]) * lo(t[1]) * lo(t[2]) * lo(t[3]) +
                      static_cast<long long>(p1) * lo(t[0]) * hi(t[1]) * hi(t[2]) * hi(t[3]);
        c.values[idx] = v % 2;
    }
    return c;
}

// ---- cohomology ----

namespace {

// Coboundary matrix on identity-free tuples, level k -> k+1. Non-identity
// elements are indexed 1..|G|-1; a merged pair landing on the identity drops.
IntMat delta_matrix_normalized(const FiniteGroup& g, int k) {
    const int nm = g.order() - 1;
    auto dim = [&](int lvl) {
        std::size_t d = 1;
        for (int i = 0; i < lvl; ++i) d *= static_cast<std::size_t>(nm);
        return d;
    };
    IntMat m(static_cast<int>(dim(k + 1)), static_cast<int>(dim(k)));
    std::vector<int> t(k + 1), sub(std::max(k, 1));
    for (int row = 0; row < m.rows; ++row) {
        std::size_t idx = static_cast<std::size_t>(row);
        for (int i = k; i >= 0; --i) {
            t[i] = 1 + static_cast<int>(idx % nm);
            idx /= nm;
        }
        auto col_of = [&](int len) {
            std::size_t c2 = 0;
            for (int i = 0; i < len; ++i) c2 = c2 * nm + static_cast<std::size_t>(sub[i] - 1);
            return static_cast<int>(c2);
        };
        std::copy(t.begin() + 1, t.end(), sub.begin());
        m.at(row, col_of(k)) += 1;
        long long sign = -1;
        for (int i = 0; i < k; ++i) {
            int merged = g.mul(t[i], t[i + 1]);
            if (merged != g.identity()) {
                for (int j = 0, w = 0; j <= k; ++j) {
                    if (j == i) {
                        sub[w++] = merged;
                        ++j;
                    } else {
                        sub[w++] = t[j];
                    }
                }
                m.at(row, col_of(k)) += sign;
            }
            sign = -sign;
        }
        std::copy(t.begin(), t.end() - 1, sub.begin());
        m.at(row, col_of(k)) += sign;
    }
    return m;
}

}  // namespace

std::vector<long long> cohomology_group(const FiniteGroup& g, int n) {
    if (n < 1) throw ValidationError("cohomology degree must be at least 1");
    if (g.order() == 1) return {};
    const std::size_t nm = static_cast<std::size_t>(g.order() - 1);
    check_guard(checked_pow(nm, n + 2, "cohomology") * checked_pow(nm, n + 1, "cohomology"),
                1000000, "cohomology matrix entries");
    // Torsion of H^{n+1}(G, Z) on the normalized complex equals H^n(G, U(1)).
    IntMat a = delta_matrix_normalized(g, n);
    IntMat b = delta_matrix_normalized(g, n + 1);
    SmithResult sa = smith_normal_form(std::move(a));
    int rank_b = smith_normal_form(std::move(b)).rank;
    long long dim_mid = static_cast<long long>(checked_pow(nm, n + 1, "cohomology"));
    long long free_rank = dim_mid - rank_b - sa.rank;
    if (free_rank != 0)
        throw InternalCheckError("cohomology free rank " + std::to_string(free_rank) +
                                 " nonzero for a finite group");
    std::vector<long long> factors;
    for (const BigInt& d : sa.diagonal)
        if (d > 1) factors.push_back(d.convert_to<long long>());
    std::sort(factors.begin(), factors.end());
    return factors;
}

namespace {

// Full-complex coboundary matrix, level k-1 -> k, all tuples included.
IntMat delta_matrix_full(const FiniteGroup& g, int k) {
    const int n = g.order();
    std::size_t rows = checked_pow(n, k, "coboundary matrix");
    std::size_t cols = checked_pow(n, k - 1, "coboundary matrix");
    check_guard(rows * cols, 100000000, "coboundary matrix entries");
    IntMat m(static_cast<int>(rows), static_cast<int>(cols));
    std::vector<int> t(k), sub(std::max(k - 1, 1));
    for (int row = 0; row < m.rows; ++row) {
        std::size_t idx = static_cast<std::size_t>(row);
        for (int i = k - 1; i >= 0; --i) {
            t[i] = static_cast<int>(idx % n);
            idx /= n;
        }
        auto col_of = [&](int len) {
            std::size_t c2 = 0;
            for (int i = 0; i < len; ++i) c2 = c2 * n + static_cast<std::size_t>(sub[i]);
            return static_cast<int>(c2);
        };
        std::copy(t.begin() + 1, t.end(), sub.begin());
        m.at(row, col_of(k - 1)) += 1;
        long long sign = -1;
        for (int i = 0; i + 1 < k; ++i) {
            for (int j = 0, w = 0; j < k; ++j) {
                if (j == i) {
                    sub[w++] = g.mul(t[i], t[i + 1]);
                    ++j;
                } else {
                    sub[w++] = t[j];
                }
            }
            m.at(row, col_of(k - 1)) += sign;
            sign = -sign;
        }
        std::copy(t.begin(), t.end() - 1, sub.begin());
        m.at(row, col_of(k - 1)) += sign;
    }
    return m;
}

}  // namespace

std::optional<Cochain> coboundary_equivalent(const Cochain& c1, const Cochain& c2,
                                             long long l_search) {
    if (!(c1.group == c2.group) || c1.level != c2.level)
        throw ValidationError("cocycles to compare must share group and level");
    if (c1.level < 1) throw ValidationError("coboundary equivalence needs level >= 1");
    Cochain d = rescale(c1, l_search) - rescale(c2, l_search);
    IntMat m = delta_matrix_full(c1.group, c1.level);
    ModSolveResult sol = solve_mod_linear(m, d.values, l_search);
    if (!sol.solvable) return std::nullopt;
    Cochain alpha = Cochain::zero(c1.group, c1.level - 1, l_search);
    alpha.values = sol.x;
    if (!(coboundary(alpha) == d))
        throw InternalCheckError("coboundary witness fails verification");
    return alpha;
}

NormalizeResult normalize_cocycle(const Cochain& c) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        Cochain cur = attempt == 0 ? c : rescale(c, 2 * c.modulus);
        IntMat full = delta_matrix_full(cur.group, cur.level);
        // Keep only the rows whose tuple touches the identity.
        std::vector<int> rows;
        std::vector<long long> b;
        std::vector<int> t(cur.level);
        for (std::size_t idx = 0; idx < cur.values.size(); ++idx) {
            cur.tuple_of(idx, t);
            if (std::find(t.begin(), t.end(), cur.group.identity()) == t.end()) continue;
            rows.push_back(static_cast<int>(idx));
            b.push_back(cur.values[idx]);
        }
        IntMat sub(static_cast<int>(rows.size()), full.cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int j = 0; j < full.cols; ++j) sub.at(static_cast<int>(r), j) = full.at(rows[r], j);
        ModSolveResult sol = solve_mod_linear(sub, b, cur.modulus);
        if (!sol.solvable) continue;
        Cochain alpha = Cochain::zero(cur.group, cur.level - 1, cur.modulus);
        alpha.values = sol.x;
        NormalizeResult res{cur - coboundary(alpha), alpha};
        if (!is_normalized(res.normalized))
            throw InternalCheckError("normalization left an identity-tuple value");
        return res;
    }
    throw ValidationError("no normalizing coboundary exists at modulus " +
                          std::to_string(c.modulus) + " or " + std::to_string(2 * c.modulus));
}

// ---- file I/O ----

Cochain cochain_from_stream(std::istream& in) {
    std::string line;
    std::string group_spec;
    int level = -1;
    long long modulus = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hs(line);
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw ValidationError("cochain header: expected key=value, got '" + tok + "'");
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "group") group_spec = val;
            else if (key == "level") level = std::stoi(val);
            else if (key == "modulus") modulus = std::stoll(val);
            else throw ValidationError("cochain header: unknown key '" + key + "'");
        }
        break;
    }
    if (group_spec.empty() || level < 0 || modulus <= 0)
        throw ValidationError("cochain header must set group, level and modulus");
    FiniteGroup g = group_from_spec(group_spec);
    Cochain c = Cochain::zero(g, level, modulus);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> t(level);
        for (int i = 0; i < level; ++i) {
            if (!(ls >> t[i]) || t[i] < 0 || t[i] >= g.order())
                throw ValidationError("cochain line " + std::to_string(lineno) +
                                      ": bad element index");
        }
        std::string arrow;
        long long v;
        if (!(ls >> arrow >> v) || arrow != "->")
            throw ValidationError("cochain line " + std::to_string(lineno) + ": expected '-> value'");
        c.at(t) = ((v % modulus) + modulus) % modulus;
    }
    return c;
}

Cochain cochain_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open cochain file: " + path);
    return cochain_from_stream(in);
}

void cochain_to_stream(std::ostream& out, const Cochain& c, const std::string& group_spec) {
    out << "group=" << group_spec << " level=" << c.level << " modulus=" << c.modulus << "\n";
    std::vector<int> t(c.level);
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        if (c.values[idx] % c.modulus == 0) continue;
        c.tuple_of(idx, t);
        for (int i = 0; i < c.level; ++i) out << t[i] << ' ';
        out << "-> " << c.values[idx] << "\n";
    }
}

}  // namespace atn
