#include "atn/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <set>

namespace atn {

FiniteGroup FiniteGroup::from_table(int n, std::vector<int> table, std::string name) {
    if (n <= 0) throw ValidationError("group order must be positive, got " + std::to_string(n));
    if (table.size() != static_cast<std::size_t>(n) * n) {
        throw ValidationError("group table size mismatch: expected " + std::to_string(n * n) +
                              " entries, got " + std::to_string(table.size()));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] < 0 || table[i] >= n) {
            throw ValidationError("group table entry out of range at position " +
                                  std::to_string(i) + ": " + std::to_string(table[i]));
        }
    }
    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a) {
        if (at(0, a) != a || at(a, 0) != a) {
            throw ValidationError("element 0 is not a two-sided identity at element " +
                                  std::to_string(a));
        }
    }
    // Latin-square check: each row and column is a permutation.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[at(a, b)]) throw ValidationError("row " + std::to_string(a) + " repeats a value");
            row[at(a, b)] = true;
            if (col[at(b, a)]) throw ValidationError("column " + std::to_string(a) + " repeats a value");
            col[at(b, a)] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c))) {
                    throw ValidationError("associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
                }
    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.name_ = std::move(name);
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.table_[static_cast<std::size_t>(a) * n + b] == 0) {
                g.inv_[a] = b;
                break;
            }
        }
        if (g.inv_[a] < 0 || g.mul(g.inv_[a], a) != 0) {
            throw ValidationError("element " + std::to_string(a) + " lacks a two-sided inverse");
        }
    }
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
    std::set<int> seen{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int s : gens)
                for (int p : {mul(a, s), mul(a, inv(s))})
                    if (seen.insert(p).second) next.push_back(p);
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(0)) return false;
    for (int a : s) {
        if (a < 0 || a >= n_) return false;
        if (!s.count(inv(a))) return false;
        for (int b : s)
            if (!s.count(mul(a, b))) return false;
    }
    return true;
}

FiniteGroup make_cyclic(int n) {
    if (n <= 0) throw ValidationError("cyclic group order must be positive");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return FiniteGroup::from_table(n, std::move(table), "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    // Pair (x, y) encodes as x*|b| + y, so the second factor varies fastest.
    int n = a.order() * b.order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2) {
                    int p = x1 * b.order() + y1;
                    int q = x2 * b.order() + y2;
                    table[static_cast<std::size_t>(p) * n + q] =
                        a.mul(x1, x2) * b.order() + b.mul(y1, y2);
                }
    std::string name = a.name().empty() || b.name().empty() ? "" : a.name() + "x" + b.name();
    return FiniteGroup::from_table(n, std::move(table), name);
}

FiniteGroup group_from_spec(const std::string& spec) {
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z' && spec[pos] != 'z') {
            throw ValidationError("bad group spec '" + spec + "': expected 'Z<n>' at position " +
                                  std::to_string(pos));
        }
        ++pos;
        std::size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (start == pos) throw ValidationError("bad group spec '" + spec + "': missing order");
        factors.push_back(std::stoi(spec.substr(start, pos - start)));
        if (pos < spec.size()) {
            if (spec[pos] != 'x' && spec[pos] != 'X') {
                throw ValidationError("bad group spec '" + spec + "': expected 'x' separator");
            }
            ++pos;
        }
    }
    if (factors.empty()) throw ValidationError("empty group spec");
    FiniteGroup g = make_cyclic(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, make_cyclic(factors[i]));
    return g;
}

FiniteGroup group_from_stream(std::istream& in, const std::string& name) {
    int n = 0;
    if (!(in >> n)) throw ValidationError("group file: missing order line");
    if (n <= 0 || n > 4096) throw ValidationError("group file: implausible order " + std::to_string(n));
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (auto& v : table) {
        if (!(in >> v)) throw ValidationError("group file: table truncated");
    }
    return FiniteGroup::from_table(n, std::move(table), name);
}

FiniteGroup group_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open group file: " + path);
    return group_from_stream(in, path);
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elems,
                              std::vector<int>* embed) {
    if (!g.is_subgroup(elems)) throw ValidationError("element list is not a subgroup");
    std::vector<int> sorted(elems.begin(), elems.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // Identity 0 sorts first, so it lands at subgroup index 0.
    int m = static_cast<int>(sorted.size());
    std::vector<int> index_of(g.order(), -1);
    for (int i = 0; i < m; ++i) index_of[sorted[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[static_cast<std::size_t>(i) * m + j] = index_of[g.mul(sorted[i], sorted[j])];
    if (embed) *embed = sorted;
    return FiniteGroup::from_table(m, std::move(table), g.name() + "-sub" + std::to_string(m));
}

}  // namespace atn
