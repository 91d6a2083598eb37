#include <algorithm>
#include <numeric>

#include "atn/errors.hpp"
#include "atn/phase_cohomology.hpp"

namespace atn {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void row_swap(IntMat& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void col_swap(IntMat& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row[dst] += q * row[src]
void row_addmul(IntMat& m, int dst, int src, const BigInt& q) {
    for (int c = 0; c < m.cols; ++c) m.at(dst, c) += q * m.at(src, c);
}

void col_addmul(IntMat& m, int dst, int src, const BigInt& q) {
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += q * m.at(r, src);
}

}  // namespace

SmithResult smith_normal_form(IntMat m) {
    SmithResult res;
    res.u = IntMat::identity(m.rows);
    res.v = IntMat::identity(m.cols);
    const int steps = std::min(m.rows, m.cols);
    for (int t = 0; t < steps; ++t) {
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j)
                if (m.at(i, j) != 0) {
                    BigInt a = big_abs(m.at(i, j));
                    if (pi < 0 || a < best) {
                        pi = i;
                        pj = j;
                        best = a;
                    }
                }
        if (pi < 0) break;
        row_swap(m, t, pi);
        row_swap(res.u, t, pi);
        col_swap(m, t, pj);
        col_swap(res.v, t, pj);
        while (true) {
            bool moved = false;
            for (int i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = m.at(i, t) / m.at(t, t);
                if (q != 0) {
                    row_addmul(m, i, t, -q);
                    row_addmul(res.u, i, t, -q);
                }
                if (m.at(i, t) != 0) {
                    // remainder is strictly smaller, promote it to the pivot
                    row_swap(m, t, i);
                    row_swap(res.u, t, i);
                    moved = true;
                }
            }
            if (moved) continue;
            for (int j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = m.at(t, j) / m.at(t, t);
                if (q != 0) {
                    col_addmul(m, j, t, -q);
                    col_addmul(res.v, j, t, -q);
                }
                if (m.at(t, j) != 0) {
                    col_swap(m, t, j);
                    col_swap(res.v, t, j);
                    moved = true;
                }
            }
            if (moved) continue;
            // pivot must divide every entry of the remaining block
            bool divides = true;
            for (int i = t + 1; i < m.rows && divides; ++i)
                for (int j = t + 1; j < m.cols && divides; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        row_addmul(m, t, i, 1);
                        row_addmul(res.u, t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (m.at(t, t) < 0) {
            for (int c = 0; c < m.cols; ++c) m.at(t, c) = -m.at(t, c);
            for (int c = 0; c < res.u.cols; ++c) res.u.at(t, c) = -res.u.at(t, c);
        }
    }
    for (int t = 0; t < steps; ++t)
        if (m.at(t, t) != 0) res.diagonal.push_back(m.at(t, t));
    res.rank = static_cast<int>(res.diagonal.size());
    res.d = std::move(m);
    return res;
}

int integer_rank(IntMat m) {
    int r = 0;
    BigInt prev = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        row_swap(m, r, p);
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j)
                m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

namespace {

long long mod_ll(BigInt v, long long l) {
    BigInt r = v % l;
    if (r < 0) r += l;
    return r.convert_to<long long>();
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

// Inverse of a mod l; a and l must be coprime.
long long modinv_ll(long long a, long long l) {
    long long t = 0, newt = 1, r = l, newr = ((a % l) + l) % l;
    while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw InternalCheckError("modinv of non-unit");
    return ((t % l) + l) % l;
}

}  // namespace

ModSolveResult solve_mod_linear(const SmithResult& s, const std::vector<long long>& b, long long l) {
    if (l <= 0) throw ValidationError("modulus must be positive");
    if (static_cast<int>(b.size()) != s.d.rows) throw ValidationError("rhs size mismatch");
    const int rows = s.d.rows, cols = s.d.cols, rank = s.rank;
    ModSolveResult res;
    std::vector<long long> c(rows);
    for (int i = 0; i < rows; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < rows; ++j) acc += s.u.at(i, j) * b[j];
        c[i] = mod_ll(acc, l);
    }
    std::vector<long long> y(cols, 0);
    for (int i = 0; i < rank; ++i) {
        long long di = mod_ll(s.diagonal[i], l);
        long long g = gcd_ll(di, l);
        if (c[i] % g != 0) return res;  // unsolvable
        if (g == l) continue;           // equation is 0 = 0, y_i free, keep 0
        long long lr = l / g;
        y[i] = (c[i] / g) % lr * modinv_ll(di / g, lr) % lr;
    }
    for (int i = rank; i < rows; ++i)
        if (c[i] % l != 0) return res;
    res.solvable = true;
    res.x.assign(cols, 0);
    for (int i = 0; i < cols; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < cols; ++j) acc += s.v.at(i, j) * y[j];
        res.x[i] = mod_ll(acc, l);
    }
    res.solution_count = kernel_size_mod(s, cols, l);
    return res;
}

ModSolveResult solve_mod_linear(const IntMat& m, const std::vector<long long>& b, long long l) {
    ModSolveResult res = solve_mod_linear(smith_normal_form(m), b, l);
    if (res.solvable) {
        for (int i = 0; i < m.rows; ++i) {
            BigInt acc = 0;
            for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * res.x[j];
            if (mod_ll(acc - b[i], l) != 0)
                throw InternalCheckError("modular solve verification failed at row " +
                                         std::to_string(i));
        }
    }
    return res;
}

BigInt kernel_size_mod(const SmithResult& s, int cols, long long l) {
    BigInt count = 1;
    for (int i = 0; i < s.rank; ++i) count *= gcd_ll(mod_ll(s.diagonal[i], l), l);
    for (int i = s.rank; i < cols; ++i) count *= l;
    return count;
}

BigInt image_size_mod(const SmithResult& s, long long l) {
    BigInt count = 1;
    for (int i = 0; i < s.rank; ++i) count *= l / gcd_ll(mod_ll(s.diagonal[i], l), l);
    return count;
}

}  // namespace atn
