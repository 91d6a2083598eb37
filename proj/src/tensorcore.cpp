#include "atn/tensorcore.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "atn/errors.hpp"

namespace atn {

Tensor Tensor::zeros(std::vector<std::string> axes, std::vector<std::size_t> dims) {
    if (axes.size() != dims.size()) throw ValidationError("tensor axes/dims length mismatch");
    std::set<std::string> names(axes.begin(), axes.end());
    if (names.size() != axes.size()) throw ValidationError("tensor axis names must be distinct");
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw ValidationError("tensor axis of dimension zero");
        if (total > (std::size_t(1) << 32) / d) throw GuardError("dense tensor too large");
        total *= d;
    }
    Tensor t;
    t.axes = std::move(axes);
    t.dims = std::move(dims);
    t.data.assign(total, {0.0, 0.0});
    return t;
}

int Tensor::axis(const std::string& name) const {
    for (std::size_t i = 0; i < axes.size(); ++i)
        if (axes[i] == name) return static_cast<int>(i);
    throw ValidationError("tensor has no axis named '" + name + "'");
}

std::size_t Tensor::flat(std::span<const std::size_t> idx) const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) f = f * dims[i] + idx[i];
    return f;
}

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
    return s;
}

}  // namespace

Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<int> ca, cb;
    for (const auto& [na, nb] : pairs) {
        int ia = a.axis(na), ib = b.axis(nb);
        if (a.dims[ia] != b.dims[ib])
            throw ValidationError("contracted axes '" + na + "'/'" + nb + "' differ in dimension");
        ca.push_back(ia);
        cb.push_back(ib);
    }
    std::vector<int> fa, fb;
    for (int i = 0; i < static_cast<int>(a.axes.size()); ++i)
        if (std::find(ca.begin(), ca.end(), i) == ca.end()) fa.push_back(i);
    for (int i = 0; i < static_cast<int>(b.axes.size()); ++i)
        if (std::find(cb.begin(), cb.end(), i) == cb.end()) fb.push_back(i);

    std::vector<std::string> raxes;
    std::vector<std::size_t> rdims;
    for (int i : fa) {
        raxes.push_back(a.axes[i]);
        rdims.push_back(a.dims[i]);
    }
    for (int i : fb) {
        raxes.push_back(b.axes[i]);
        rdims.push_back(b.dims[i]);
    }
    Tensor r = Tensor::zeros(std::move(raxes), std::move(rdims));

    auto sa = strides_of(a.dims), sb = strides_of(b.dims);
    std::size_t na_free = 1, nb_free = 1, nc = 1;
    for (int i : fa) na_free *= a.dims[i];
    for (int i : fb) nb_free *= b.dims[i];
    for (int i : ca) nc *= a.dims[i];

    // Precompute flat offsets of every free/contracted multi-index.
    auto offsets = [](std::size_t count, const std::vector<int>& axes_sel,
                      const std::vector<std::size_t>& dims, const std::vector<std::size_t>& strides) {
        std::vector<std::size_t> off(count, 0);
        std::vector<std::size_t> idx(axes_sel.size(), 0);
        for (std::size_t k = 0; k < count; ++k) {
            std::size_t f = 0;
            for (std::size_t i = 0; i < axes_sel.size(); ++i) f += idx[i] * strides[axes_sel[i]];
            off[k] = f;
            for (int i = static_cast<int>(axes_sel.size()) - 1; i >= 0; --i) {
                if (++idx[i] < dims[axes_sel[i]]) break;
                idx[i] = 0;
            }
        }
        return off;
    };
    std::vector<std::size_t> offa = offsets(na_free, fa, a.dims, sa);
    std::vector<std::size_t> offb = offsets(nb_free, fb, b.dims, sb);
    std::vector<std::size_t> offca = offsets(nc, ca, a.dims, sa);
    std::vector<std::size_t> offcb(nc, 0);
    {
        // contracted multi-index runs in the same order for both tensors
        std::vector<std::size_t> idx(ca.size(), 0);
        for (std::size_t k = 0; k < nc; ++k) {
            std::size_t f = 0;
            for (std::size_t i = 0; i < cb.size(); ++i) f += idx[i] * sb[cb[i]];
            offcb[k] = f;
            for (int i = static_cast<int>(ca.size()) - 1; i >= 0; --i) {
                if (++idx[i] < a.dims[ca[i]]) break;
                idx[i] = 0;
            }
        }
    }
    std::size_t out = 0;
    for (std::size_t ia = 0; ia < na_free; ++ia)
        for (std::size_t ib = 0; ib < nb_free; ++ib, ++out) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t k = 0; k < nc; ++k)
                acc += a.data[offa[ia] + offca[k]] * b.data[offb[ib] + offcb[k]];
            r.data[out] = acc;
        }
    return r;
}

Tensor conj(const Tensor& t) {
    Tensor r = t;
    for (auto& v : r.data) v = std::conj(v);
    return r;
}

Tensor rename_axis(Tensor t, const std::string& from, const std::string& to) {
    t.axes[t.axis(from)] = to;
    std::set<std::string> names(t.axes.begin(), t.axes.end());
    if (names.size() != t.axes.size()) throw ValidationError("axis rename caused a collision");
    return t;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
    return contract(a, b, {});
}

Tensor scale(Tensor t, std::complex<double> s) {
    for (auto& v : t.data) v *= s;
    return t;
}

Tensor add(const Tensor& a, const Tensor& b) {
    if (a.axes != b.axes || a.dims != b.dims) throw ValidationError("tensor add shape mismatch");
    Tensor r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += b.data[i];
    return r;
}

bool allclose(const Tensor& a, const Tensor& b, double tol) {
    if (a.axes.size() != b.axes.size()) return false;
    std::vector<int> bmap(a.axes.size());
    for (std::size_t i = 0; i < a.axes.size(); ++i) {
        int j;
        try {
            j = b.axis(a.axes[i]);
        } catch (const ValidationError&) {
            return false;
        }
        if (a.dims[i] != b.dims[j]) return false;
        bmap[i] = j;
    }
    auto sb = strides_of(b.dims);
    std::vector<std::size_t> idx(a.axes.size(), 0);
    for (std::size_t f = 0; f < a.data.size(); ++f) {
        std::size_t fb = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) fb += idx[i] * sb[bmap[i]];
        if (std::abs(a.data[f] - b.data[fb]) > tol) return false;
        for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
            if (++idx[i] < a.dims[i]) break;
            idx[i] = 0;
        }
    }
    return true;
}

double frobenius_norm(const Tensor& t) {
    double s = 0;
    for (const auto& v : t.data) s += std::norm(v);
    return std::sqrt(s);
}

Tensor left_regular(const FiniteGroup& g, int element) {
    std::size_t n = static_cast<std::size_t>(g.order());
    Tensor t = Tensor::zeros({"out", "in"}, {n, n});
    for (int x = 0; x < g.order(); ++x)
        t.data[static_cast<std::size_t>(g.mul(element, x)) * n + x] = {1.0, 0.0};
    return t;
}

Tensor max_entangled_pair(const FiniteGroup& g) {
    std::size_t n = static_cast<std::size_t>(g.order());
    Tensor t = Tensor::zeros({"left", "right"}, {n, n});
    for (std::size_t x = 0; x < n; ++x) t.data[x * n + x] = {1.0, 0.0};
    return t;
}

// ---- BasisMap ----

BasisMap BasisMap::identity(int group_order, int sites, long long modulus) {
    std::size_t total = 1;
    for (int i = 0; i < sites; ++i) {
        total *= static_cast<std::size_t>(group_order);
        check_guard(total, 1000000, "basis map configs");
    }
    BasisMap m;
    m.group_order = group_order;
    m.sites = sites;
    m.modulus = modulus;
    m.perm.resize(total);
    for (std::size_t i = 0; i < total; ++i) m.perm[i] = i;
    m.phase.assign(total, 0);
    return m;
}

bool BasisMap::any_dead() const {
    return std::any_of(dead.begin(), dead.end(), [](std::uint8_t d) { return d != 0; });
}

std::size_t encode_config(std::span<const int> config, int group_order) {
    std::size_t idx = 0;
    for (int i = static_cast<int>(config.size()) - 1; i >= 0; --i)
        idx = idx * static_cast<std::size_t>(group_order) + static_cast<std::size_t>(config[i]);
    return idx;
}

void decode_config(std::size_t idx, int group_order, std::span<int> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<int>(idx % static_cast<std::size_t>(group_order));
        idx /= static_cast<std::size_t>(group_order);
    }
}

namespace {

void require_same_shape(const BasisMap& a, const BasisMap& b, const char* what) {
    if (a.group_order != b.group_order || a.sites != b.sites || a.modulus != b.modulus)
        throw ValidationError(std::string("basis map shape mismatch in ") + what);
}

}  // namespace

BasisMap compose(const BasisMap& a, const BasisMap& b) {
    require_same_shape(a, b, "compose");
    BasisMap r = BasisMap::identity(a.group_order, a.sites, a.modulus);
    bool need_dead = a.any_dead() || b.any_dead();
    if (need_dead) r.dead.assign(r.configs(), 0);
    for (std::size_t i = 0; i < r.configs(); ++i) {
        if (!b.dead.empty() && b.dead[i]) {
            r.dead[i] = 1;
            continue;
        }
        std::size_t j = b.perm[i];
        if (!a.dead.empty() && a.dead[j]) {
            r.dead[i] = 1;
            continue;
        }
        r.perm[i] = a.perm[j];
        r.phase[i] = (b.phase[i] + a.phase[j]) % a.modulus;
    }
    return r;
}

BasisMap dagger(const BasisMap& m) {
    if (m.any_dead()) throw ValidationError("dagger of a map with annihilated configs");
    BasisMap r = BasisMap::identity(m.group_order, m.sites, m.modulus);
    std::vector<std::uint8_t> seen(m.configs(), 0);
    for (std::size_t i = 0; i < m.configs(); ++i) {
        std::size_t p = m.perm[i];
        if (seen[p]) throw ValidationError("dagger of a non-bijective basis map");
        seen[p] = 1;
        r.perm[p] = i;
        r.phase[p] = ((-m.phase[i]) % m.modulus + m.modulus) % m.modulus;
    }
    return r;
}

bool equal_maps(const BasisMap& a, const BasisMap& b) {
    if (a.group_order != b.group_order || a.sites != b.sites || a.modulus != b.modulus) return false;
    for (std::size_t i = 0; i < a.configs(); ++i) {
        bool da = !a.dead.empty() && a.dead[i];
        bool db = !b.dead.empty() && b.dead[i];
        if (da != db) return false;
        if (da) continue;
        if (a.perm[i] != b.perm[i]) return false;
        if (((a.phase[i] - b.phase[i]) % a.modulus + a.modulus) % a.modulus != 0) return false;
    }
    return true;
}

Tensor basis_map_to_dense(const BasisMap& m) {
    check_guard(m.configs(), 4096, "dense basis map dimension");
    Tensor t = Tensor::zeros({"row", "col"}, {m.configs(), m.configs()});
    for (std::size_t i = 0; i < m.configs(); ++i) {
        if (!m.dead.empty() && m.dead[i]) continue;
        t.data[m.perm[i] * m.configs() + i] += PhaseInt(m.phase[i], m.modulus).to_complex();
    }
    return t;
}

// ---- GhzSum ----

GhzSum ghz_state(int group_order, int parties, long long modulus) {
    GhzSum s;
    s.group_order = group_order;
    s.sites = parties;
    s.modulus = modulus;
    for (int t = 0; t < group_order; ++t)
        s.terms.push_back({std::vector<int>(parties, t), 0, 1});
    return s;
}

GhzSum ghz_product(int group_order, int total_sites, long long modulus,
                   const std::vector<std::vector<int>>& factors) {
    std::vector<int> owner(total_sites, -1);
    for (std::size_t f = 0; f < factors.size(); ++f)
        for (int s : factors[f]) {
            if (s < 0 || s >= total_sites || owner[s] != -1)
                throw ValidationError("ghz_product factors must partition the sites");
            owner[s] = static_cast<int>(f);
        }
    for (int s = 0; s < total_sites; ++s)
        if (owner[s] < 0) throw ValidationError("ghz_product leaves site " + std::to_string(s) + " uncovered");
    std::size_t count = 1;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        count *= static_cast<std::size_t>(group_order);
        check_guard(count, 1000000, "ghz_product terms");
    }
    GhzSum s;
    s.group_order = group_order;
    s.sites = total_sites;
    s.modulus = modulus;
    std::vector<int> labels(factors.size(), 0);
    for (std::size_t k = 0; k < count; ++k) {
        GhzSum::Term t;
        t.config.assign(total_sites, 0);
        for (int site = 0; site < total_sites; ++site) t.config[site] = labels[owner[site]];
        s.terms.push_back(std::move(t));
        for (int i = static_cast<int>(labels.size()) - 1; i >= 0; --i) {
            if (++labels[i] < group_order) break;
            labels[i] = 0;
        }
    }
    return s;
}

void canonicalize(GhzSum& s) {
    for (auto& t : s.terms) t.phase = ((t.phase % s.modulus) + s.modulus) % s.modulus;
    std::sort(s.terms.begin(), s.terms.end(), [](const GhzSum::Term& a, const GhzSum::Term& b) {
        if (a.config != b.config) return a.config < b.config;
        return a.phase < b.phase;
    });
    std::vector<GhzSum::Term> merged;
    for (auto& t : s.terms) {
        if (!merged.empty() && merged.back().config == t.config && merged.back().phase == t.phase)
            merged.back().weight += t.weight;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const GhzSum::Term& t) { return t.weight == 0; });
    s.terms = std::move(merged);
}

GhzSum apply(const BasisMap& m, const GhzSum& s) {
    if (m.group_order != s.group_order || m.sites != s.sites || m.modulus != s.modulus)
        throw ValidationError("basis map does not match state shape");
    GhzSum r = s;
    r.terms.clear();
    for (const auto& t : s.terms) {
        std::size_t idx = encode_config(t.config, s.group_order);
        if (!m.dead.empty() && m.dead[idx]) continue;
        GhzSum::Term nt;
        nt.config.resize(s.sites);
        decode_config(m.perm[idx], s.group_order, nt.config);
        nt.phase = (t.phase + m.phase[idx]) % s.modulus;
        nt.weight = t.weight;
        r.terms.push_back(std::move(nt));
    }
    canonicalize(r);
    return r;
}

GhzSum apply_local(const BasisMap& m, const GhzSum& s, std::span<const int> site_list) {
    if (m.sites != static_cast<int>(site_list.size()))
        throw ValidationError("apply_local site list does not match map arity");
    if (m.group_order != s.group_order || m.modulus != s.modulus)
        throw ValidationError("apply_local shape mismatch");
    GhzSum r = s;
    r.terms.clear();
    std::vector<int> sub(site_list.size());
    for (const auto& t : s.terms) {
        for (std::size_t i = 0; i < site_list.size(); ++i) sub[i] = t.config[site_list[i]];
        std::size_t idx = encode_config(sub, s.group_order);
        if (!m.dead.empty() && m.dead[idx]) continue;
        GhzSum::Term nt = t;
        decode_config(m.perm[idx], s.group_order, sub);
        for (std::size_t i = 0; i < site_list.size(); ++i) nt.config[site_list[i]] = sub[i];
        nt.phase = (t.phase + m.phase[idx]) % s.modulus;
        r.terms.push_back(std::move(nt));
    }
    canonicalize(r);
    return r;
}

std::vector<long long> cyclotomic_polynomial(long long n) {
    if (n < 1) throw ValidationError("cyclotomic index must be positive");
    // x^n - 1 divided by the cyclotomic polynomials of all proper divisors.
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<long long> div = cyclotomic_polynomial(d);
        // exact polynomial division, divisor is monic
        std::vector<long long> q(poly.size() - div.size() + 1, 0);
        std::vector<long long> rem = poly;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            long long c = rem[i + div.size() - 1];
            q[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < div.size(); ++j) rem[i + j] -= c * div[j];
        }
        for (long long v : rem)
            if (v != 0) throw InternalCheckError("cyclotomic division left a remainder");
        poly = std::move(q);
    }
    return poly;
}

namespace {

// Coefficient vector of sum_p w[p] x^p reduced modulo the cyclotomic polynomial of l.
std::vector<long long> reduce_cyclotomic(std::vector<long long> w, long long l) {
    std::vector<long long> phi = cyclotomic_polynomial(l);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = w.size(); i-- > deg;) {
        long long c = w[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < phi.size(); ++j) w[i - deg + j] -= c * phi[j];
    }
    w.resize(deg);
    return w;
}

std::map<std::vector<int>, std::vector<long long>> canonical_coefficients(const GhzSum& s) {
    std::map<std::vector<int>, std::vector<long long>> acc;
    for (const auto& t : s.terms) {
        auto& w = acc[t.config];
        if (w.empty()) w.assign(static_cast<std::size_t>(s.modulus), 0);
        long long p = ((t.phase % s.modulus) + s.modulus) % s.modulus;
        w[static_cast<std::size_t>(p)] += t.weight;
    }
    std::map<std::vector<int>, std::vector<long long>> out;
    for (auto& [cfg, w] : acc) {
        std::vector<long long> red = reduce_cyclotomic(std::move(w), s.modulus);
        if (std::any_of(red.begin(), red.end(), [](long long v) { return v != 0; }))
            out.emplace(cfg, std::move(red));
    }
    return out;
}

}  // namespace

bool equal_states(const GhzSum& a, const GhzSum& b) {
    if (a.group_order != b.group_order || a.sites != b.sites || a.modulus != b.modulus) return false;
    return canonical_coefficients(a) == canonical_coefficients(b);
}

Tensor ghz_to_vector(const GhzSum& s) {
    std::size_t total = 1;
    for (int i = 0; i < s.sites; ++i) {
        total *= static_cast<std::size_t>(s.group_order);
        check_guard(total, 4096, "dense state dimension");
    }
    Tensor t = Tensor::zeros({"state"}, {total});
    for (const auto& term : s.terms) {
        t.data[encode_config(term.config, s.group_order)] +=
            static_cast<double>(term.weight) * PhaseInt(term.phase, s.modulus).to_complex();
    }
    return t;
}

}  // namespace atn
