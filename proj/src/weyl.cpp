#include "orbitfn/weyl.hpp"

#include "orbitfn/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace orbitfn {

Weight reflect_simple(const RootSystem& rs, int i, const Weight& lambda) {
    check_length(rs, lambda);
    if (i < 0 || i >= rs.rank) throw IndexOutOfRange("reflection index " + std::to_string(i));
    Weight out = lambda;
    if (lambda[i] == 0) return out;
    for (int j = 0; j < rs.rank; ++j)
        if (rs.cartan[i][j] != 0) out[j] -= lambda[i] * rs.cartan[i][j];
    return out;
}

Vec reflect_point(const RootSystem& rs, int i, const Vec& b) {
    if (i < 0 || i >= rs.rank) throw IndexOutOfRange("reflection index " + std::to_string(i));
    Rational c = 0;
    for (int k = 0; k < rs.rank; ++k)
        if (rs.cartan[i][k] != 0) c += rs.cartan[i][k] * b[k];
    Vec out = b;
    out[i] -= c;
    return out;
}

std::vector<double> reflect_point(const RootSystem& rs, int i, const std::vector<double>& b) {
    double c = 0;
    for (int k = 0; k < rs.rank; ++k) c += rs.cartan[i][k] * b[k];
    std::vector<double> out = b;
    out[i] -= c;
    return out;
}

DominantResult dominant_representative(const RootSystem& rs, const Weight& lambda) {
    check_length(rs, lambda);
    DominantResult r{lambda, 1, {}};
    for (;;) {
        int i = 0;
        while (i < rs.rank && r.dominant[i] >= 0) ++i;
        if (i == rs.rank) return r;
        r.dominant = reflect_simple(rs, i, r.dominant);
        r.parity = -r.parity;
        r.word.push_back(i);
    }
}

namespace {

// Weyl order of a connected Dynkin subdiagram given by its Cartan submatrix.
Integer connected_order(const std::vector<std::vector<int>>& c) {
    int k = static_cast<int>(c.size());
    if (k == 1) return 2;
    int max_bond = 1;
    std::vector<int> degree(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && c[i][j] != 0) {
                ++degree[i];
                max_bond = std::max(max_bond, c[i][j] * c[j][i]);
            }
    if (max_bond == 3) return 12;
    if (max_bond == 2) {
        if (k == 4) {
            // F4 has its double bond in the middle of the chain.
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (c[i][j] * c[j][i] == 2 && degree[i] == 2 && degree[j] == 2) return 1152;
        }
        return weyl_order_of('B', k);
    }
    int branch = -1;
    for (int i = 0; i < k; ++i)
        if (degree[i] == 3) branch = i;
    if (branch < 0) return weyl_order_of('A', k);
    std::vector<int> arms;
    for (int j = 0; j < k; ++j) {
        if (j == branch || c[branch][j] == 0) continue;
        int len = 1, prev = branch, cur = j;
        for (;;) {
            int next = -1;
            for (int l = 0; l < k; ++l)
                if (l != prev && l != cur && c[cur][l] != 0) next = l;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return weyl_order_of('D', k);
    return weyl_order_of('E', k);
}

template <class V, class Reflect>
std::vector<V> bfs_closure(const RootSystem& rs, const V& start, std::size_t cap, Reflect reflect,
                           const std::function<std::string()>& size_hint) {
    std::vector<V> all{start};
    std::unordered_set<V, VecHash> seen{start};
    std::vector<V> layer{start};
    while (!layer.empty()) {
        std::vector<V> next;
        for (const auto& p : layer)
            for (int i = 0; i < rs.rank; ++i) {
                V q = reflect(i, p);
                if (seen.insert(q).second) {
                    next.push_back(std::move(q));
                    if (seen.size() > cap)
                        throw CapExceeded("orbit exceeds cap " + std::to_string(cap), size_hint());
                }
            }
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return all;
}

}  // namespace

Integer parabolic_order(const RootSystem& rs, const std::vector<int>& nodes) {
    std::vector<bool> in(rs.rank, false), done(rs.rank, false);
    for (int v : nodes) in.at(v) = true;
    Integer order = 1;
    for (int s : nodes) {
        if (done[s]) continue;
        std::vector<int> comp{s};
        done[s] = true;
        for (std::size_t h = 0; h < comp.size(); ++h)
            for (int j = 0; j < rs.rank; ++j)
                if (in[j] && !done[j] && rs.cartan[comp[h]][j] != 0) {
                    done[j] = true;
                    comp.push_back(j);
                }
        std::vector<std::vector<int>> sub(comp.size(), std::vector<int>(comp.size()));
        for (std::size_t a = 0; a < comp.size(); ++a)
            for (std::size_t b = 0; b < comp.size(); ++b) sub[a][b] = rs.cartan[comp[a]][comp[b]];
        order *= connected_order(sub);
    }
    return order;
}

Integer stabilizer_order(const RootSystem& rs, const Weight& dominant) {
    check_length(rs, dominant);
    if (!is_dominant(dominant)) throw NotDominant("weight " + to_string(dominant) + " is not dominant");
    std::vector<int> zeros;
    for (int i = 0; i < rs.rank; ++i)
        if (dominant[i] == 0) zeros.push_back(i);
    return parabolic_order(rs, zeros);
}

Integer orbit_size(const RootSystem& rs, const Weight& dominant) {
    return rs.weyl_order / stabilizer_order(rs, dominant);
}

Orbit orbit(const RootSystem& rs, const Weight& lambda, std::size_t cap) {
    Orbit o;
    o.dominant = lambda;
    o.stabilizer_order = stabilizer_order(rs, lambda);
    o.size = rs.weyl_order / o.stabilizer_order;
    Integer size = o.size;
    if (size > Integer(static_cast<unsigned long>(cap)))
        throw CapExceeded("orbit of size " + size.get_str() + " exceeds cap " + std::to_string(cap),
                          size.get_str());
    o.points = bfs_closure<Vec>(
        rs, lambda, cap, [&](int i, const Vec& p) { return reflect_simple(rs, i, p); },
        [size] { return size.get_str(); });
    o.enumerated = true;
    return o;
}

Integer point_stabilizer_order(const RootSystem& rs, const Vec& b) {
    // Points are dominant when every c_i = <x, a_i> is nonnegative.
    Vec x = b;
    for (;;) {
        Vec c = coroot_to_coweight(rs, x);
        int i = 0;
        while (i < rs.rank && c[i] >= 0) ++i;
        if (i == rs.rank) {
            std::vector<int> zeros;
            for (int j = 0; j < rs.rank; ++j)
                if (c[j] == 0) zeros.push_back(j);
            return parabolic_order(rs, zeros);
        }
        x = reflect_point(rs, i, x);
    }
}

std::vector<Vec> point_orbit(const RootSystem& rs, const Vec& b, std::size_t cap) {
    check_length(rs, b);
    return bfs_closure<Vec>(
        rs, b, cap, [&](int i, const Vec& p) { return reflect_point(rs, i, p); },
        [&] { return Integer(rs.weyl_order / point_stabilizer_order(rs, b)).get_str(); });
}

std::vector<Vec> orthogonal_orbit(const RootSystem& rs, const Vec& m) {
    to_orthogonal(rs, Weight(rs.rank, 0));  // validates the series
    char s = rs.factors[0].series;
    Vec sorted = m;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vec> out;
    std::unordered_set<Vec, VecHash> seen;
    std::size_t n = m.size();
    do {
        if (s == 'A') {
            if (seen.insert(sorted).second) out.push_back(sorted);
            continue;
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (s == 'D' && __builtin_popcount(mask) % 2 != 0) continue;
            Vec v = sorted;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) v[i] = -v[i];
            if (seen.insert(v).second) out.push_back(std::move(v));
        }
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using IMat = std::vector<std::vector<int>>;

IMat imul(const IMat& a, const IMat& b) {
    std::size_t n = a.size();
    IMat c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

struct IMatHash {
    std::size_t operator()(const IMat& m) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (const auto& r : m)
            for (int x : r) h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ULL;
        return h;
    }
};

}  // namespace

std::vector<GroupElement> weyl_group_elements(const RootSystem& rs, std::size_t cap) {
    if (rs.weyl_order > Integer(static_cast<unsigned long>(cap)))
        throw CapExceeded("|W| = " + rs.weyl_order.get_str() + " exceeds cap", rs.weyl_order.get_str());
    int n = rs.rank;
    std::vector<IMat> rw(n), rp(n);
    for (int i = 0; i < n; ++i) {
        // a' = (I - M^T e_i e_i^T) a on weights; its transpose acts on points.
        rw[i].assign(n, std::vector<int>(n, 0));
        for (int j = 0; j < n; ++j) rw[i][j][j] = 1;
        for (int j = 0; j < n; ++j) rw[i][j][i] -= rs.cartan[i][j];
        rp[i].assign(n, std::vector<int>(n, 0));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) rp[i][j][k] = rw[i][k][j];
    }
    IMat id(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j) id[j][j] = 1;
    std::vector<GroupElement> out{{id, id, 1}};
    std::unordered_set<IMat, IMatHash> seen{id};
    for (std::size_t h = 0; h < out.size(); ++h)
        for (int i = 0; i < n; ++i) {
            IMat w = imul(rw[i], out[h].on_weights);
            if (!seen.insert(w).second) continue;
            out.push_back({w, imul(rp[i], out[h].on_points), -out[h].parity});
        }
    return out;
}

Weight act(const GroupElement& g, const Weight& lambda) {
    Weight out(lambda.size(), 0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = 0; j < lambda.size(); ++j)
            if (g.on_weights[i][j]) out[i] += g.on_weights[i][j] * lambda[j];
    return out;
}

std::vector<double> act_on_point(const GroupElement& g, const std::vector<double>& b) {
    std::vector<double> out(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i] += g.on_points[i][j] * b[j];
    return out;
}

}  // namespace orbitfn
