#include "orbitfn/affine.hpp"

#include "orbitfn/errors.hpp"
#include "orbitfn/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <type_traits>

namespace orbitfn {

namespace {

template <class V>
using Scalar = typename V::value_type;

Rational floor_scalar(const Rational& x) { return Rational(floor_of(x)); }
double floor_scalar(double x) { return std::floor(x); }

Rational tol_of(const Rational&) { return 0; }
double tol_of(double) { return 1e-12; }

template <class S>
S cast_scalar(const Rational& r) {
    if constexpr (std::is_same_v<S, double>) return r.get_d();
    else return r;
}

template <class V>
Scalar<V> xi_pair(const RootSystem& rs, const V& b, int f) {
    Scalar<V> s = 0;
    const auto& sf = rs.factors.at(f);
    for (int i = sf.offset; i < sf.offset + sf.rank; ++i) s += cast_scalar<Scalar<V>>(rs.highest_roots[f][i]) * b[i];
    return s;
}

template <class V>
V r0(const RootSystem& rs, const V& b, int f) {
    const auto& sf = rs.factors.at(f);
    Scalar<V> t = 1 - xi_pair(rs, b, f);
    V out = b;
    for (int i = sf.offset; i < sf.offset + sf.rank; ++i) out[i] += t * rs.comarks[i];
    return out;
}

template <class V>
V coweights(const RootSystem& rs, const V& b) {
    V c(rs.rank, Scalar<V>(0));
    for (int j = 0; j < rs.rank; ++j)
        for (int i = 0; i < rs.rank; ++i)
            if (rs.cartan[j][i] != 0) c[j] += rs.cartan[j][i] * b[i];
    return c;
}

template <class V>
Reduced<V> reduce(const RootSystem& rs, const V& b) {
    check_length(rs, Vec(b.size()));
    using S = Scalar<V>;
    const S tol = tol_of(S(0));
    Reduced<V> r{b, 0};
    for (auto& x : r.point) {
        S fl = floor_scalar(x);
        if (fl != 0) {
            x -= fl;
            ++r.steps;
        }
    }
    Integer budget_big = 10 * (rs.rank + 1) * rs.weyl_order;
    long budget = budget_big > 10'000'000 ? 10'000'000L : budget_big.get_si();
    for (long it = 0;; ++it) {
        if (it > budget) throw NonTermination("alcove walk exceeded its iteration budget");
        V c = coweights(rs, r.point);
        int worst = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (c[i] < -tol && (worst < 0 || c[i] < c[worst])) worst = i;
        if (worst >= 0) {
            r.point[worst] -= c[worst];
            ++r.steps;
            continue;
        }
        int f = -1;
        for (int k = 0; k < static_cast<int>(rs.factors.size()) && f < 0; ++k)
            if (xi_pair(rs, r.point, k) > 1 + tol) f = k;
        if (f < 0) return r;
        r.point = r0(rs, r.point, f);
        ++r.steps;
    }
}

}  // namespace

Vec reflect_r0(const RootSystem& rs, const Vec& b, int factor) {
    check_length(rs, b);
    return r0(rs, b, factor);
}

std::vector<double> reflect_r0(const RootSystem& rs, const std::vector<double>& b, int factor) {
    return r0(rs, b, factor);
}

Rational xi_pairing(const RootSystem& rs, const Vec& b, int factor) {
    check_length(rs, b);
    return xi_pair(rs, b, factor);
}

bool in_fundamental_domain(const RootSystem& rs, const Vec& b) {
    check_length(rs, b);
    for (const auto& c : coweights(rs, b))
        if (c < 0) return false;
    for (int f = 0; f < static_cast<int>(rs.factors.size()); ++f)
        if (xi_pair(rs, b, f) > 1) return false;
    return true;
}

Reduced<Vec> reduce_to_fundamental(const RootSystem& rs, const Vec& b) { return reduce(rs, b); }

Reduced<std::vector<double>> reduce_to_fundamental(const RootSystem& rs, const std::vector<double>& b) {
    return reduce(rs, b);
}

std::vector<Vec> fundamental_vertices(const RootSystem& rs) {
    if (!rs.is_simple()) throw UnsupportedType("fundamental vertices need a simple system");
    std::vector<Vec> v{Vec(rs.rank, 0)};
    for (int i = 0; i < rs.rank; ++i) {
        Vec c(rs.rank, 0);
        c[i] = frac(1, rs.marks[i]);
        v.push_back(coweight_to_coroot(rs, c));
    }
    return v;
}

GridPoint grid_point(const RootSystem& rs, const std::vector<int>& kac) {
    std::size_t want = rs.rank + rs.factors.size();
    if (kac.size() != want) throw MismatchedSystem("expected " + std::to_string(want) + " kac coordinates");
    GridPoint g{kac, 0, {}};
    Vec c(rs.rank, 0);
    std::size_t pos = 0;
    for (const auto& f : rs.factors) {
        int level = kac[pos];
        for (int i = 0; i < f.rank; ++i) level += kac[pos + 1 + i] * rs.marks[f.offset + i];
        for (int x : std::vector<int>(kac.begin() + pos, kac.begin() + pos + f.rank + 1))
            if (x < 0) throw DomainError("kac coordinates must be nonnegative");
        if (level <= 0) throw DomainError("kac coordinates have level 0");
        if (g.level != 0 && g.level != level) throw DomainError("factors have different levels");
        g.level = level;
        for (int i = 0; i < f.rank; ++i) c[f.offset + i] = frac(kac[pos + 1 + i], level);
        pos += f.rank + 1;
    }
    g.point = coweight_to_coroot(rs, c);
    return g;
}

std::vector<GridPoint> grid_FM(const RootSystem& rs, int M) {
    if (M < 1) throw DomainError("grid level must be positive");
    std::vector<std::vector<std::vector<int>>> per_factor;
    for (const auto& f : rs.factors) {
        std::vector<std::vector<int>> sols;
        std::vector<int> s(f.rank + 1, 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == f.rank) {
                s[0] = left;
                sols.push_back(s);
                return;
            }
            int mark = rs.marks[f.offset + i];
            for (int v = 0; v * mark <= left; ++v) {
                s[i + 1] = v;
                rec(i + 1, left - v * mark);
            }
        };
        rec(0, M);
        std::sort(sols.begin(), sols.end());
        per_factor.push_back(std::move(sols));
    }
    std::vector<std::vector<int>> combos{{}};
    for (const auto& sols : per_factor) {
        std::vector<std::vector<int>> next;
        for (const auto& c : combos)
            for (const auto& s : sols) {
                auto k = c;
                k.insert(k.end(), s.begin(), s.end());
                next.push_back(std::move(k));
            }
        combos = std::move(next);
    }
    std::vector<GridPoint> out;
    out.reserve(combos.size());
    for (const auto& k : combos) out.push_back(grid_point(rs, k));
    return out;
}

std::vector<Vec> lattice_Tm(const RootSystem& rs, int m, std::size_t cap) {
    if (m < 1) throw DomainError("m must be positive");
    Integer count;
    mpz_ui_pow_ui(count.get_mpz_t(), m, rs.rank);
    if (count > Integer(static_cast<unsigned long>(cap)))
        throw CapExceeded("T_m has " + count.get_str() + " points", count.get_str());
    std::vector<Vec> out;
    std::vector<int> d(rs.rank, 0);
    for (;;) {
        Vec b(rs.rank);
        for (int i = 0; i < rs.rank; ++i) b[i] = frac(d[i], m);
        out.push_back(std::move(b));
        int i = rs.rank - 1;
        while (i >= 0 && ++d[i] == m) d[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

ElementOrders element_orders(const RootSystem& rs, const Vec& b) {
    check_length(rs, b);
    return {common_denominator(coroot_to_coweight(rs, b)), common_denominator(b)};
}

bool is_rational_element(const RootSystem& rs, const Vec& b) {
    Vec x = reduce_to_fundamental(rs, b).point;
    Integer N = element_orders(rs, x).N;
    long n = N.get_si();
    for (long k = 2; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        Vec kx = x;
        for (auto& v : kx) v *= k;
        if (reduce_to_fundamental(rs, kx).point != x) return false;
    }
    return true;
}

std::string RationalElement::fractions() const {
    std::string out = "(";
    for (std::size_t i = 1; i < grid.kac.size(); ++i) {
        if (i > 1) out += ",";
        out += to_string(frac(grid.kac[i], grid.level));
    }
    return out + ")";
}

std::vector<RationalElement> rational_elements(const RootSystem& rs, int M_max) {
    if (!rs.is_simple()) throw UnsupportedType("rational elements are tabulated for simple systems");
    std::vector<RationalElement> out;
    for (int M = 1; M <= M_max; ++M)
        for (auto& g : grid_FM(rs, M)) {
            int gcd = 0;
            for (int s : g.kac) gcd = std::gcd(gcd, s);
            if (gcd != 1) continue;
            if (!is_rational_element(rs, g.point)) continue;
            ElementOrders o = element_orders(rs, g.point);
            out.push_back({std::move(g), o.M, o.N});
        }
    return out;
}

}  // namespace orbitfn
