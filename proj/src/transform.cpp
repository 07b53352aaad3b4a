#include "orbitfn/transform.hpp"

#include "orbitfn/affine.hpp"
#include "orbitfn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <thread>

namespace orbitfn {

namespace {

Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        Complex s = 0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

Complex pairwise_sum(const std::vector<Complex>& v) { return v.empty() ? Complex(0) : pairwise_sum(v, 0, v.size()); }

/// Compositions of total into parts nonnegative entries.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        cur.push_back(k);
        compositions(total - k, parts - 1, cur, out);
        cur.pop_back();
    }
}

/// Grundmann-Moller rule of degree 2s+1 on the n-simplex, barycentric nodes, raw weights.
void grundmann_moller(int n, int s, std::vector<std::vector<double>>& nodes, std::vector<double>& weights) {
    const int d = 2 * s + 1;
    for (int i = 0; i <= s; ++i) {
        double w = std::pow(2.0, -2 * s) * std::pow(double(d + n - 2 * i), d) /
                   (std::tgamma(i + 1.0) * std::tgamma(double(d + n - i) + 1.0));
        if (i % 2) w = -w;
        std::vector<std::vector<int>> betas;
        std::vector<int> cur;
        compositions(s - i, n + 1, cur, betas);
        for (const auto& beta : betas) {
            std::vector<double> node;
            for (int b : beta) node.push_back(double(2 * b + 1) / double(d + n - 2 * i));
            nodes.push_back(std::move(node));
            weights.push_back(w);
        }
    }
}

/// Vertices, in t-coordinates, of Kuhn cells contained in {L >= t_1 >= ... >= t_n >= 0}.
std::vector<std::vector<std::vector<int>>> kuhn_cells(int n, int L) {
    std::vector<std::vector<std::vector<int>>> cells;
    std::vector<int> base(n, 0);
    std::vector<int> perm(n);
    auto inside = [&](const std::vector<int>& t) {
        if (t[0] > L || t[n - 1] < 0) return false;
        for (int i = 0; i + 1 < n; ++i)
            if (t[i] < t[i + 1]) return false;
        return true;
    };
    for (;;) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::vector<int>> verts{base};
            bool ok = inside(base);
            for (int j = 0; j < n && ok; ++j) {
                auto v = verts.back();
                ++v[perm[j]];
                ok = inside(v);
                verts.push_back(std::move(v));
            }
            if (ok) cells.push_back(std::move(verts));
        } while (std::next_permutation(perm.begin(), perm.end()));
        int k = 0;
        while (k < n && ++base[k] == L) base[k++] = 0;
        if (k == n) break;
    }
    return cells;
}

std::vector<Complex> evaluate_parallel(const std::vector<std::vector<double>>& pts, const PointFunction& g,
                                       unsigned threads) {
    std::vector<Complex> out(pts.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, pts.size() / 256));
    if (threads <= 1) {
        for (std::size_t i = 0; i < pts.size(); ++i) out[i] = g(pts[i]);
        return out;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (pts.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            std::size_t lo = t * chunk, hi = std::min(pts.size(), lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) out[i] = g(pts[i]);
        });
    for (auto& th : pool) th.join();
    return out;
}

void check_rank(const RootSystem& rs) {
    if (rs.rank < 1 || rs.rank > 3) throw UnsupportedRank("quadrature supports rank 1..3, got " + std::to_string(rs.rank));
    if (!rs.is_simple()) throw UnsupportedType("quadrature needs a simple system");
}

Complex integrate_values(const QuadratureRule& rule, const std::vector<Complex>& vals,
                         const std::vector<Complex>* conj_weight = nullptr) {
    std::vector<Complex> terms(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        Complex v = vals[i];
        if (conj_weight) v *= std::conj((*conj_weight)[i]);
        terms[i] = rule.weights[i] * v;
    }
    return pairwise_sum(terms);
}

}  // namespace

void sort_spectrum(Spectrum& s) {
    std::sort(s.begin(), s.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        Rational sa = std::accumulate(a.lambda.begin(), a.lambda.end(), Rational(0));
        Rational sb = std::accumulate(b.lambda.begin(), b.lambda.end(), Rational(0));
        if (sa != sb) return sa < sb;
        return a.lambda < b.lambda;
    });
}

QuadratureRule simplex_rule(int rank, int level) {
    if (rank < 1 || rank > 3) throw UnsupportedRank("quadrature supports rank 1..3, got " + std::to_string(rank));
    if (level < 1) throw DomainError("refinement level must be positive");
    std::vector<std::vector<double>> gm_nodes;
    std::vector<double> gm_w;
    grundmann_moller(rank, 3, gm_nodes, gm_w);
    double wsum = std::accumulate(gm_w.begin(), gm_w.end(), 0.0);
    QuadratureRule rule;
    rule.rank = rank;
    rule.level = level;
    auto cells = kuhn_cells(rank, level);
    const double cell_w = 1.0 / double(cells.size());
    for (const auto& cell : cells) {
        for (std::size_t q = 0; q < gm_nodes.size(); ++q) {
            std::vector<double> t(rank, 0.0);
            for (int v = 0; v <= rank; ++v)
                for (int k = 0; k < rank; ++k) t[k] += gm_nodes[q][v] * cell[v][k];
            // t-coordinates of the order simplex -> barycentric over its vertices.
            std::vector<double> beta(rank + 1);
            beta[0] = 1.0 - t[0] / level;
            for (int j = 1; j < rank; ++j) beta[j] = (t[j - 1] - t[j]) / level;
            beta[rank] = t[rank - 1] / level;
            rule.nodes.push_back(std::move(beta));
            rule.weights.push_back(cell_w * gm_w[q] / wsum);
        }
    }
    return rule;
}

std::vector<std::vector<double>> quadrature_points(const RootSystem& rs, const QuadratureRule& rule) {
    auto verts = fundamental_vertices(rs);
    std::vector<std::vector<double>> vd;
    for (const auto& v : verts) vd.push_back(to_double(v));
    std::vector<std::vector<double>> pts;
    pts.reserve(rule.nodes.size());
    for (const auto& beta : rule.nodes) {
        std::vector<double> x(rs.rank, 0.0);
        for (int v = 1; v <= rs.rank; ++v)
            for (int k = 0; k < rs.rank; ++k) x[k] += beta[v] * vd[v][k];
        pts.push_back(std::move(x));
    }
    return pts;
}

Complex quadrature_integrate(const RootSystem& rs, const PointFunction& g, int level, unsigned threads) {
    check_rank(rs);
    QuadratureRule rule = simplex_rule(rs.rank, level);
    auto vals = evaluate_parallel(quadrature_points(rs, rule), g, threads);
    return integrate_values(rule, vals);
}

Spectrum forward_transform(const RootSystem& rs, const PointFunction& f, const std::vector<Weight>& lambdas,
                           int level, unsigned threads) {
    check_rank(rs);
    QuadratureRule rule = simplex_rule(rs.rank, level);
    auto pts = quadrature_points(rs, rule);
    auto fv = evaluate_parallel(pts, f, threads);
    Spectrum out;
    for (const auto& lam : lambdas) {
        OrbitFunction phi = make_orbit_function(rs, lam);
        auto pv = evaluate_parallel(pts, [&](const std::vector<double>& x) { return eval(phi, x); }, threads);
        Complex c = integrate_values(rule, fv, &pv) / phi.orbit.size.get_d();
        out.push_back({lam, c});
    }
    sort_spectrum(out);
    return out;
}

Complex inverse_transform(const RootSystem& rs, const Spectrum& spectrum, const std::vector<double>& x) {
    Complex s = 0;
    for (const auto& e : spectrum) s += e.coeff * eval(make_orbit_function(rs, e.lambda), x);
    return s;
}

std::pair<double, double> plancherel(const RootSystem& rs, const Spectrum& spectrum, const PointFunction& f,
                                     int level, unsigned threads) {
    double lhs = 0;
    for (const auto& e : spectrum) lhs += orbit_size(rs, e.lambda).get_d() * std::norm(e.coeff);
    Complex rhs = quadrature_integrate(
        rs, [&](const std::vector<double>& x) { return Complex(std::norm(f(x))); }, level, threads);
    return {lhs, rhs.real()};
}

Cyclotomic tm_scalar_product(const RootSystem& rs, const Weight& lambda, const Weight& mu, int m,
                             std::size_t cap) {
    if (!is_integral(lambda) || !is_integral(mu)) throw NotIntegral("T_m scalar product needs integral weights");
    OrbitFunction fl = make_orbit_function(rs, lambda), fm = make_orbit_function(rs, mu);
    auto residues = [m](const OrbitFunction& f, const Vec& x) {
        std::vector<long long> r(m, 0);
        for (const auto& p : f.orbit.points) {
            Integer k = Rational(dot(p, x) * m).get_num() % m;
            if (k < 0) k += m;
            ++r[k.get_si()];
        }
        return r;
    };
    std::vector<long long> total(m, 0);
    for (const auto& x : lattice_Tm(rs, m, cap)) {
        auto a = residues(fl, x), b = residues(fm, x);
        for (int i = 0; i < m; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < m; ++j) total[((i - j) % m + m) % m] += a[i] * b[j];
        }
    }
    std::vector<Rational> counts;
    for (long long c : total) counts.emplace_back(static_cast<long>(c));
    return Cyclotomic::from_residues(m, counts);
}

bool separates(const RootSystem& rs, const Weight& lambda, const Weight& mu, int m) {
    if (m < 1) throw DomainError("m must be positive");
    Orbit a = orbit(rs, lambda), b = orbit(rs, mu);
    for (const auto& p : a.points)
        for (const auto& q : b.points) {
            if (p == q) continue;
            bool all = true;
            for (int i = 0; i < rs.rank && all; ++i) {
                Rational d = p[i] - q[i];
                all = is_integer(d) && d.get_num() % m == 0;
            }
            if (all) return false;
        }
    return true;
}

std::optional<std::pair<Weight, Weight>> separation_failure(const RootSystem& rs, const std::vector<Weight>& lambdas,
                                                            int m) {
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i; j < lambdas.size(); ++j)
            if (!separates(rs, lambdas[i], lambdas[j], m)) return std::make_pair(lambdas[i], lambdas[j]);
    return std::nullopt;
}

int minimal_separating_m(const RootSystem& rs, const std::vector<Weight>& lambdas) {
    Rational spread = 0;
    std::vector<Orbit> orbits;
    for (const auto& l : lambdas) orbits.push_back(orbit(rs, l));
    for (int i = 0; i < rs.rank; ++i) {
        Rational lo = 0, hi = 0;
        bool first = true;
        for (const auto& o : orbits)
            for (const auto& p : o.points) {
                if (first || p[i] < lo) lo = p[i];
                if (first || p[i] > hi) hi = p[i];
                first = false;
            }
        spread = std::max(spread, Rational(hi - lo));
    }
    long bound = floor_of(spread).get_si() + 1;
    for (long m = 1; m < bound; ++m)
        if (!separation_failure(rs, lambdas, static_cast<int>(m))) return static_cast<int>(m);
    return static_cast<int>(bound);
}

std::vector<FiniteSample> finite_samples(const RootSystem& rs, int m, std::size_t cap) {
    std::map<Vec, long> counts;
    for (const auto& x : lattice_Tm(rs, m, cap)) ++counts[reduce_to_fundamental(rs, x).point];
    std::vector<FiniteSample> out;
    for (auto& [p, c] : counts) out.push_back({p, c});
    return out;
}

namespace {

void require_separated(const RootSystem& rs, const std::vector<Weight>& lambdas, int m) {
    if (auto bad = separation_failure(rs, lambdas, m))
        throw SeparationFailure("T_" + std::to_string(m) + " does not separate O(" + to_string(bad->first) +
                                ") and O(" + to_string(bad->second) + ")");
}

Integer power(int m, int n) {
    Integer r = 1;
    for (int i = 0; i < n; ++i) r *= m;
    return r;
}

}  // namespace

Spectrum finite_forward(const RootSystem& rs, const std::vector<FiniteSample>& samples,
                        const std::vector<Complex>& values, const std::vector<Weight>& lambdas, int m) {
    if (samples.size() != values.size()) throw DomainError("one value per sample point required");
    require_separated(rs, lambdas, m);
    const double mn = power(m, rs.rank).get_d();
    Spectrum out;
    for (const auto& lam : lambdas) {
        OrbitFunction phi = make_orbit_function(rs, lam);
        std::vector<Complex> terms;
        for (std::size_t i = 0; i < samples.size(); ++i)
            terms.push_back(double(samples[i].count) * values[i] *
                            std::conj(eval(phi, Point::exact_point(samples[i].point))));
        out.push_back({lam, pairwise_sum(terms) / (mn * phi.orbit.size.get_d())});
    }
    sort_spectrum(out);
    return out;
}

std::vector<Cyclotomic> finite_forward_exact(const RootSystem& rs, const std::vector<FiniteSample>& samples,
                                             const std::vector<Cyclotomic>& values,
                                             const std::vector<Weight>& lambdas, int m) {
    if (samples.size() != values.size()) throw DomainError("one value per sample point required");
    require_separated(rs, lambdas, m);
    std::vector<Cyclotomic> out;
    for (const auto& lam : lambdas) {
        OrbitFunction phi = make_orbit_function(rs, lam);
        Cyclotomic s(m);
        for (std::size_t i = 0; i < samples.size(); ++i)
            s += values[i] * eval_exact(phi, samples[i].point, m).conj() * Rational(samples[i].count);
        out.push_back(s * Rational(Integer(1), Integer(power(m, rs.rank) * phi.orbit.size)));
    }
    return out;
}

std::vector<Cyclotomic> finite_forward_full(const RootSystem& rs, const std::function<Cyclotomic(const Vec&)>& f,
                                            const std::vector<Weight>& lambdas, int m) {
    require_separated(rs, lambdas, m);
    auto pts = lattice_Tm(rs, m);
    std::vector<Cyclotomic> fv;
    for (const auto& x : pts) fv.push_back(f(x));
    std::vector<Cyclotomic> out;
    for (const auto& lam : lambdas) {
        OrbitFunction phi = make_orbit_function(rs, lam);
        Cyclotomic s(m);
        for (std::size_t i = 0; i < pts.size(); ++i) s += fv[i] * eval_exact(phi, pts[i], m).conj();
        out.push_back(s * Rational(Integer(1), Integer(power(m, rs.rank) * phi.orbit.size)));
    }
    return out;
}

Cyclotomic finite_synthesis(const RootSystem& rs, const std::vector<std::pair<Weight, Cyclotomic>>& spectrum,
                            const Vec& s, int m) {
    Cyclotomic out(m);
    for (const auto& [lam, a] : spectrum) out += a * eval_exact(make_orbit_function(rs, lam), s, m);
    return out;
}

std::vector<Complex> finite_fourier(const std::vector<Complex>& values, int N, int r, bool inverse) {
    if (N < 1 || r < 1) throw DomainError("finite Fourier transform needs N >= 1 and r >= 1");
    std::size_t total = 1;
    for (int i = 0; i < r; ++i) total *= static_cast<std::size_t>(N);
    if (values.size() != total) throw DomainError("expected N^r values");
    const double sign = inverse ? -1.0 : 1.0;
    const double norm = std::pow(double(N), -0.5 * r);
    std::vector<Complex> out(total);
    auto digits = [&](std::size_t idx) {
        std::vector<long> d(r);
        for (int k = r - 1; k >= 0; --k) {
            d[k] = static_cast<long>(idx % N) + 1;
            idx /= N;
        }
        return d;
    };
    for (std::size_t a = 0; a < total; ++a) {
        auto ma = digits(a);
        std::vector<Complex> terms(total);
        for (std::size_t b = 0; b < total; ++b) {
            auto nb = digits(b);
            long e = 0;
            for (int k = 0; k < r; ++k) e = (e + ma[k] * nb[k]) % N;
            double ang = sign * 2.0 * std::numbers::pi * double(e) / N;
            terms[b] = values[b] * Complex(std::cos(ang), std::sin(ang));
        }
        out[a] = norm * pairwise_sum(terms);
    }
    return out;
}

}  // namespace orbitfn
