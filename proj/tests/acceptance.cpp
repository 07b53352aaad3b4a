// Acceptance checks. Each criterion prints one "criterion N: PASS|FAIL (...)" line.
// Usage: acceptance [--criterion N] [--corrected]
// --corrected replaces two printed closed forms that are provably wrong (the C2
// product O(a 0) x O(a 0) and the C2 Laplace eigenvalue) by their corrected forms.

#include "orbitfn/affine.hpp"
#include "orbitfn/errors.hpp"
#include "orbitfn/orbit_algebra.hpp"
#include "orbitfn/orbit_fn.hpp"
#include "orbitfn/transform.hpp"
#include "orbitfn/weyl.hpp"

#include "fixtures/orbit_tables.hpp"
#include "fixtures/product_tables.hpp"
#include "fixtures/rational_tables.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace orbitfn;
using support::Symbols;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 8) failures.push_back(what);
    }
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void time_limit(Outcome& out, const Timer& t, double limit) {
    double s = t.seconds();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    out.detail << "; time " << buf << " (limit " << limit << "s)";
    if (s > limit) out.fail("runtime over limit");
}

std::string str(const Vec& v) { return to_string(v); }

Weight w(std::initializer_list<long> xs) { return ints(xs); }

std::vector<Weight> box(int rank, long hi) {
    std::vector<Weight> out;
    Weight cur(rank, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == rank) {
            out.push_back(cur);
            return;
        }
        for (long x = 0; x <= hi; ++x) {
            cur[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------- criterion 1

std::set<Vec> expected_orbit(const fixtures::OrbitList& list, const Symbols& s) {
    std::set<Vec> pts;
    for (const auto& p : support::split(list.points, ';')) {
        Vec v = support::eval_point(p, s);
        pts.insert(v);
        if (std::strcmp(list.sym, "pm") == 0) {
            Vec neg = v;
            for (auto& x : neg) x = -x;
            pts.insert(neg);
        } else if (std::strcmp(list.sym, "contra") == 0) {
            Vec c(v.rbegin(), v.rend());
            for (auto& x : c) x = -x;
            pts.insert(c);
        }
    }
    return pts;
}

Outcome criterion1() {
    Outcome out;
    Timer t;
    int checked = 0;
    for (const auto& list : fixtures::kOrbitLists) {
        RootSystem rs = parse_root_system(list.type);
        for (const auto& inst : fixtures::kOrbitInstances) {
            Symbols s{inst[0], inst[1], inst[2]};
            Weight lambda = support::eval_point(list.label, s);
            std::set<Vec> want = expected_orbit(list, s);
            Orbit o = orbit(rs, lambda);
            std::set<Vec> got(o.points.begin(), o.points.end());
            ++checked;
            if (got != want || o.size != Integer(static_cast<long>(o.points.size())))
                out.fail(std::string(list.type) + " " + str(lambda) + ": got " + std::to_string(got.size()) +
                         " points, expected " + std::to_string(want.size()));
        }
    }
    out.detail << checked << " orbits compared as exact point sets";
    time_limit(out, t, 1.0);
    return out;
}

// ---------------------------------------------------------------- criterion 2

bool g_corrected = false;

struct ProductCorrection {
    const char* type;
    const char* lambda;
    const char* mu;
    const char* printed;
    const char* corrected;
};

// O(a 0) x O(a 0) in C2: e_1 + e_2 = w_2, so the middle term is 2O(0 a). The printed
// 2O(0 2a) has norm 8a^2, more than any sum of two vectors of norm a^2.
const ProductCorrection kProductCorrections[] = {
    {"C2", "a 0", "a 0", "1:2a 0; 2:0 2a; 4:0 0", "1:2a 0; 2:0 a; 4:0 0"},
};

Outcome criterion2() {
    Outcome out;
    Timer t;
    int lines = 0, products = 0, fastpath = 0;
    for (const auto& line : fixtures::kProductLines) {
        RootSystem rs = parse_root_system(line.type);
        std::set<std::pair<Vec, Vec>> seen;
        int inst = 0;
        for (long a = 1; a <= 6; ++a) {
            for (long b = 1; b <= 6; ++b) {
                Symbols s{a, b, 0};
                if (!support::constraint_holds(line.constraint, s)) continue;
                Weight lambda = support::eval_point(line.lambda, s);
                Weight mu = support::eval_point(line.mu, s);
                if (!seen.insert({lambda, mu}).second) continue;
                std::vector<std::pair<Weight, long long>> raw;
                std::string terms = line.terms;
                if (g_corrected) {
                    for (const auto& c : kProductCorrections)
                        if (std::strcmp(c.type, line.type) == 0 && std::strcmp(c.lambda, line.lambda) == 0 &&
                            std::strcmp(c.mu, line.mu) == 0 && terms == c.printed)
                            terms = c.corrected;
                }
                for (const auto& term : support::split(terms, ';')) {
                    auto parts = support::split(support::trim(term), ':');
                    raw.push_back({support::eval_point(parts[1], s), std::stoll(parts[0])});
                }
                OrbitSum want = make_orbit_sum(rs, raw);
                OrbitSum got = product(rs, lambda, mu);
                ++inst;
                ++products;
                if (!(got == want))
                    out.fail(std::string(line.type) + " O" + str(lambda) + " x O" + str(mu) + " mismatch");
                if (product_fastpath_classify(rs, lambda, mu) != ProductClass::General) {
                    ++fastpath;
                    if (!(product_fastpath(rs, lambda, mu) == want))
                        out.fail(std::string(line.type) + " fast path O" + str(lambda) + " x O" + str(mu));
                }
            }
        }
        ++lines;
        std::string all = std::string(line.lambda) + line.mu + line.terms;
        bool symbolic = all.find_first_of("ab") != std::string::npos;
        if (symbolic ? inst < 4 : inst != 1)
            out.fail(std::string(line.type) + " line " + line.lambda + " x " + line.mu + " has only " +
                     std::to_string(inst) + " instantiations");
    }
    out.detail << lines << " table lines, " << products << " products (" << fastpath
               << " also through the closed-form path)";
    time_limit(out, t, 10.0);
    return out;
}

// ---------------------------------------------------------------- criterion 3

Vec sort_desc(Vec v) {
    std::sort(v.begin(), v.end(), [](const Rational& x, const Rational& y) { return x > y; });
    return v;
}

Vec abs_sorted(const Vec& v) {
    Vec a = v;
    for (auto& x : a) x = abs(x);
    return sort_desc(a);
}

using Raw = std::vector<std::pair<Weight, long long>>;

std::vector<std::vector<int>> subsets(int n, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + p, 1);
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

/// Closed-form branching of O(lambda) in orthogonal coordinates, mapped to omega-coordinates.
Raw closed_form(const std::string& pair, const RootSystem& src, const RootSystem& dst, const Weight& lambda) {
    Vec m = to_orthogonal(src, lambda);
    char ser = src.factors[0].series;
    int n = static_cast<int>(m.size());
    Raw raw;
    auto factor_system = [&](int k) { return build_root_system(dst.factors[k].series, dst.factors[k].rank); };

    if (pair == "B3->B2") {
        // the target is stored as C2 with the short node first
        for (int i = 0; i < n; ++i) {
            Vec r;
            for (int j = 0; j < n; ++j)
                if (j != i) r.push_back(m[j]);
            r = abs_sorted(r);
            raw.push_back({Weight{2 * r[1], r[0] - r[1]}, 2});
        }
        return raw;
    }
    if (dst.is_simple()) {
        RootSystem t = factor_system(0);
        for (int i = 0; i < n; ++i) {
            Vec r;
            for (int j = 0; j < n; ++j)
                if (j != i) r.push_back(m[j]);
            if (ser == 'A') {
                raw.push_back({from_orthogonal(t, sort_desc(r)), 1});
            } else if (ser == 'B' || ser == 'C') {
                raw.push_back({from_orthogonal(t, abs_sorted(r)), 2});
            } else {
                Vec plus = abs_sorted(r), minus = plus;
                minus.back() = -minus.back();
                raw.push_back({from_orthogonal(t, plus), 1});
                raw.push_back({from_orthogonal(t, minus), 1});
            }
        }
        return raw;
    }
    RootSystem ta = factor_system(0), tb = factor_system(1);
    int p = ta.rank + 1;
    int sign_m = 1;
    for (const auto& x : m)
        if (x < 0) sign_m = -sign_m;
    for (const auto& S : subsets(n, p)) {
        Vec ms, rest;
        for (int i = 0, k = 0; i < n; ++i) {
            if (k < p && S[k] == i) {
                ms.push_back(m[i]);
                ++k;
            } else {
                rest.push_back(m[i]);
            }
        }
        if (ser == 'A') {
            Weight part = from_orthogonal(ta, sort_desc(ms));
            Weight other = from_orthogonal(tb, sort_desc(rest));
            part.insert(part.end(), other.begin(), other.end());
            raw.push_back({part, 1});
            continue;
        }
        for (unsigned eps = 0; eps < (1u << p); ++eps) {
            Vec signed_s = ms;
            int prod = 1;
            for (int i = 0; i < p; ++i) {
                if (ser == 'D') signed_s[i] = abs(signed_s[i]);
                if (eps & (1u << i)) {
                    signed_s[i] = -signed_s[i];
                    prod = -prod;
                }
            }
            Weight part = from_orthogonal(ta, sort_desc(signed_s));
            Vec r = abs_sorted(rest);
            if (ser == 'D' && sign_m * prod < 0) r.back() = -r.back();
            Weight other = from_orthogonal(tb, r);
            part.insert(part.end(), other.begin(), other.end());
            raw.push_back({part, 1});
        }
    }
    return raw;
}

Outcome criterion3() {
    Outcome out;
    Timer t;
    const char* pairs[] = {"A2->A1",    "A3->A2",    "A4->A3",    "A5->A4",    "A3->A1xA1", "A4->A1xA2",
                           "A4->A2xA1", "A5->A1xA3", "A5->A2xA2", "B3->B2",    "B4->B3",    "B5->B4",
                           "C3->C2",    "C4->C3",    "C5->C4",    "C4->A1xC2", "C5->A1xC3", "C5->A2xC2", "D5->D4",    "D6->A1xD4"};
    int checked = 0;
    for (const char* name : pairs) {
        ProjectionMatrix proj;
        try {
            proj = builtin_projection(name);
        } catch (const orbitfn::Error& e) {
            out.fail(std::string(name) + ": " + e.what());
            continue;
        }
        int rank = proj.source.rank;
        for (int trial = 0; trial < 6; ++trial) {
            Weight lambda(rank);
            for (auto& x : lambda) x = support::uniform_int(1, 3);
            OrbitSum got = branch_restrict(lambda, proj);
            OrbitSum want = make_orbit_sum(proj.target, closed_form(name, proj.source, proj.target, lambda));
            ++checked;
            if (!(got == want)) out.fail(std::string(name) + " at " + str(lambda));
            if (point_count(proj.target, got) != orbit_size(proj.source, lambda))
                out.fail(std::string(name) + " loses points at " + str(lambda));
        }
    }
    out.detail << checked << " restrictions matched their closed forms (D_n->A x D_q needs n=6)";
    time_limit(out, t, 30.0);
    return out;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion4() {
    Outcome out;
    Timer t;
    struct Case {
        const char* type;
        const char* table;
        int m_max;
        bool fractions;
    };
    const Case cases[] = {{"A1", fixtures::kRationalA1, 6, false},  {"A2", fixtures::kRationalA2, 6, false},
                          {"C2", fixtures::kRationalC2, 12, true},  {"G2", fixtures::kRationalG2, 12, true},
                          {"A3", fixtures::kRationalA3, 12, false}, {"A4", fixtures::kRationalA4, 12, false},
                          {"B3", fixtures::kRationalB3, 15, true},  {"C3", fixtures::kRationalC3, 30, true}};
    // The C2 table omits kac [1,1,0]: w1^vee/3 is rational since w1^vee is in Q^vee.
    const std::set<std::string> known_extra = {"C2 3 3 1,1,0"};
    int rows = 0;
    std::set<std::string> extras_seen;
    for (const auto& c : cases) {
        RootSystem rs = parse_root_system(c.type);
        auto want_rows = support::parse_table(c.table);
        std::map<std::string, Vec> got;
        for (const auto& e : rational_elements(rs, c.m_max)) {
            std::string key = std::string(c.type) + " " + e.M.get_str() + " " + e.N.get_str() + " ";
            for (std::size_t i = 0; i < e.grid.kac.size(); ++i)
                key += (i ? "," : "") + std::to_string(e.grid.kac[i]);
            std::string f = e.fractions();
            got[key] = parse_vec(f.substr(1, f.size() - 2));
        }
        std::set<std::string> want;
        for (const auto& r : want_rows) {
            std::string key = std::string(c.type) + " " + std::to_string(r.M) + " " + std::to_string(r.N) + " ";
            for (std::size_t i = 0; i < r.kac.size(); ++i) key += (i ? "," : "") + std::to_string(r.kac[i]);
            want.insert(key);
            ++rows;
            auto it = got.find(key);
            if (it == got.end()) {
                out.fail("missing row " + key);
                continue;
            }
            if (c.fractions && it->second != r.fractions) out.fail("fractions differ for " + key);
        }
        for (const auto& [key, f] : got) {
            if (want.count(key)) continue;
            if (known_extra.count(key)) {
                extras_seen.insert(key);
                continue;
            }
            out.fail("unexpected row " + key);
        }
    }
    out.detail << rows << " printed rows reproduced; extra rows: " << extras_seen.size();
    for (const auto& e : extras_seen) out.detail << " [" << e << "]";
    time_limit(out, t, 300.0);
    return out;
}

// ---------------------------------------------------------------- criterion 5

Integer congruent_pairs(const RootSystem& rs, const Weight& lambda, const Weight& mu, int m) {
    Orbit a = orbit(rs, lambda), b = orbit(rs, mu);
    long count = 0;
    for (const auto& x : a.points)
        for (const auto& y : b.points) {
            bool all = true;
            for (int i = 0; i < rs.rank && all; ++i) {
                Rational d = x[i] - y[i];
                all = is_integer(d / m);
            }
            count += all;
        }
    return Integer(count);
}

Outcome criterion5() {
    Outcome out;
    Timer t;
    struct Case {
        const char* type;
        int lo, hi;
    };
    const Case cases[] = {{"A2", 4, 8}, {"C2", 4, 8}, {"G2", 4, 8}, {"A3", 4, 5}};
    long identities = 0, unseparated = 0;
    for (const auto& c : cases) {
        RootSystem rs = parse_root_system(c.type);
        auto ws = box(rs.rank, 2);
        for (int m = c.lo; m <= c.hi; ++m) {
            Integer mn = 1;
            for (int i = 0; i < rs.rank; ++i) mn *= m;
            for (const auto& lambda : ws) {
                for (const auto& mu : ws) {
                    Cyclotomic v = tm_scalar_product(rs, lambda, mu, m);
                    std::string tag = std::string(c.type) + " m=" + std::to_string(m) + " " + str(lambda) + "," + str(mu);
                    if (!v.is_rational()) {
                        out.fail(tag + ": not rational");
                        continue;
                    }
                    // independent count: the T_m sum of exp(2 pi i <nu,x>) is m^n iff nu = 0 mod m
                    if (v.rational_value() != Rational(mn * congruent_pairs(rs, lambda, mu, m)))
                        out.fail(tag + ": differs from the congruence count");
                    if (separates(rs, lambda, mu, m)) {
                        ++identities;
                        Rational want = lambda == mu ? Rational(mn * orbit_size(rs, lambda)) : Rational(0);
                        if (v.rational_value() != want) out.fail(tag + ": " + to_string(v.rational_value()));
                    } else {
                        ++unseparated;
                    }
                }
            }
        }
    }
    out.detail << identities << " separated pairs satisfy m^n|O|delta exactly (" << unseparated
               << " non-separated pairs skipped)";
    time_limit(out, t, 60.0);
    return out;
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion6() {
    Outcome out;
    Timer t;
    const int m = 8;
    double worst = 0;
    int spectra = 0;
    for (const char* type : {"A2", "C2"}) {
        RootSystem rs = parse_root_system(type);
        auto samples = finite_samples(rs, m);
        long total = 0;
        for (const auto& s : samples) total += s.count;
        if (total != m * m) out.fail(std::string(type) + ": preimage counts sum to " + std::to_string(total));
        auto pool = box(rs.rank, 3);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Weight> lambdas;
            std::vector<Weight> shuffled = pool;
            std::shuffle(shuffled.begin(), shuffled.end(), support::rng());
            for (const auto& l : shuffled) {
                std::vector<Weight> cand = lambdas;
                cand.push_back(l);
                if (!separation_failure(rs, cand, m)) lambdas = cand;
                if (lambdas.size() == 5) break;
            }
            std::vector<std::pair<Weight, Cyclotomic>> spectrum;
            for (const auto& l : lambdas) {
                Cyclotomic c = Cyclotomic::constant(m, frac(support::uniform_int(-9, 9), support::uniform_int(1, 7)));
                c += Cyclotomic::root(m, support::uniform_int(0, m - 1)) * frac(support::uniform_int(-5, 5), 3);
                spectrum.push_back({l, c});
            }
            std::vector<Cyclotomic> values;
            std::vector<Complex> values_d;
            for (const auto& s : samples) {
                values.push_back(finite_synthesis(rs, spectrum, s.point, m));
                values_d.push_back(values.back().to_complex());
            }
            auto exact = finite_forward_exact(rs, samples, values, lambdas, m);
            auto full = finite_forward_full(
                rs, [&](const Vec& x) { return finite_synthesis(rs, spectrum, x, m); }, lambdas, m);
            auto approx = finite_forward(rs, samples, values_d, lambdas, m);
            ++spectra;
            for (std::size_t i = 0; i < lambdas.size(); ++i) {
                std::string tag = std::string(type) + " " + str(lambdas[i]);
                if (exact[i] != spectrum[i].second) out.fail(tag + ": exact coefficient differs");
                if (full[i] != exact[i]) out.fail(tag + ": full T_m sum differs");
                // finite_forward returns the spectrum in canonical order
                auto it = std::find_if(approx.begin(), approx.end(),
                                       [&](const SpectrumEntry& e) { return e.lambda == lambdas[i]; });
                if (it == approx.end()) {
                    out.fail(tag + ": missing from the float spectrum");
                    continue;
                }
                double err = std::abs(it->coeff - spectrum[i].second.to_complex());
                worst = std::max(worst, err);
                if (!(err < 1e-12)) out.fail(tag + ": float error " + std::to_string(err));
            }
        }
    }
    out.detail << spectra << " spectra recovered exactly; worst float error " << worst << " (tol 1e-12)";
    return out;
}

// ---------------------------------------------------------------- criterion 7

/// Gram matrix of orbit functions under the normalized integral over F.
std::vector<std::vector<Complex>> gram(const RootSystem& rs, const std::vector<Weight>& lambdas, int level) {
    QuadratureRule rule = simplex_rule(rs.rank, level);
    auto pts = quadrature_points(rs, rule);
    std::vector<OrbitFunction> fs;
    for (const auto& l : lambdas) fs.push_back(make_orbit_function(rs, l));
    std::size_t k = fs.size();
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<Complex>> partial(threads, std::vector<Complex>(k * k, 0));
    std::vector<std::thread> pool;
    std::size_t chunk = (pts.size() + threads - 1) / threads;
    for (unsigned th = 0; th < threads; ++th) {
        pool.emplace_back([&, th] {
            std::vector<Complex> vals(k);
            std::size_t lo = th * chunk, hi = std::min(pts.size(), lo + chunk);
            for (std::size_t p = lo; p < hi; ++p) {
                for (std::size_t i = 0; i < k; ++i) vals[i] = eval(fs[i], pts[p]);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) partial[th][i * k + j] += rule.weights[p] * vals[i] * std::conj(vals[j]);
            }
        });
    }
    for (auto& th : pool) th.join();
    std::vector<std::vector<Complex>> g(k, std::vector<Complex>(k, 0));
    for (unsigned th = 0; th < threads; ++th)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) g[i][j] += partial[th][i * k + j];
    return g;
}

Outcome criterion7() {
    Outcome out;
    Timer t;
    struct Case {
        const char* type;
        int level;
        double tol;
    };
    const Case cases[] = {{"A2", 64, 1e-6}, {"C2", 64, 1e-6}, {"G2", 64, 1e-6},
                          {"A3", 24, 1e-4}, {"B3", 24, 1e-4}, {"C3", 24, 1e-4}};
    for (const auto& c : cases) {
        RootSystem rs = parse_root_system(c.type);
        auto lambdas = box(rs.rank, 2);
        auto g = gram(rs, lambdas, c.level);
        double worst = 0;
        for (std::size_t i = 0; i < lambdas.size(); ++i)
            for (std::size_t j = 0; j < lambdas.size(); ++j) {
                double want = i == j ? orbit_size(rs, lambdas[i]).get_d() : 0.0;
                worst = std::max(worst, std::abs(g[i][j] - want));
            }
        if (!(worst <= c.tol)) out.fail(std::string(c.type) + " orthogonality error " + std::to_string(worst));

        double pworst = 0;
        for (int trial = 0; trial < (rs.rank == 2 ? 3 : 1); ++trial) {
            Spectrum sp;
            std::vector<OrbitFunction> fs;
            for (int k = 0; k < 3; ++k) {
                Weight l = support::random_dominant(rs.rank, 2);
                bool dup = false;
                for (const auto& e : sp) dup = dup || e.lambda == l;
                if (dup) continue;
                sp.push_back({l, Complex(support::uniform(-1, 1), support::uniform(-1, 1))});
                fs.push_back(make_orbit_function(rs, l));
            }
            PointFunction f = [&](const std::vector<double>& x) {
                Complex s = 0;
                for (std::size_t k = 0; k < fs.size(); ++k) s += sp[k].coeff * eval(fs[k], x);
                return s;
            };
            auto [lhs, rhs] = plancherel(rs, sp, f, c.level);
            pworst = std::max(pworst, std::abs(lhs - rhs));
        }
        if (!(pworst <= c.tol)) out.fail(std::string(c.type) + " Plancherel error " + std::to_string(pworst));
        out.detail << c.type << "@" << c.level << " gram " << worst << " plancherel " << pworst << "; ";
    }
    time_limit(out, t, 600.0);
    return out;
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion8() {
    Outcome out;
    Timer t;
    const double h = 2e-4, tol = 1e-5;
    // FD noise grows like eps|O|/h^2, so points where |f| is tiny relative to |O| are skipped.
    const double min_ratio = 0.05;
    struct Printed {
        const char* type;
        std::function<double(double, double)> form;
    };
    const Printed printed[] = {
        {"A2", [](double a, double b) { return -(4 * kPi * kPi / 3) * (a * a + a * b + b * b); }},
        {"C2", [](double a, double b) { return -2 * kPi * kPi * (a * a + 4 * a * b + 4 * b * b); }},
        {"G2", [](double a, double b) { return -(4 * kPi * kPi / 3) * (3 * a * a + 3 * a * b + b * b); }},
    };
    for (const char* type : {"A2", "C2", "G2", "A3", "B3", "C3"}) {
        RootSystem rs = parse_root_system(type);
        double worst = 0;
        int points = 0;
        while (points < 20) {
            Weight l = support::random_dominant(rs.rank, 3);
            bool zero = true;
            for (const auto& x : l) zero = zero && x == 0;
            if (zero) continue;
            OrbitFunction f = make_orbit_function(rs, l);
            std::vector<double> theta(rs.rank);
            for (auto& x : theta) x = support::uniform(0.05, 0.95);
            Complex v = eval(f, theta_to_coroot(rs, theta));
            if (std::abs(v) < min_ratio * f.orbit.size.get_d()) continue;
            double ev = laplace_eigenvalue(rs, l).value;
            double ref = -4 * kPi * kPi * Rational(inner_product(rs, l, l) / 2).get_d();
            if (std::abs(ev - ref) > 1e-12 * std::abs(ref)) out.fail(std::string(type) + " eigenvalue formula");
            Complex lap = laplace_apply_fd(f, theta, h);
            double err = std::abs(lap - ev * v) / std::abs(ev * v);
            worst = std::max(worst, err);
            if (!(err <= tol)) out.fail(std::string(type) + " " + str(l) + " FD relative error " + std::to_string(err));
            ++points;
        }
        out.detail << type << " fd " << worst << "; ";
    }
    for (const auto& p : printed) {
        auto form = p.form;
        if (g_corrected && std::strcmp(p.type, "C2") == 0) {
            // -2 pi^2 (a+2b)^2 is degenerate; -4 pi^2 <lambda,lambda> is -pi^2 (a^2+2ab+2b^2)
            form = [](double a, double b) { return -kPi * kPi * (a * a + 2 * a * b + 2 * b * b); };
            out.detail << "C2 corrected form; ";
        }
        RootSystem rs = parse_root_system(p.type);
        double worst = 0;
        for (long a = 0; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b) {
                if (a == 0 && b == 0) continue;
                double ev = laplace_eigenvalue(rs, w({a, b})).value;
                double f = form(a, b);
                worst = std::max(worst, std::abs(ev - f) / std::abs(ev));
            }
        out.detail << p.type << " printed form " << worst << "; ";
        if (!(worst <= tol)) out.fail(std::string(p.type) + " printed closed form differs (relative " + std::to_string(worst) + ")");
    }
    return out;
}

// ---------------------------------------------------------------- criterion 9

Outcome criterion9() {
    Outcome out;
    const double tol = 1e-10;
    const char* types[] = {"A2", "C2", "G2", "A3", "B3", "C3", "A4", "D4"};
    std::map<std::string, std::vector<GroupElement>> groups;
    for (const char* ty : types) groups[ty] = weyl_group_elements(parse_root_system(ty));
    auto pick = [&](int k) { return types[k % (sizeof types / sizeof types[0])]; };
    auto random_point = [](int n) {
        std::vector<double> x(n);
        for (auto& v : x) v = support::uniform(-1, 1);
        return x;
    };
    double worst[5] = {0, 0, 0, 0, 0};
    auto record = [&](int k, double err, const std::string& tag) {
        worst[k] = std::max(worst[k], err);
        if (!(err <= tol)) out.fail(tag + " error " + std::to_string(err));
    };

    for (int k = 0; k < 200; ++k) {
        RootSystem rs = parse_root_system(pick(k));
        OrbitFunction f = make_orbit_function(rs, support::random_dominant(rs.rank, 3));
        const auto& g = groups[pick(k)];
        auto x = random_point(rs.rank);
        const auto& el = g[support::uniform_int(0, static_cast<long>(g.size()) - 1)];
        record(0, std::abs(eval(f, act_on_point(el, x)) - eval(f, x)), std::string("W ") + pick(k));
    }
    for (int k = 0; k < 200; ++k) {
        RootSystem rs = parse_root_system(pick(k));
        OrbitFunction f = make_orbit_function(rs, support::random_dominant(rs.rank, 3));
        auto x = random_point(rs.rank);
        auto y = x;
        for (auto& v : y) v += static_cast<double>(support::uniform_int(-3, 3));
        Complex fx = eval(f, x);
        record(1, std::abs(eval(f, y) - fx), std::string("Q^vee ") + pick(k));
        record(1, std::abs(eval(f, reflect_r0(rs, x)) - fx), std::string("r0 ") + pick(k));
    }
    for (int k = 0; k < 200; ++k) {
        RootSystem rs = parse_root_system(pick(k));
        Weight l = support::random_dominant(rs.rank, 2);
        long c = support::uniform_int(2, 4);
        Weight cl = l;
        for (auto& v : cl) v *= c;
        auto x = random_point(rs.rank), cx = x;
        for (auto& v : cx) v *= static_cast<double>(c);
        record(2, std::abs(eval(make_orbit_function(rs, cl), x) - eval(make_orbit_function(rs, l), cx)),
               std::string("scaling ") + pick(k));
    }
    for (int k = 0; k < 200; ++k) {
        RootSystem rs = parse_root_system(pick(k));
        Weight l = support::random_dominant(rs.rank, 3);
        OrbitFunction f = make_orbit_function(rs, l, true);
        Vec b(rs.rank);
        for (auto& v : b) v = frac(support::uniform_int(-12, 12), support::uniform_int(1, 6));
        // pick some points on walls so that |W_x| > 1 is exercised
        if (k % 3 == 0) b[0] = 0;
        auto bd = to_double(b);
        Complex hat = eval(f, bd);
        record(3, std::abs(weyl_double_sum(rs, l, bd) - hat), std::string("double sum ") + pick(k));
        record(3, std::abs(modified_eval_dual(rs, b, l) - hat), std::string("dual ") + pick(k));
    }
    const char* real_types[] = {"A1", "A2", "A3", "A4", "B3", "C3", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};
    for (int k = 0; k < 200; ++k) {
        const char* ty = real_types[k % (sizeof real_types / sizeof real_types[0])];
        RootSystem rs = parse_root_system(ty);
        Weight l = support::random_dominant(rs.rank, 2);
        Realness r = realness_class(rs, l);
        char s = rs.factors[0].series;
        int n = rs.rank;
        Weight partner = l;
        if (s == 'A') partner.assign(l.rbegin(), l.rend());
        if (s == 'D' && n % 2 == 1) std::swap(partner[n - 2], partner[n - 1]);
        if (s == 'E' && n == 6) partner = {l[4], l[3], l[2], l[1], l[0], l[5]};
        RealnessKind kind = partner == l ? RealnessKind::Real : RealnessKind::ConjugatePair;
        if (r.kind != kind || r.partner != partner) out.fail(std::string("realness class ") + ty + " " + str(l));
        if (n <= 5) {
            OrbitFunction f = make_orbit_function(rs, l), g = make_orbit_function(rs, partner);
            auto x = random_point(n);
            record(4, std::abs(eval(f, x) - std::conj(eval(g, x))), std::string("conjugation ") + ty);
        }
    }
    out.detail << "200 cases each; worst W " << worst[0] << ", W^aff " << worst[1] << ", scaling " << worst[2]
               << ", duality " << worst[3] << ", conjugation " << worst[4] << " (tol 1e-10)";
    return out;
}

// ---------------------------------------------------------------- criterion 10

Outcome criterion10() {
    Outcome out;
    double worst = 0;
    for (int n : {2, 3}) {
        for (int k = 0; k < 20; ++k) {
            std::vector<double> x(n + 1);
            double mean = 0;
            for (auto& v : x) mean += (v = support::uniform(-1, 1));
            for (auto& v : x) v -= mean / (n + 1);
            IdentityReport r = an_identity_suite(n, x, 6);
            worst = std::max(worst, r.max());
            if (!(r.max() < 1e-9)) out.fail("A" + std::to_string(n) + " residual " + std::to_string(r.max()));
        }
    }
    out.detail << "40 points, worst residual " << worst << " (tol 1e-9)";
    return out;
}

// ---------------------------------------------------------------- criterion 11

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Outcome criterion11() {
    Outcome out;
    std::vector<std::pair<std::string, Integer>> want;
    for (int n = 1; n <= 8; ++n) want.push_back({"A" + std::to_string(n), factorial(n + 1)});
    for (int n = 2; n <= 8; ++n) {
        Integer two = Integer(1) << n;
        want.push_back({"B" + std::to_string(n), two * factorial(n)});
        want.push_back({"C" + std::to_string(n), two * factorial(n)});
    }
    for (int n = 4; n <= 8; ++n) want.push_back({"D" + std::to_string(n), (Integer(1) << (n - 1)) * factorial(n)});
    const std::pair<const char*, long> printed[] = {{"E6", 51840},  {"E7", 2903040}, {"E8", 696729600}, {"F4", 1152},
                                                    {"G2", 12},     {"A2", 6},       {"C2", 8},         {"A3", 24},
                                                    {"C3", 48}};
    for (const auto& [ty, v] : printed) want.push_back({ty, Integer(v)});
    for (const auto& [ty, v] : want) {
        RootSystem rs = parse_root_system(ty);
        if (weyl_order(rs) != v || rs.weyl_order != v) out.fail(ty + " order " + weyl_order(rs).get_str());
        if (weyl_order_of(rs.factors[0].series, rs.rank) != v) out.fail(ty + " closed form");
    }
    const char* types[] = {"A2", "C2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"};
    for (int k = 0; k < 50; ++k) {
        const char* ty = types[k % (sizeof types / sizeof types[0])];
        RootSystem rs = parse_root_system(ty);
        Weight l = support::random_dominant(rs.rank, 2);
        if (k % 4 == 0) l[support::uniform_int(0, rs.rank - 1)] = 0;
        Orbit o = orbit(rs, l);
        if (orbit_size(rs, l) != Integer(static_cast<long>(o.points.size())))
            out.fail(std::string(ty) + " " + str(l) + ": parabolic " + orbit_size(rs, l).get_str() +
                     " vs enumerated " + std::to_string(o.points.size()));
    }
    out.detail << want.size() << " group orders; 50 orbit sizes parabolic vs enumerated";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using Fn = Outcome (*)();
    const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                           criterion7, criterion8, criterion9, criterion10, criterion11};
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--corrected") == 0) {
            g_corrected = true;
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N] [--corrected]\n");
            return 1;
        }
    }
    if (only < 0 || only > 11) {
        std::fprintf(stderr, "criterion must be in 1..11\n");
        return 1;
    }
    bool all = true;
    for (int k = 1; k <= 11; ++k) {
        if (only && k != only) continue;
        Outcome o;
        try {
            o = criteria[k - 1]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s (%s)\n", k, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
        for (const auto& f : o.failures) std::printf("  - %s\n", f.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
