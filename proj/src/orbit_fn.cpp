#include "orbitfn/orbit_fn.hpp"

#include "orbitfn/affine.hpp"
#include "orbitfn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orbitfn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Compensated sum of complex terms.
struct KahanComplex {
    double re = 0, im = 0, cre = 0, cim = 0;
    void add(double x, double& sum, double& c) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    void add(Complex z) {
        add(z.real(), re, cre);
        add(z.imag(), im, cim);
    }
    Complex value() const { return {re, im}; }
};

Complex expi(double turns) {
    double t = turns - std::floor(turns);
    return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)};
}

double dotd(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

OrbitFunction make_orbit_function(const RootSystem& rs, const Weight& lambda, bool modified,
                                  std::size_t cap) {
    check_length(rs, lambda);
    if (!is_dominant(lambda)) throw NotDominant("weight " + to_string(lambda) + " is not dominant");
    OrbitFunction f{rs, lambda, orbit(rs, lambda, cap), {}, modified};
    f.points_d.reserve(f.orbit.points.size());
    for (const auto& p : f.orbit.points) f.points_d.push_back(to_double(p));
    return f;
}

Complex eval(const OrbitFunction& f, const std::vector<double>& b) {
    if (static_cast<int>(b.size()) != f.rs.rank)
        throw MismatchedSystem("point has " + std::to_string(b.size()) + " coordinates, expected " +
                               std::to_string(f.rs.rank));
    KahanComplex s;
    for (const auto& mu : f.points_d) s.add(expi(dotd(mu, b)));
    return s.value() * f.scale();
}

Complex eval(const OrbitFunction& f, const Point& x) {
    if (x.exact && is_integral(f.lambda)) return eval_exact(f, x.b).to_complex();
    return eval(f, x.as_double());
}

Cyclotomic eval_exact(const OrbitFunction& f, const Vec& b) {
    check_length(f.rs, b);
    Integer d = common_denominator(b);
    if (!d.fits_slong_p()) throw DomainError("denominator of point too large");
    return eval_exact(f, b, d.get_si());
}

Cyclotomic eval_exact(const OrbitFunction& f, const Vec& b, long order) {
    check_length(f.rs, b);
    if (!is_integral(f.lambda)) throw NotIntegral("exact evaluation needs an integral weight");
    if (order < 1 || Integer(order) % common_denominator(b) != 0)
        throw DomainError("order " + std::to_string(order) + " incompatible with point denominators");
    std::vector<Rational> counts(order, 0);
    for (const auto& mu : f.orbit.points) {
        Rational e = dot(mu, b) * order;
        if (!is_integer(e)) throw DomainError("exponent not a multiple of 1/" + std::to_string(order));
        Integer k = e.get_num() % order;
        if (k < 0) k += order;
        counts[k.get_si()] += 1;
    }
    Cyclotomic z = Cyclotomic::from_residues(order, counts);
    if (f.modified) z = z * Rational(f.orbit.stabilizer_order);
    return z;
}

Realness realness_class(const RootSystem& rs, const Weight& lambda) {
    check_length(rs, lambda);
    if (!is_dominant(lambda)) throw NotDominant("weight " + to_string(lambda) + " is not dominant");
    Weight neg = lambda;
    for (auto& v : neg) v = -v;
    Weight partner = dominant_representative(rs, neg).dominant;
    if (partner == lambda) return {RealnessKind::Real, lambda};
    return {RealnessKind::ConjugatePair, partner};
}

LaplaceEigenvalue laplace_eigenvalue(const RootSystem& rs, const Weight& lambda) {
    Rational c = -2 * inner_product(rs, lambda, lambda);
    return {c, c.get_d() * std::numbers::pi * std::numbers::pi};
}

Mat laplace_operator(const RootSystem& rs) {
    Mat k(rs.rank, Vec(rs.rank, 0));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) k[i][j] = Rational(rs.cartan[i][j]) / rs.lengths_sq[i];
    return k;
}

std::vector<double> theta_to_coroot(const RootSystem& rs, const std::vector<double>& theta) {
    std::vector<double> b(rs.rank, 0.0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) b[i] += rs.gram[i][j].get_d() * theta[j];
    return b;
}

Complex laplace_apply_fd(const OrbitFunction& f, const std::vector<double>& theta, double h) {
    if (!(h > 0)) throw DomainError("step must be positive");
    const int n = f.rs.rank;
    Mat k = laplace_operator(f.rs);
    auto at = [&](int i, double si, int j, double sj) {
        std::vector<double> t = theta;
        if (i >= 0) t[i] += si * h;
        if (j >= 0) t[j] += sj * h;
        return eval(f, theta_to_coroot(f.rs, t));
    };
    Complex f0 = at(-1, 0, -1, 0);
    // Second-order stencils at steps h and 2h, combined by Richardson extrapolation.
    auto stencil = [&](double s) {
        Complex out = 0;
        for (int i = 0; i < n; ++i) {
            Complex d2 = (at(i, s, -1, 0) - 2.0 * f0 + at(i, -s, -1, 0)) / (s * s * h * h);
            out += k[i][i].get_d() * d2;
            for (int j = i + 1; j < n; ++j) {
                if (k[i][j] == 0) continue;
                Complex mixed =
                    (at(i, s, j, s) - at(i, s, j, -s) - at(i, -s, j, s) + at(i, -s, j, -s)) / (4 * s * s * h * h);
                out += 2 * k[i][j].get_d() * mixed;
            }
        }
        return out;
    };
    return (4.0 * stencil(1) - stencil(2)) / 3.0;
}

double coroot_norm(const RootSystem& rs, const std::vector<double>& v) {
    // <a_i^vee, a_j^vee> = 2 M_ij / <a_i, a_i>.
    double s = 0;
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            s += 2.0 * rs.cartan[i][j] / rs.lengths_sq[i].get_d() * v[i] * v[j];
    return std::sqrt(s);
}

Complex normal_derivative(const OrbitFunction& f, const std::vector<double>& b, int wall, double h) {
    const RootSystem& rs = f.rs;
    if (!rs.is_simple()) throw UnsupportedType("normal derivative needs a simple system");
    if (wall < 0 || wall > rs.rank) throw IndexOutOfRange("wall index " + std::to_string(wall));
    std::vector<double> n(rs.rank, 0.0);
    if (wall < rs.rank) {
        n[wall] = 1.0;
    } else {
        for (int i = 0; i < rs.rank; ++i) n[i] = -static_cast<double>(rs.comarks[i]);
    }
    double len = coroot_norm(rs, n);
    for (auto& v : n) v /= len;
    auto step = [&](double t) {
        std::vector<double> p = b;
        for (int i = 0; i < rs.rank; ++i) p[i] += t * n[i];
        return eval(f, p);
    };
    return (-3.0 * step(0) + 4.0 * step(h) - step(2 * h)) / (2 * h);
}

std::pair<Complex, Complex> dy_eigencheck(const OrbitFunction& f, const std::vector<double>& y,
                                          const std::vector<double>& x, std::size_t cap) {
    auto group = weyl_group_elements(f.rs, cap);
    KahanComplex lhs;
    for (const auto& g : group) {
        std::vector<double> p = act_on_point(g, x);
        for (int i = 0; i < f.rs.rank; ++i) p[i] += y[i];
        lhs.add(eval(f, p));
    }
    Complex rhs = f.orbit.stabilizer_order.get_d() * eval(f, y) * eval(f, x);
    return {lhs.value(), rhs};
}

Complex weyl_double_sum(const RootSystem& rs, const Weight& lambda, const std::vector<double>& b,
                        std::size_t cap) {
    check_length(rs, lambda);
    std::vector<double> l = to_double(lambda);
    KahanComplex s;
    for (const auto& g : weyl_group_elements(rs, cap)) s.add(expi(dotd(l, act_on_point(g, b))));
    return s.value();
}

Complex modified_eval_dual(const RootSystem& rs, const Vec& b, const Weight& lambda) {
    check_length(rs, lambda);
    std::vector<double> l = to_double(lambda);
    KahanComplex s;
    for (const auto& y : point_orbit(rs, b)) s.add(expi(dotd(l, to_double(y))));
    return s.value() * point_stabilizer_order(rs, b).get_d();
}

std::vector<std::vector<long>> monomial_exponents(const RootSystem& rs, const Weight& lambda) {
    Vec m = to_orthogonal(rs, lambda);
    if (rs.factors[0].series == 'A') {
        Rational low = *std::min_element(m.begin(), m.end());
        for (auto& v : m) v -= low;
    }
    if (!is_integral(m)) throw DomainError("orthogonal exponents of " + to_string(lambda) + " are not integral");
    std::vector<std::vector<long>> out;
    for (const auto& p : orthogonal_orbit(rs, m)) {
        std::vector<long> e;
        for (const auto& v : p) e.push_back(v.get_num().get_si());
        out.push_back(std::move(e));
    }
    return out;
}

Complex monomial_eval(const RootSystem& rs, const Weight& lambda, const std::vector<Complex>& y) {
    auto exps = monomial_exponents(rs, lambda);
    KahanComplex s;
    for (const auto& e : exps) {
        if (e.size() != y.size())
            throw MismatchedSystem("expected " + std::to_string(e.size()) + " variables");
        Complex term = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (y[i] == Complex(0) && e[i] < 0) throw DomainError("negative power of a zero variable");
            term *= std::pow(y[i], static_cast<int>(e[i]));
        }
        s.add(term);
    }
    return s.value();
}

double IdentityReport::max() const {
    return std::max({generating, complete_generating, alternating, newton_complete, newton_elementary,
                     determinant});
}

std::vector<double> an_orthogonal_to_coroot(const std::vector<double>& x) {
    std::vector<double> b;
    double s = 0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        s += x[j];
        b.push_back(s);
    }
    return b;
}

namespace {

void partitions(int r, int max_part, int max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (r == 0) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(r, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(r - p, p, max_len, cur, out);
        cur.pop_back();
    }
}

double residual(Complex a, Complex b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

Complex det(std::vector<std::vector<Complex>> a) {
    const std::size_t n = a.size();
    Complex d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) == 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Complex m = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
        }
    }
    return d;
}

}  // namespace

IdentityReport an_identity_suite(int n, const std::vector<double>& x_orth, int s_max) {
    RootSystem rs = build_root_system('A', n);
    if (static_cast<int>(x_orth.size()) != n + 1)
        throw MismatchedSystem("A" + std::to_string(n) + " needs " + std::to_string(n + 1) + " coordinates");
    std::vector<double> b = an_orthogonal_to_coroot(x_orth);
    auto phi_orth = [&](std::vector<int> m) {
        m.resize(n + 1, 0);
        Vec mv;
        for (int v : m) mv.push_back(v);
        return eval(make_orbit_function(rs, from_orthogonal(rs, mv)), b);
    };
    const int top = std::max(s_max, n + 1);
    std::vector<Complex> e(top + 1, 0), p(top + 1, 0), h(top + 1, 0);
    for (int r = 0; r <= top; ++r) {
        if (r <= n + 1) e[r] = phi_orth(std::vector<int>(r, 1));
        if (r >= 1) p[r] = phi_orth({r});
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(r, r, n + 1, cur, parts);
        for (const auto& part : parts) h[r] += phi_orth(part);
    }

    std::vector<Complex> y;
    for (double v : x_orth) y.push_back(expi(v));
    std::vector<Complex> ecoef(n + 2, 0), hcoef(top + 1, 0);
    ecoef[0] = 1;
    for (int k = 0; k <= n; ++k)
        for (int r = k + 1; r >= 1; --r) ecoef[r] += y[k] * ecoef[r - 1];
    hcoef[0] = 1;
    for (int k = 0; k <= n; ++k)
        for (int r = 1; r <= top; ++r) hcoef[r] += y[k] * hcoef[r - 1];

    IdentityReport rep;
    for (int r = 0; r <= n + 1; ++r) rep.generating = std::max(rep.generating, residual(ecoef[r], e[r]));
    for (int r = 0; r <= top; ++r)
        rep.complete_generating = std::max(rep.complete_generating, residual(hcoef[r], h[r]));
    for (int s = 1; s <= s_max; ++s) {
        Complex alt = 0, nc = 0, ne = 0;
        for (int r = 0; r <= s; ++r) alt += (r % 2 ? -1.0 : 1.0) * e[r] * h[s - r];
        for (int r = 1; r <= s; ++r) {
            nc += p[r] * h[s - r];
            ne += (r % 2 ? 1.0 : -1.0) * p[r] * e[s - r];
        }
        rep.alternating = std::max(rep.alternating, residual(alt, 0));
        rep.newton_complete = std::max(rep.newton_complete, residual(double(s) * h[s], nc));
        rep.newton_elementary = std::max(rep.newton_elementary, residual(double(s) * e[s], ne));
    }
    for (int r = 1; r <= std::min(4, s_max); ++r) {
        std::vector<std::vector<Complex>> m(r, std::vector<Complex>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                int k = 1 - i + j;  // 0-based i, j: index 1 - (i+1) + (j+1)
                m[i][j] = (k >= 0 && k <= top) ? e[k] : Complex(0);
            }
        rep.determinant = std::max(rep.determinant, residual(det(m), h[r]));
    }
    return rep;
}

}  // namespace orbitfn
