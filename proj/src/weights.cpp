#include "orbitfn/weights.hpp"

#include "orbitfn/errors.hpp"

namespace orbitfn {

Point Point::exact_point(Vec coords) {
    Point p;
    p.b = std::move(coords);
    p.exact = true;
    return p;
}

Point Point::float_point(std::vector<double> coords) {
    Point p;
    p.bd = std::move(coords);
    p.exact = false;
    return p;
}

std::vector<double> Point::as_double() const { return exact ? to_double(b) : bd; }

void check_length(const RootSystem& rs, const Vec& v) {
    if (static_cast<int>(v.size()) != rs.rank)
        throw MismatchedSystem("expected " + std::to_string(rs.rank) + " coordinates for " +
                               rs.name() + ", got " + std::to_string(v.size()));
}

Rational pairing(const RootSystem& rs, const Weight& lambda, const Vec& b) {
    check_length(rs, lambda);
    check_length(rs, b);
    return dot(lambda, b);
}

double pairing(const RootSystem& rs, const Weight& lambda, const std::vector<double>& b) {
    check_length(rs, lambda);
    if (static_cast<int>(b.size()) != rs.rank) throw MismatchedSystem("point length mismatch");
    double s = 0;
    for (int i = 0; i < rs.rank; ++i) s += lambda[i].get_d() * b[i];
    return s;
}

Rational inner_product(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    check_length(rs, lambda);
    check_length(rs, mu);
    return dot(lambda, matvec(rs.gram, mu));
}

namespace {

char classical_series(const RootSystem& rs) {
    if (!rs.is_simple()) throw UnsupportedSeries("orthogonal coordinates need a simple system");
    char s = rs.factors[0].series;
    if (s != 'A' && s != 'B' && s != 'C' && s != 'D')
        throw UnsupportedSeries(std::string("no orthogonal coordinates for series ") + s);
    return s;
}

}  // namespace

Vec to_orthogonal(const RootSystem& rs, const Weight& lambda) {
    char s = classical_series(rs);
    check_length(rs, lambda);
    int n = rs.rank;
    if (s == 'A') {
        Vec m(n + 1, 0);
        for (int i = n - 1; i >= 0; --i) m[i] = m[i + 1] + lambda[i];
        Rational mean = 0;
        for (const auto& x : m) mean += x;
        mean /= n + 1;
        for (auto& x : m) x -= mean;
        return m;
    }
    Vec m(n, 0);
    if (s == 'B') {
        m[n - 1] = lambda[n - 1] / 2;
    } else if (s == 'C') {
        m[n - 1] = lambda[n - 1];
    } else {
        m[n - 1] = (lambda[n - 2] - lambda[n - 1]) / 2;
        m[n - 2] = (lambda[n - 2] + lambda[n - 1]) / 2;
    }
    for (int i = (s == 'D' ? n - 3 : n - 2); i >= 0; --i) m[i] = m[i + 1] + lambda[i];
    return m;
}

Weight from_orthogonal(const RootSystem& rs, const Vec& m) {
    char s = classical_series(rs);
    int n = rs.rank;
    std::size_t want = s == 'A' ? n + 1 : n;
    if (m.size() != want)
        throw MismatchedSystem("expected " + std::to_string(want) + " orthogonal coordinates");
    Weight l(n, 0);
    int last_diff = (s == 'D') ? n - 2 : n - 1;
    for (int i = 0; i < last_diff; ++i) l[i] = m[i] - m[i + 1];
    if (s == 'A') {
        l[n - 1] = m[n - 1] - m[n];
    } else if (s == 'B') {
        l[n - 1] = 2 * m[n - 1];
    } else if (s == 'C') {
        l[n - 1] = m[n - 1];
    } else {
        l[n - 2] = m[n - 2] + m[n - 1];
        l[n - 1] = m[n - 2] - m[n - 1];
    }
    return l;
}

bool is_dominant(const Weight& lambda) {
    for (const auto& x : lambda)
        if (x < 0) return false;
    return true;
}

bool is_strictly_dominant(const Weight& lambda) {
    for (const auto& x : lambda)
        if (x <= 0) return false;
    return true;
}

Vec weight_to_coroot(const RootSystem& rs, const Weight& lambda) {
    check_length(rs, lambda);
    return matvec(rs.gram, lambda);
}

Vec coweight_to_coroot(const RootSystem& rs, const Vec& c) {
    check_length(rs, c);
    return matvec(rs.cartan_inv, c);
}

Vec coroot_to_coweight(const RootSystem& rs, const Vec& b) {
    check_length(rs, b);
    return matvec(rs.cartan_rational(), b);
}

std::vector<double> coroot_to_coweight(const RootSystem& rs, const std::vector<double>& b) {
    std::vector<double> c(rs.rank, 0.0);
    for (int j = 0; j < rs.rank; ++j)
        for (int i = 0; i < rs.rank; ++i) c[j] += rs.cartan[j][i] * b[i];
    return c;
}

Vec weight_to_root(const RootSystem& rs, const Weight& lambda) {
    check_length(rs, lambda);
    return matvec(transpose(rs.cartan_inv), lambda);
}

Rational height(const RootSystem& rs, const Weight& lambda) {
    Rational h = 0;
    for (const auto& x : weight_to_root(rs, lambda)) h += x;
    return h;
}

}  // namespace orbitfn
