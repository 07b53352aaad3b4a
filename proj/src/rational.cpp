#include "orbitfn/rational.hpp"

#include "orbitfn/errors.hpp"

#include <cctype>
#include <sstream>

namespace orbitfn {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s) {
    if (!valid_integer(s)) throw ParseError("not a number: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational frac(long p, long q) {
    if (q == 0) throw DomainError("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer p = parse_integer(trim(s.substr(0, slash)));
        Integer q = parse_integer(trim(s.substr(slash + 1)));
        if (q == 0) throw ParseError("zero denominator: '" + s + "'");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        if (fp.empty() || !valid_integer(fp) || fp[0] == '-' || fp[0] == '+')
            throw ParseError("not a number: '" + s + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Integer whole = parse_integer(ip);
        Integer frac(fp);
        Rational r(neg ? Integer(whole * scale - frac) : Integer(whole * scale + frac), scale);
        r.canonicalize();
        return r;
    }
    return Rational(parse_integer(s));
}

Vec parse_vec(const std::string& s) {
    Vec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("empty coordinate list");
    return out;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out;
}

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_integral(const Vec& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

Integer common_denominator(const Vec& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Mat identity(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Mat multiply(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat c(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

Vec matvec(const Mat& a, const Vec& v) {
    Vec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0) out[i] += a[i][j] * v[j];
    return out;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Mat inverse(const Mat& a) {
    std::size_t n = a.size();
    Mat m = a, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw DomainError("singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational pivot = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= pivot;
            inv[c][j] /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Rational determinant(Mat m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

std::vector<double> to_double(const Vec& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_d());
    return out;
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& x : v) {
        std::size_t a = static_cast<std::size_t>(mpz_get_si(x.get_num_mpz_t()));
        std::size_t b = static_cast<std::size_t>(mpz_get_ui(x.get_den_mpz_t()));
        h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace orbitfn
