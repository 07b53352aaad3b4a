#include "orbitfn/root_system.hpp"

#include "orbitfn/errors.hpp"

#include <cctype>
#include <utility>

namespace orbitfn {

namespace {

struct Diagram {
    Vec lengths;                                  // <a_i,a_i>
    std::vector<std::pair<int, int>> edges;       // 0-based
    std::vector<Rational> edge_products;          // <a_i,a_j> for each edge
    std::vector<int> marks;
};

void link(Diagram& d, int i, int j, const Rational& ip) {
    d.edges.emplace_back(i, j);
    d.edge_products.push_back(ip);
}

void chain(Diagram& d, int from, int to) {
    for (int i = from; i < to; ++i) link(d, i, i + 1, -1);
}

bool valid(char s, int n) {
    switch (s) {
        case 'A': return n >= 1;
        case 'B': return n >= 2;
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

Diagram diagram(char s, int n) {
    Diagram d;
    d.lengths.assign(n, 2);
    switch (s) {
        case 'A':
            chain(d, 0, n - 1);
            d.marks.assign(n, 1);
            break;
        case 'B':
            d.lengths[n - 1] = 1;
            chain(d, 0, n - 1);
            d.marks.assign(n, 2);
            d.marks[0] = 1;
            break;
        case 'C':
            for (int i = 0; i < n - 1; ++i) d.lengths[i] = 1;
            for (int i = 0; i < n - 2; ++i) link(d, i, i + 1, frac(-1, 2));
            link(d, n - 2, n - 1, -1);
            d.marks.assign(n, 2);
            d.marks[n - 1] = 1;
            break;
        case 'D':
            chain(d, 0, n - 2);
            link(d, n - 3, n - 1, -1);
            d.marks.assign(n, 2);
            d.marks[0] = d.marks[n - 2] = d.marks[n - 1] = 1;
            break;
        case 'E':
            if (n == 6) {
                chain(d, 0, 4);
                link(d, 2, 5, -1);
                d.marks = {1, 2, 3, 2, 1, 2};
            } else if (n == 7) {
                chain(d, 0, 5);
                link(d, 2, 6, -1);
                d.marks = {2, 3, 4, 3, 2, 1, 2};
            } else {
                chain(d, 0, 6);
                link(d, 4, 7, -1);
                d.marks = {2, 3, 4, 5, 6, 4, 2, 3};
            }
            break;
        case 'F':
            d.lengths = {2, 2, 1, 1};
            link(d, 0, 1, -1);
            link(d, 1, 2, -1);
            link(d, 2, 3, frac(-1, 2));
            d.marks = {2, 3, 4, 2};
            break;
        case 'G':
            d.lengths = {2, frac(2, 3)};
            link(d, 0, 1, -1);
            d.marks = {2, 3};
            break;
    }
    return d;
}

RootSystem simple_system(char s, int n, bool alias) {
    Diagram d = diagram(s, n);
    Mat ip(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) ip[i][i] = d.lengths[i];
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        auto [i, j] = d.edges[e];
        ip[i][j] = ip[j][i] = d.edge_products[e];
    }
    RootSystem rs;
    rs.factors.push_back({s, n, 0, alias});
    rs.rank = n;
    rs.cartan.assign(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Rational v = 2 * ip[j][k] / ip[k][k];
            rs.cartan[j][k] = static_cast<int>(v.get_num().get_si());
        }
    rs.cartan_inv = inverse(rs.cartan_rational());
    rs.lengths_sq = d.lengths;
    rs.gram = rs.cartan_inv;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.gram[i][j] *= d.lengths[j] / 2;
    rs.marks = d.marks;
    rs.comarks.resize(n);
    for (int i = 0; i < n; ++i) {
        Rational q = d.marks[i] * d.lengths[i] / 2;
        rs.comarks[i] = static_cast<int>(q.get_num().get_si());
    }
    Vec xi(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) xi[j] += d.marks[i] * rs.cartan[i][j];
    rs.highest_roots.push_back(xi);
    rs.weyl_order = weyl_order_of(s, n);
    return rs;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::string SimpleFactor::name() const { return std::string(1, series) + std::to_string(rank); }

std::string RootSystem::name() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        out += factors[i].name();
    }
    return out;
}

Mat RootSystem::cartan_rational() const {
    Mat m(rank, Vec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = cartan[i][j];
    return m;
}

Integer weyl_order_of(char s, int n) {
    switch (s) {
        case 'A': return factorial(n + 1);
        case 'B':
        case 'C': return (Integer(1) << n) * factorial(n);
        case 'D': return (Integer(1) << (n - 1)) * factorial(n);
        case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
        case 'F': return 1152;
        case 'G': return 12;
    }
    throw UnsupportedType(std::string(1, s) + std::to_string(n));
}

RootSystem build_root_system(char series, int rank) {
    series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
    if (!valid(series, rank))
        throw UnsupportedType("unsupported root system " + std::string(1, series) +
                              std::to_string(rank));
    if (series == 'B' && rank == 2) return simple_system('C', 2, true);
    return simple_system(series, rank, false);
}

RootSystem product_system(const std::vector<RootSystem>& parts) {
    if (parts.size() == 1) return parts[0];
    RootSystem rs;
    for (const auto& p : parts) rs.rank += p.rank;
    int n = rs.rank;
    rs.cartan.assign(n, std::vector<int>(n, 0));
    rs.cartan_inv.assign(n, Vec(n, 0));
    rs.gram.assign(n, Vec(n, 0));
    rs.weyl_order = 1;
    int off = 0;
    for (const auto& p : parts) {
        for (auto f : p.factors) {
            f.offset += off;
            rs.factors.push_back(f);
        }
        for (int i = 0; i < p.rank; ++i) {
            for (int j = 0; j < p.rank; ++j) {
                rs.cartan[off + i][off + j] = p.cartan[i][j];
                rs.cartan_inv[off + i][off + j] = p.cartan_inv[i][j];
                rs.gram[off + i][off + j] = p.gram[i][j];
            }
            rs.lengths_sq.push_back(p.lengths_sq[i]);
            rs.marks.push_back(p.marks[i]);
            rs.comarks.push_back(p.comarks[i]);
        }
        for (const auto& xi : p.highest_roots) {
            Vec full(n, 0);
            for (int i = 0; i < p.rank; ++i) full[off + i] = xi[i];
            rs.highest_roots.push_back(full);
        }
        rs.weyl_order *= p.weyl_order;
        off += p.rank;
    }
    return rs;
}

RootSystem parse_root_system(const std::string& spec) {
    std::vector<RootSystem> parts;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t x = spec.find_first_of("xX*", pos);
        std::string part = spec.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
        if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
            throw ParseError("bad root system '" + spec + "'");
        for (std::size_t i = 1; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])) || i > 3)
                throw ParseError("bad root system '" + spec + "'");
        parts.push_back(build_root_system(part[0], std::stoi(part.substr(1))));
        if (x == std::string::npos) break;
        pos = x + 1;
    }
    return product_system(parts);
}

const Mat& inverse_cartan(const RootSystem& rs) { return rs.cartan_inv; }

HighestRoot highest_root(const RootSystem& rs) {
    if (!rs.is_simple()) throw UnsupportedType("highest root of a product system " + rs.name());
    return {rs.marks, rs.comarks, rs.highest_roots[0]};
}

Integer weyl_order(const RootSystem& rs) { return rs.weyl_order; }

}  // namespace orbitfn
