#pragma once

#include "orbitfn/rational.hpp"

#include <cctype>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace support {

using orbitfn::Rational;
using orbitfn::Vec;

/// Values of the symbols a, b, c in a linear form.
struct Symbols {
    long a = 0, b = 0, c = 0;
};

/// Evaluates forms like "a+2b-c", "-3a", "0".
inline long eval_linear(const std::string& form, const Symbols& s) {
    long total = 0;
    std::size_t i = 0;
    bool any = false;
    while (i < form.size()) {
        int sign = 1;
        if (form[i] == '+' || form[i] == '-') {
            sign = form[i] == '-' ? -1 : 1;
            ++i;
        }
        long coef = 0;
        bool digits = false;
        while (i < form.size() && std::isdigit(static_cast<unsigned char>(form[i]))) {
            coef = coef * 10 + (form[i] - '0');
            digits = true;
            ++i;
        }
        long value = 1;
        if (i < form.size() && std::isalpha(static_cast<unsigned char>(form[i]))) {
            switch (form[i]) {
                case 'a': value = s.a; break;
                case 'b': value = s.b; break;
                case 'c': value = s.c; break;
                default: throw std::invalid_argument("unknown symbol in " + form);
            }
            ++i;
            if (!digits) coef = 1;
        } else if (!digits) {
            throw std::invalid_argument("bad linear form " + form);
        }
        total += sign * coef * value;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty linear form");
    return total;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t lo = s.find_first_not_of(" \t\n"), hi = s.find_last_not_of(" \t\n");
    return lo == std::string::npos ? std::string() : s.substr(lo, hi - lo + 1);
}

/// Space-separated linear forms -> integer vector.
inline Vec eval_point(const std::string& coords, const Symbols& s) {
    std::istringstream in(coords);
    std::string tok;
    Vec v;
    while (in >> tok) v.push_back(Rational(eval_linear(tok, s)));
    return v;
}

/// Chains like "a<b<2a" or "2b>a>b"; empty means no constraint.
inline bool constraint_holds(const std::string& chain, const Symbols& s) {
    if (chain.empty()) return true;
    std::vector<std::string> parts;
    std::vector<char> ops;
    std::string cur;
    for (char ch : chain) {
        if (ch == '<' || ch == '>') {
            parts.push_back(cur);
            ops.push_back(ch);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        long l = eval_linear(parts[i], s), r = eval_linear(parts[i + 1], s);
        if (ops[i] == '<' ? !(l < r) : !(l > r)) return false;
    }
    return true;
}

struct TableRow {
    long M = 0, N = 0;
    std::vector<int> kac;
    Vec fractions;  ///< empty when the table has no fraction column
};

inline std::vector<TableRow> parse_table(const char* text) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        TableRow r;
        std::string kac, frac;
        ls >> r.M >> r.N >> kac >> frac;
        for (const auto& k : split(kac, ',')) r.kac.push_back(std::stoi(k));
        if (!frac.empty()) r.fractions = orbitfn::parse_vec(frac);
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Fixed-seed generator so failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }
inline long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random dominant integral weight with coordinates in [0, hi].
inline Vec random_dominant(int rank, long hi) {
    Vec v;
    for (int i = 0; i < rank; ++i) v.push_back(Rational(uniform_int(0, hi)));
    return v;
}

}  // namespace support
