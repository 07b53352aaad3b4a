#include "orbitfn/orbit_algebra.hpp"

#include "orbitfn/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace orbitfn {

long long OrbitSum::multiplicity(const Weight& nu) const {
    for (const auto& [w, k] : terms)
        if (w == nu) return k;
    return 0;
}

void sort_terms(const RootSystem& rs, OrbitSum& s) {
    std::vector<std::pair<Rational, std::size_t>> keys;
    for (std::size_t i = 0; i < s.terms.size(); ++i) keys.emplace_back(height(rs, s.terms[i].first), i);
    std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return s.terms[x.second].first > s.terms[y.second].first;
    });
    std::vector<std::pair<Weight, long long>> out;
    for (const auto& k : keys) out.push_back(s.terms[k.second]);
    s.terms = std::move(out);
}

OrbitSum make_orbit_sum(const RootSystem& rs, const std::vector<std::pair<Weight, long long>>& raw) {
    std::map<Weight, long long> acc;
    for (const auto& [w, k] : raw) acc[w] += k;
    OrbitSum s;
    for (const auto& [w, k] : acc)
        if (k != 0) s.terms.emplace_back(w, k);
    sort_terms(rs, s);
    return s;
}

Integer point_count(const RootSystem& rs, const OrbitSum& s) {
    Integer total = 0;
    for (const auto& [w, k] : s.terms) total += orbit_size(rs, w) * Integer(static_cast<long>(k));
    return total;
}

namespace {

void require_dominant(const Weight& w) {
    if (!is_dominant(w)) throw NotDominant("weight " + to_string(w) + " is not dominant");
}

// Counts how often each target-dominant weight is hit; that count is its multiplicity.
OrbitSum group_dominant(const RootSystem& target, const std::unordered_map<Vec, long long, VecHash>& hits,
                        const Integer& expected) {
    std::vector<std::pair<Weight, long long>> raw(hits.begin(), hits.end());
    OrbitSum s = make_orbit_sum(target, raw);
    if (point_count(target, s) != expected)
        throw DomainError("point multiset is not a union of " + target.name() + " orbits");
    return s;
}

}  // namespace

OrbitSum product(const RootSystem& rs, const Weight& lambda, const Weight& mu, std::size_t cap) {
    check_length(rs, lambda);
    check_length(rs, mu);
    require_dominant(lambda);
    require_dominant(mu);
    Integer total = orbit_size(rs, lambda) * orbit_size(rs, mu);
    if (total > Integer(static_cast<unsigned long>(cap)))
        throw CapExceeded("product of " + total.get_str() + " points exceeds cap", total.get_str());
    Orbit a = orbit(rs, lambda, cap), b = orbit(rs, mu, cap);
    std::unordered_map<Vec, long long, VecHash> hits;
    Vec s(rs.rank);
    for (const auto& p : a.points)
        for (const auto& q : b.points) {
            bool dom = true;
            for (int i = 0; i < rs.rank && dom; ++i) {
                s[i] = p[i] + q[i];
                dom = s[i] >= 0;
            }
            if (dom) ++hits[s];
        }
    return group_dominant(rs, hits, total);
}

const char* to_string(ProductClass c) {
    switch (c) {
        case ProductClass::StrictAll: return "StrictAll";
        case ProductClass::DominantAll: return "DominantAll";
        case ProductClass::SeparatedGeneric: return "SeparatedGeneric";
        case ProductClass::General: return "General";
    }
    return "General";
}

ProductClass product_fastpath_classify(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    require_dominant(lambda);
    require_dominant(mu);
    Weight zero(rs.rank, 0);
    if (lambda == zero || mu == zero) return ProductClass::General;
    Orbit a = orbit(rs, lambda);
    bool strict = true, dom = true, regular = true;
    for (const auto& p : a.points) {
        Weight s = p;
        for (int i = 0; i < rs.rank; ++i) s[i] += mu[i];
        strict = strict && is_strictly_dominant(s);
        dom = dom && is_dominant(s);
        regular = regular && is_strictly_dominant(dominant_representative(rs, s).dominant);
    }
    if (strict) return ProductClass::StrictAll;
    if (dom) return ProductClass::DominantAll;
    if (regular && is_strictly_dominant(mu)) return ProductClass::SeparatedGeneric;
    return ProductClass::General;
}

OrbitSum product_fastpath(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    ProductClass c = product_fastpath_classify(rs, lambda, mu);
    if (c == ProductClass::General) throw DomainError("no closed form applies");
    std::vector<std::pair<Weight, long long>> raw;
    for (const auto& p : orbit(rs, lambda).points) {
        Weight s = p;
        for (int i = 0; i < rs.rank; ++i) s[i] += mu[i];
        if (c == ProductClass::StrictAll)
            raw.emplace_back(s, 1);
        else if (c == ProductClass::DominantAll)
            raw.emplace_back(s, stabilizer_order(rs, s).get_si());
        else
            raw.emplace_back(dominant_representative(rs, s).dominant, 1);
    }
    return make_orbit_sum(rs, raw);
}

namespace {

Mat int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    Mat m;
    for (auto r : rows) m.push_back(ints(r));
    return m;
}

// Rows pick source coordinates; -1 marks nothing (not used).
Mat selection(int source_rank, const std::vector<int>& picks) {
    Mat m(picks.size(), Vec(source_rank, 0));
    for (std::size_t r = 0; r < picks.size(); ++r) m[r][picks[r]] = 1;
    return m;
}

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

}  // namespace

ProjectionMatrix builtin_projection(const std::string& pair_raw) {
    std::string pair = strip(pair_raw);
    auto arrow = pair.find("->");
    if (arrow == std::string::npos) throw UnknownPair("expected 'X->Y', got '" + pair_raw + "'");
    std::string src = pair.substr(0, arrow), dst = pair.substr(arrow + 2);
    RootSystem s, t;
    try {
        s = parse_root_system(src);
        t = parse_root_system(dst);
    } catch (const Error& e) {
        throw UnknownPair("unknown pair '" + pair_raw + "': " + e.what());
    }
    ProjectionMatrix p{s, t, {}};
    std::string key = s.name() + "->" + t.name();
    if (key == "C2->A1") p.matrix = int_matrix({{3, 4}});
    else if (key == "G2->A1") p.matrix = int_matrix({{10, 6}});
    else if (key == "C2->A1xA1") p.matrix = int_matrix({{1, 1}, {0, 1}});
    else if (key == "G2->A2") p.matrix = int_matrix({{1, 1}, {1, 0}});
    else if (key == "C4->A3") p.matrix = int_matrix({{1, 1, 0, 0}, {0, 0, 1, 2}, {0, 1, 1, 0}});
    else if (key == "D5->C2xC2")
        p.matrix = int_matrix({{0, 0, 2, 1, 1}, {1, 1, 0, 0, 0}, {0, 0, 0, 1, 1}, {0, 1, 1, 0, 0}});
    if (!p.matrix.empty()) return p;
    if (!s.is_simple()) throw UnknownPair("unknown pair '" + pair_raw + "'");
    char ser = s.factors[0].series;
    int n = s.rank;
    if (s.name() == t.name()) {
        p.matrix = identity(n);
        return p;
    }
    if (t.is_simple() && t.rank == n - 1) {
        char tser = t.factors[0].series;
        std::vector<int> picks;
        if (ser == 'A' && tser == 'A') {
            for (int i = 0; i < n - 1; ++i) picks.push_back(i);
        } else if (ser == 'B' && n == 3 && t.factors[0].b2_alias) {
            picks = {2, 1};  // B2 stored as C2: the short node comes first
        } else if (ser == tser && (ser == 'B' || ser == 'C' || ser == 'D')) {
            for (int i = 1; i < n; ++i) picks.push_back(i);
        }
        if (!picks.empty()) {
            p.matrix = selection(n, picks);
            return p;
        }
    }
    if (t.factors.size() == 2 && t.rank == n - 1) {
        const auto& f1 = t.factors[0];
        const auto& f2 = t.factors[1];
        bool shape = f1.series == 'A' && !f1.b2_alias && !f2.b2_alias &&
                     ((ser == 'A' && f2.series == 'A') || (ser == 'C' && f2.series == 'C') ||
                      (ser == 'D' && f2.series == 'D'));
        if (shape) {
            int p_idx = f1.rank + 1;  // drop omega-coordinate p
            std::vector<int> picks;
            for (int i = 0; i < n; ++i)
                if (i != p_idx - 1) picks.push_back(i);
            p.matrix = selection(n, picks);
            return p;
        }
    }
    throw UnknownPair("unknown pair '" + pair_raw + "'");
}

OrbitSum branch_restrict(const Weight& lambda, const ProjectionMatrix& proj, std::size_t cap) {
    const RootSystem& s = proj.source;
    const RootSystem& t = proj.target;
    check_length(s, lambda);
    require_dominant(lambda);
    Orbit o = orbit(s, lambda, cap);
    std::unordered_map<Vec, long long, VecHash> hits;
    for (const auto& p : o.points) {
        Vec q = matvec(proj.matrix, p);
        if (is_dominant(q)) ++hits[q];
    }
    return group_dominant(t, hits, o.size);
}

OrbitSum branch_equal_rank(const RootSystem& rs, const Weight& lambda, const Subsystem& sub) {
    if (sub.target.rank != rs.rank || static_cast<int>(sub.coroots.size()) != rs.rank)
        throw DomainError("subsystem rank differs; use branch_restrict");
    if (!is_strictly_dominant(lambda))
        throw NotStrictlyDominant("weight " + to_string(lambda) + " lies on a wall");
    ProjectionMatrix p{rs, sub.target, sub.coroots};
    if (determinant(p.matrix) == 0) throw DomainError("coroots are linearly dependent");
    return branch_restrict(lambda, p);
}

Congruence congruence_number(const RootSystem& rs, const Weight& lambda) {
    check_length(rs, lambda);
    if (!is_integral(lambda)) throw NotIntegral("weight " + to_string(lambda) + " is not integral");
    auto mod = [](const Integer& x, long k) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), k);
        return r.get_si();
    };
    std::string name = rs.name();
    if (name == "A1") return {mod(lambda[0].get_num(), 2), 2};
    if (name == "A2") return {mod(2 * lambda[0].get_num() + lambda[1].get_num(), 3), 3};
    if (name == "C2") return {mod(lambda[0].get_num(), 2), 2};
    if (name == "G2") return {0, 1};
    throw UnsupportedType("congruence classes are tabulated only for A1, A2, C2, G2");
}

ConjectureReport probe_conjectures(const RootSystem& rs,
                                   const std::vector<std::pair<Weight, Weight>>& pairs) {
    ConjectureReport rep;
    Weight zero(rs.rank, 0);
    for (const auto& [lambda, mu] : pairs) {
        if (lambda == zero || mu == zero) continue;
        ++rep.products;
        OrbitSum prod = product(rs, lambda, mu);
        Orbit a = orbit(rs, lambda);
        std::vector<Weight> shifts;
        for (const auto& p : a.points) {
            Weight s = p;
            for (int i = 0; i < rs.rank; ++i) s[i] += mu[i];
            shifts.push_back(s);
        }
        if (is_strictly_dominant(mu)) {
            for (const auto& s : shifts) {
                if (!is_strictly_dominant(s)) continue;
                ++rep.conjecture1_checked;
                if (prod.multiplicity(s) != 1)
                    rep.counterexamples.push_back("conjecture 1: " + rs.name() + " (" + to_string(lambda) +
                                                  ")x(" + to_string(mu) + ") term " + to_string(s));
            }
        }
        bool hyp = true;
        for (const auto& s : shifts)
            for (int j = 0; j < rs.rank; ++j)
                if (mu[j] != 0 && s[j] <= 0) hyp = false;
        if (hyp) {
            ++rep.conjecture2_checked;
            std::vector<std::pair<Weight, long long>> raw;
            for (const auto& s : shifts) raw.emplace_back(dominant_representative(rs, s).dominant, 1);
            if (!(make_orbit_sum(rs, raw) == prod))
                rep.counterexamples.push_back("conjecture 2: " + rs.name() + " (" + to_string(lambda) +
                                              ")x(" + to_string(mu) + ")");
        }
    }
    return rep;
}

}  // namespace orbitfn
