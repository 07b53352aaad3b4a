#pragma once

#include "orbitfn/rational.hpp"
#include "orbitfn/root_system.hpp"
#include "orbitfn/weyl.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orbitfn {

/// Multiset of dominant weights of one system.
struct OrbitSum {
    std::vector<std::pair<Weight, long long>> terms;  ///< canonical order, see sort_terms

    long long multiplicity(const Weight& nu) const;
    bool operator==(const OrbitSum& o) const { return terms == o.terms; }
};

/// Descending height, then lexicographically descending.
void sort_terms(const RootSystem& rs, OrbitSum& s);
/// Builds a canonical OrbitSum, merging repeated weights.
OrbitSum make_orbit_sum(const RootSystem& rs, const std::vector<std::pair<Weight, long long>>& raw);
/// sum mult * |O(nu)|
Integer point_count(const RootSystem& rs, const OrbitSum& s);

/// Brute-force decomposition of O(lambda) x O(mu); CapExceeded if |O(lambda)||O(mu)| > cap.
OrbitSum product(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                 std::size_t cap = kDefaultCap);

enum class ProductClass { StrictAll, DominantAll, SeparatedGeneric, General };
const char* to_string(ProductClass c);
ProductClass product_fastpath_classify(const RootSystem& rs, const Weight& lambda, const Weight& mu);
/// Closed-form decomposition for a non-General class; throws DomainError for General.
OrbitSum product_fastpath(const RootSystem& rs, const Weight& lambda, const Weight& mu);

struct ProjectionMatrix {
    RootSystem source;
    RootSystem target;
    Mat matrix;  ///< target rank x source rank
};

/**
 * @brief Named projections.
 *
 * Explicit: C2->A1, G2->A1, C2->A1xA1, G2->A2, C4->A3, D5->C2xC2.
 * Generated: An->A(n-1), Bn->B(n-1), Cn->C(n-1), Dn->D(n-1) (first
 * orthogonal coordinate removed, last one for A), A(n-1)->A(p-1)xA(q-1),
 * Cn->A(p-1)xCq, Dn->A(p-1)xDq, and X->X.
 */
ProjectionMatrix builtin_projection(const std::string& pair);

/// Projects O(lambda) and groups by target dominant weights.
OrbitSum branch_restrict(const Weight& lambda, const ProjectionMatrix& proj,
                         std::size_t cap = kDefaultCap);

/// Equal-rank subsystem given by the alpha^vee-coordinates of its simple coroots.
struct Subsystem {
    RootSystem target;
    std::vector<Vec> coroots;
};
OrbitSum branch_equal_rank(const RootSystem& rs, const Weight& lambda, const Subsystem& sub);

struct Congruence {
    long value;
    long classes;
};
/// A1, A2, C2 and G2 only.
Congruence congruence_number(const RootSystem& rs, const Weight& lambda);

struct ConjectureReport {
    long products = 0;
    long conjecture1_checked = 0;
    long conjecture2_checked = 0;
    std::vector<std::string> counterexamples;
};
/// Checks both multiplicity-one conjectures on the given pairs.
ConjectureReport probe_conjectures(const RootSystem& rs,
                                   const std::vector<std::pair<Weight, Weight>>& pairs);

}  // namespace orbitfn
