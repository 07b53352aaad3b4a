#pragma once

#include "orbitfn/rational.hpp"
#include "orbitfn/root_system.hpp"
#include "orbitfn/weights.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace orbitfn {

/// r_0 y = y + (1 - <y,xi>) xi^vee for the given simple factor (alpha^vee-coordinates).
Vec reflect_r0(const RootSystem& rs, const Vec& b, int factor = 0);
std::vector<double> reflect_r0(const RootSystem& rs, const std::vector<double>& b, int factor = 0);

/// <x, xi> for one factor.
Rational xi_pairing(const RootSystem& rs, const Vec& b, int factor = 0);

bool in_fundamental_domain(const RootSystem& rs, const Vec& b);

template <class V>
struct Reduced {
    V point;
    long steps = 0;
};
/// Translation into [0,1)^n, then simple reflections (most negative first) and r_0 until in F.
Reduced<Vec> reduce_to_fundamental(const RootSystem& rs, const Vec& b);
Reduced<std::vector<double>> reduce_to_fundamental(const RootSystem& rs, const std::vector<double>& b);

/// {0, w^vee_1/m_1, ..., w^vee_n/m_n} in alpha^vee-coordinates; simple systems only.
std::vector<Vec> fundamental_vertices(const RootSystem& rs);

struct GridPoint {
    std::vector<int> kac;  ///< [s_0, ..., s_n]; per factor, concatenated, for products
    int level = 1;
    Vec point;  ///< alpha^vee-coordinates
};
/// All kac coordinates with s_0 + sum s_i m_i = M, lexicographic.
std::vector<GridPoint> grid_FM(const RootSystem& rs, int M);
GridPoint grid_point(const RootSystem& rs, const std::vector<int>& kac);

/// Representatives d/m of (1/m)Q^vee/Q^vee, d in [0,m)^n, lexicographic.
std::vector<Vec> lattice_Tm(const RootSystem& rs, int m, std::size_t cap = 10'000'000);

struct ElementOrders {
    Integer M;  ///< least k with kx in P^vee
    Integer N;  ///< least k with kx in Q^vee
};
ElementOrders element_orders(const RootSystem& rs, const Vec& b);

/// reduce(kx) == x for every k coprime to the full order N.
bool is_rational_element(const RootSystem& rs, const Vec& b);

struct RationalElement {
    GridPoint grid;
    Integer M;
    Integer N;
    /// "(s_1/M,...,s_n/M)"
    std::string fractions() const;
};
/// Rational elements with primitive kac coordinates and M <= M_max, sorted by (M, kac).
std::vector<RationalElement> rational_elements(const RootSystem& rs, int M_max);

}  // namespace orbitfn
