#pragma once

#include "orbitfn/rational.hpp"
#include "orbitfn/root_system.hpp"
#include "orbitfn/weights.hpp"

#include <cstddef>
#include <vector>

namespace orbitfn {

constexpr std::size_t kDefaultCap = 10'000'000;

struct Orbit {
    Weight dominant;
    std::vector<Weight> points;  ///< empty unless enumerated
    Integer size;
    Integer stabilizer_order;
    bool enumerated = false;
};

/// (r_i lambda)_j = lambda_j - lambda_i M_ij, i 0-based.
Weight reflect_simple(const RootSystem& rs, int i, const Weight& lambda);
/// Reflection of a point in alpha^vee-coordinates: b_i -= <x, a_i>.
Vec reflect_point(const RootSystem& rs, int i, const Vec& b);
std::vector<double> reflect_point(const RootSystem& rs, int i, const std::vector<double>& b);

struct DominantResult {
    Weight dominant;
    int parity = 1;
    std::vector<int> word;  ///< reflections applied in order, 0-based
};
/// Repeatedly reflects in the lowest-index negative coordinate.
DominantResult dominant_representative(const RootSystem& rs, const Weight& lambda);

/// Order of the parabolic subgroup generated by r_i for i in nodes.
Integer parabolic_order(const RootSystem& rs, const std::vector<int>& nodes);
Integer stabilizer_order(const RootSystem& rs, const Weight& dominant);
Integer orbit_size(const RootSystem& rs, const Weight& dominant);

/// Breadth-first closure of a dominant weight; layers sorted lexicographically.
Orbit orbit(const RootSystem& rs, const Weight& lambda, std::size_t cap = kDefaultCap);
/// Orbit of a point under W acting on alpha^vee-coordinates, same ordering rules.
std::vector<Vec> point_orbit(const RootSystem& rs, const Vec& b, std::size_t cap = kDefaultCap);
/// Stabilizer order of a point, from its dominant (antidominant-free) image.
Integer point_stabilizer_order(const RootSystem& rs, const Vec& b);

/// Signed permutations for A/B/C/D in orthogonal coordinates (distinct, sorted).
std::vector<Vec> orthogonal_orbit(const RootSystem& rs, const Vec& m);

/// A Weyl group element by its actions on omega- and alpha^vee-coordinates.
struct GroupElement {
    std::vector<std::vector<int>> on_weights;
    std::vector<std::vector<int>> on_points;
    int parity = 1;
};
/// Every element of W; CapExceeded when |W| > cap.
std::vector<GroupElement> weyl_group_elements(const RootSystem& rs, std::size_t cap = 100000);
Weight act(const GroupElement& g, const Weight& lambda);
std::vector<double> act_on_point(const GroupElement& g, const std::vector<double>& b);

}  // namespace orbitfn
