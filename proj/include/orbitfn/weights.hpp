#pragma once

#include "orbitfn/rational.hpp"
#include "orbitfn/root_system.hpp"

#include <vector>

namespace orbitfn {

/// Weight in omega-coordinates: lambda = sum a_i w_i.
using Weight = Vec;

/// Point x = sum b_i a_i^vee; exact coordinates, or doubles when !exact.
struct Point {
    Vec b;
    std::vector<double> bd;
    bool exact = true;

    static Point exact_point(Vec coords);
    static Point float_point(std::vector<double> coords);
    std::vector<double> as_double() const;
};

/// sum a_i b_i; throws MismatchedSystem on length mismatch.
Rational pairing(const RootSystem& rs, const Weight& lambda, const Vec& b);
double pairing(const RootSystem& rs, const Weight& lambda, const std::vector<double>& b);
/// lambda S mu^T.
Rational inner_product(const RootSystem& rs, const Weight& lambda, const Weight& mu);

void check_length(const RootSystem& rs, const Vec& v);

/// Orthogonal coordinates for simple A/B/C/D; A_n returns n+1 entries summing to 0.
Vec to_orthogonal(const RootSystem& rs, const Weight& lambda);
/// Inverse map; A_n accepts any constant shift.
Weight from_orthogonal(const RootSystem& rs, const Vec& m);

bool is_dominant(const Weight& lambda);
bool is_strictly_dominant(const Weight& lambda);

/// omega-coordinates -> alpha^vee-coordinates (b = S a).
Vec weight_to_coroot(const RootSystem& rs, const Weight& lambda);
/// omega^vee-coordinates -> alpha^vee-coordinates (b = M^-1 c).
Vec coweight_to_coroot(const RootSystem& rs, const Vec& c);
/// alpha^vee-coordinates -> omega^vee-coordinates, c_j = <x, a_j>.
Vec coroot_to_coweight(const RootSystem& rs, const Vec& b);
std::vector<double> coroot_to_coweight(const RootSystem& rs, const std::vector<double>& b);
/// omega-coordinates -> alpha-coordinates (lambda = sum r_i a_i).
Vec weight_to_root(const RootSystem& rs, const Weight& lambda);
/// Sum of alpha-coordinates; strictly increases along the dominance order.
Rational height(const RootSystem& rs, const Weight& lambda);

}  // namespace orbitfn
