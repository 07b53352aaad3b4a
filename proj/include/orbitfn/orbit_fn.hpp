#pragma once

#include "orbitfn/cyclotomic.hpp"
#include "orbitfn/rational.hpp"
#include "orbitfn/root_system.hpp"
#include "orbitfn/weights.hpp"
#include "orbitfn/weyl.hpp"

#include <complex>
#include <vector>

namespace orbitfn {

using Complex = std::complex<double>;

/// phi_lambda(x) = sum over O(lambda) of exp(2 pi i <mu, x>); modified scales by |W_lambda|.
struct OrbitFunction {
    RootSystem rs;
    Weight lambda;
    Orbit orbit;
    std::vector<std::vector<double>> points_d;
    bool modified = false;

    double scale() const { return modified ? orbit.stabilizer_order.get_d() : 1.0; }
};

OrbitFunction make_orbit_function(const RootSystem& rs, const Weight& lambda, bool modified = false,
                                  std::size_t cap = kDefaultCap);

/// Compensated sum at a float point (alpha^vee-coordinates).
Complex eval(const OrbitFunction& f, const std::vector<double>& b);
/// Exact points go through eval_exact when lambda is integral.
Complex eval(const OrbitFunction& f, const Point& x);
/// Exact value in Q(zeta_D), D the common denominator of b; needs integral lambda.
Cyclotomic eval_exact(const OrbitFunction& f, const Vec& b);
/// Same as eval_exact but in Q(zeta_order); order must be a multiple of the denominator of b.
Cyclotomic eval_exact(const OrbitFunction& f, const Vec& b, long order);

enum class RealnessKind { Real, ConjugatePair };
struct Realness {
    RealnessKind kind;
    Weight partner;  ///< lambda itself when Real
};
Realness realness_class(const RootSystem& rs, const Weight& lambda);

struct LaplaceEigenvalue {
    Rational pi2;  ///< eigenvalue / pi^2
    double value;
};
/// Eigenvalue of the omega-basis operator: -2 pi^2 lambda S lambda^T.
LaplaceEigenvalue laplace_eigenvalue(const RootSystem& rs, const Weight& lambda);
/// K_ij = M_ij / <a_i, a_i>; the operator is sum K_ij d_i d_j in theta-coordinates.
Mat laplace_operator(const RootSystem& rs);
/// Point x = sum theta_k w_k in alpha^vee-coordinates.
std::vector<double> theta_to_coroot(const RootSystem& rs, const std::vector<double>& theta);
/// Fourth-order central differences of eval in theta-coordinates combined by laplace_operator.
Complex laplace_apply_fd(const OrbitFunction& f, const std::vector<double>& theta, double h);

/// One-sided second-order derivative along the inward unit normal of a wall of F.
/// wall < rank is {<x,a_wall> = 0}; wall == rank is {<x,xi> = 1}. Simple systems only.
Complex normal_derivative(const OrbitFunction& f, const std::vector<double>& b, int wall, double h);
/// Euclidean length of a vector in alpha^vee-coordinates.
double coroot_norm(const RootSystem& rs, const std::vector<double>& v);

/// (D_y phi)(x) = sum_w phi(w x + y) and |W_lambda| phi(y) phi(x).
std::pair<Complex, Complex> dy_eigencheck(const OrbitFunction& f, const std::vector<double>& y,
                                          const std::vector<double>& x, std::size_t cap = 100000);

/// sum_{w in W} exp(2 pi i <lambda, w x>) by explicit group enumeration.
Complex weyl_double_sum(const RootSystem& rs, const Weight& lambda, const std::vector<double>& b,
                        std::size_t cap = 100000);
/// |W_x| sum over the point orbit of x; the dual reading of the modified function.
Complex modified_eval_dual(const RootSystem& rs, const Vec& b, const Weight& lambda);

/// Laurent monomial sum over the orbit in orthogonal exponents (A shifted to be >= 0).
Complex monomial_eval(const RootSystem& rs, const Weight& lambda, const std::vector<Complex>& y);
/// Orthogonal exponents used by monomial_eval; DomainError if not integral.
std::vector<std::vector<long>> monomial_exponents(const RootSystem& rs, const Weight& lambda);

struct IdentityReport {
    double generating = 0;         ///< prod(1 + y_i t) coefficients vs phi_{1^r}
    double complete_generating = 0;///< prod(1 - y_i t)^-1 coefficients vs Phi_r
    double alternating = 0;        ///< sum (-1)^r phi_{1^r} Phi_{s-r} = 0
    double newton_complete = 0;    ///< s Phi_s = sum phi_(r) Phi_{s-r}
    double newton_elementary = 0;  ///< s phi_{1^s} = sum (-1)^(r-1) phi_(r) phi_{1^(s-r)}
    double determinant = 0;        ///< Phi_r = det(phi_{1^(1-i+j)}), r <= 4
    double max() const;
};
/// A_n identities at a point given by n+1 orthogonal coordinates (summing to 0), s <= s_max.
IdentityReport an_identity_suite(int n, const std::vector<double>& x_orth, int s_max);
/// Orthogonal coordinates (sum 0) -> alpha^vee-coordinates for A_n.
std::vector<double> an_orthogonal_to_coroot(const std::vector<double>& x);

}  // namespace orbitfn
