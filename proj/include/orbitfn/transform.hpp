#pragma once

#include "orbitfn/cyclotomic.hpp"
#include "orbitfn/orbit_fn.hpp"
#include "orbitfn/rational.hpp"
#include "orbitfn/root_system.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace orbitfn {

struct SpectrumEntry {
    Weight lambda;
    Complex coeff;
};
using Spectrum = std::vector<SpectrumEntry>;

/// Sorts by coordinate sum, then lexicographically.
void sort_spectrum(Spectrum& s);

/**
 * @brief Composite rule on the fundamental simplex.
 *
 * The simplex is cut into level^rank congruent cells (Kuhn subdivision of the
 * order simplex) and each cell carries a degree-7 Grundmann-Moller rule.
 * Nodes are barycentric over the vertices {0, w^vee_i/m_i}; weights sum to 1.
 */
struct QuadratureRule {
    int rank = 0;
    int level = 0;
    int order = 7;
    std::vector<std::vector<double>> nodes;  ///< rank+1 barycentric coordinates each
    std::vector<double> weights;
};

/// Rule on the unit reference simplex; rank in 1..3.
QuadratureRule simplex_rule(int rank, int level);
/// Nodes of the rule mapped to alpha^vee-coordinates in F.
std::vector<std::vector<double>> quadrature_points(const RootSystem& rs, const QuadratureRule& rule);

using PointFunction = std::function<Complex(const std::vector<double>&)>;

/// Normalized integral over F; deterministic at any thread count.
Complex quadrature_integrate(const RootSystem& rs, const PointFunction& g, int level, unsigned threads = 0);

/// c_lambda = |O(lambda)|^-1 * normalized integral of f conj(phi_lambda).
Spectrum forward_transform(const RootSystem& rs, const PointFunction& f, const std::vector<Weight>& lambdas,
                           int level, unsigned threads = 0);
/// sum c_lambda phi_lambda(x).
Complex inverse_transform(const RootSystem& rs, const Spectrum& spectrum, const std::vector<double>& x);
/// (sum |O(lambda)| |c_lambda|^2, normalized integral of |f|^2).
std::pair<double, double> plancherel(const RootSystem& rs, const Spectrum& spectrum, const PointFunction& f,
                                     int level, unsigned threads = 0);

/// Exact sum over T_m of phi_lambda conj(phi_mu), in Q(zeta_m).
Cyclotomic tm_scalar_product(const RootSystem& rs, const Weight& lambda, const Weight& mu, int m,
                             std::size_t cap = 10'000'000);
/// No distinct lambda_1 in O(lambda), mu_1 in O(mu) with lambda_1 - mu_1 = 0 mod m coordinatewise.
bool separates(const RootSystem& rs, const Weight& lambda, const Weight& mu, int m);
/// First offending pair, if any, over all pairs of the set (including each weight with itself).
std::optional<std::pair<Weight, Weight>> separation_failure(const RootSystem& rs, const std::vector<Weight>& lambdas,
                                                            int m);
/// Smallest m >= 1 separating every pair of the set; at most the coordinate spread + 1.
int minimal_separating_m(const RootSystem& rs, const std::vector<Weight>& lambdas);

struct FiniteSample {
    Vec point;        ///< representative in F, alpha^vee-coordinates
    long count = 0;   ///< points of T_m reducing to it
};
/// Fundamental representatives of T_m with preimage counts, sorted by point.
std::vector<FiniteSample> finite_samples(const RootSystem& rs, int m, std::size_t cap = 10'000'000);

/// a_lambda = (m^n |O(lambda)|)^-1 sum_i count_i f(s_i) conj(phi_lambda(s_i)).
Spectrum finite_forward(const RootSystem& rs, const std::vector<FiniteSample>& samples,
                        const std::vector<Complex>& values, const std::vector<Weight>& lambdas, int m);
std::vector<Cyclotomic> finite_forward_exact(const RootSystem& rs, const std::vector<FiniteSample>& samples,
                                             const std::vector<Cyclotomic>& values,
                                             const std::vector<Weight>& lambdas, int m);
/// Same coefficients from the sum over all m^n points of T_m.
std::vector<Cyclotomic> finite_forward_full(const RootSystem& rs, const std::function<Cyclotomic(const Vec&)>& f,
                                            const std::vector<Weight>& lambdas, int m);
/// sum a_lambda phi_lambda(s) in Q(zeta_m).
Cyclotomic finite_synthesis(const RootSystem& rs, const std::vector<std::pair<Weight, Cyclotomic>>& spectrum,
                            const Vec& s, int m);

/// Unitary DFT on {1..N}^r, row-major; kernel N^(-r/2) exp(+-2 pi i m.n/N), minus when inverse.
std::vector<Complex> finite_fourier(const std::vector<Complex>& values, int N, int r, bool inverse);

}  // namespace orbitfn
