#pragma once

#include "orbitfn/rational.hpp"

#include <string>
#include <vector>

namespace orbitfn {

/// One simple factor of a (possibly semisimple) root system.
struct SimpleFactor {
    char series = 'A';
    int rank = 1;
    int offset = 0;  ///< index of its first simple root in the full system
    bool b2_alias = false;  ///< requested as B2, stored as C2
    std::string name() const;
};

/**
 * @brief Static data of a simple root system or a product of simple ones.
 *
 * Simple roots are numbered as in the usual diagrams: B_n has node n short,
 * C_n has nodes 1..n-1 short, D_n attaches nodes n-1 and n to n-2, E_6 hangs
 * node 6 from node 3, E_7 node 7 from node 3, E_8 node 8 from node 5, F_4 is
 * 1-2=>3-4 and G_2 has node 1 long. Long roots have squared length 2.
 * Product systems carry block-diagonal data. All indices are 0-based.
 */
struct RootSystem {
    std::vector<SimpleFactor> factors;
    int rank = 0;
    std::vector<std::vector<int>> cartan;  ///< M_jk = 2<a_j,a_k>/<a_k,a_k>
    Mat cartan_inv;
    Vec lengths_sq;
    Mat gram;  ///< S = M^-1 D, D = diag(<a_i,a_i>/2); S_ij = <w_i,w_j>
    std::vector<int> marks;
    std::vector<int> comarks;
    std::vector<Vec> highest_roots;  ///< one per factor, omega-coordinates
    Integer weyl_order;

    bool is_simple() const { return factors.size() == 1; }
    /// "A2", "A1xA1", ...; a B2 request prints as "C2".
    std::string name() const;
    Rational cartan_at(int i, int j) const { return Rational(cartan[i][j]); }
    Mat cartan_rational() const;
};

/// Throws UnsupportedType for (series, rank) outside the classification.
RootSystem build_root_system(char series, int rank);
/// Block-diagonal product of the given systems in order.
RootSystem product_system(const std::vector<RootSystem>& parts);
/// Parses "G2", "B3", "A1xA1", "C2xA1".
RootSystem parse_root_system(const std::string& spec);

const Mat& inverse_cartan(const RootSystem& rs);

struct HighestRoot {
    std::vector<int> marks;
    std::vector<int> comarks;
    Vec xi;  ///< omega-coordinates
};
/// Simple systems only.
HighestRoot highest_root(const RootSystem& rs);

Integer weyl_order(const RootSystem& rs);
/// Closed-form order of W for one simple type.
Integer weyl_order_of(char series, int rank);

}  // namespace orbitfn
