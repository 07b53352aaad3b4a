#pragma once

#include "orbitfn/rational.hpp"

#include <complex>
#include <vector>

namespace orbitfn {

/**
 * @brief Exact element of Q(zeta_D), zeta_D = exp(2 pi i / D).
 *
 * Stored in the power basis 1, zeta, ..., zeta^(phi(D)-1), i.e. reduced
 * modulo the D-th cyclotomic polynomial, so equality is coefficientwise.
 */
class Cyclotomic {
public:
    explicit Cyclotomic(long order = 1);
    /// The sum of counts[k] zeta^k, k in [0, D).
    static Cyclotomic from_residues(long order, const std::vector<Rational>& counts);
    static Cyclotomic constant(long order, const Rational& c);
    static Cyclotomic root(long order, long k);

    long order() const { return order_; }
    const Vec& coefficients() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& r) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic conj() const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    bool is_rational() const;
    /// Constant coefficient; meaningful when is_rational().
    Rational rational_value() const;
    std::complex<double> to_complex() const;

private:
    void reduce_raw(std::vector<Rational> raw);
    long order_;
    Vec c_;
};

/// Integer coefficients of the D-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long D);

}  // namespace orbitfn
