#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace orbitfn {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// p/q in lowest terms.
Rational frac(long p, long q);

/// "p/q" or "p"; accepts "p/q", integers and decimals like "0.25".
Rational parse_rational(const std::string& s);
/// Comma-separated rationals, e.g. "1/2,3".
Vec parse_vec(const std::string& s);
std::string to_string(const Rational& r);
std::string to_string(const Vec& v);

Integer floor_of(const Rational& r);
bool is_integer(const Rational& r);
bool is_integral(const Vec& v);
/// Least common multiple of the denominators.
Integer common_denominator(const Vec& v);

Vec ints(std::initializer_list<long> xs);
Mat identity(std::size_t n);
Mat transpose(const Mat& a);
Mat multiply(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
/// Exact Gauss-Jordan inverse; throws DomainError when singular.
Mat inverse(const Mat& a);
Rational determinant(Mat a);

std::vector<double> to_double(const Vec& v);

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept;
};

}  // namespace orbitfn
