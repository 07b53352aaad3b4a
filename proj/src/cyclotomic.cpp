#include "orbitfn/cyclotomic.hpp"

#include "orbitfn/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace orbitfn {

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic.
    std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long D) {
    static std::map<long, std::vector<long>> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    if (auto it = cache.find(D); it != cache.end()) return it->second;
    std::vector<long> p(D + 1, 0);
    p[0] = -1;
    p[D] = 1;
    for (long d = 1; d < D; ++d) {
        if (D % d) continue;
        p = poly_div_exact(p, cyclotomic_polynomial(d));
    }
    return cache.emplace(D, p).first->second;
}

Cyclotomic::Cyclotomic(long order) : order_(order) {
    if (order < 1) throw DomainError("cyclotomic order must be positive");
    c_.assign(cyclotomic_polynomial(order).size() - 1, 0);
}

void Cyclotomic::reduce_raw(std::vector<Rational> raw) {
    const auto& phi = cyclotomic_polynomial(order_);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = raw.size(); i-- > deg;) {
        if (raw[i] == 0) continue;
        Rational c = raw[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j]) raw[i - deg + j] -= c * phi[j];
    }
    raw.resize(deg, 0);
    c_ = std::move(raw);
}

Cyclotomic Cyclotomic::from_residues(long order, const std::vector<Rational>& counts) {
    Cyclotomic z(order);
    z.reduce_raw(counts);
    return z;
}

Cyclotomic Cyclotomic::constant(long order, const Rational& c) {
    Cyclotomic z(order);
    z.c_[0] = c;
    return z;
}

Cyclotomic Cyclotomic::root(long order, long k) {
    std::vector<Rational> raw(order, 0);
    raw[((k % order) + order) % order] = 1;
    return from_residues(order, raw);
}

static void same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) throw DomainError("cyclotomic orders differ");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    same_order(*this, o);
    Cyclotomic z = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] += o.c_[i];
    return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    same_order(*this, o);
    Cyclotomic z = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] -= o.c_[i];
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    same_order(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    same_order(*this, o);
    std::vector<Rational> raw(c_.size() * 2 + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) raw[i + j] += c_[i] * o.c_[j];
    }
    Cyclotomic z(order_);
    z.reduce_raw(std::move(raw));
    return z;
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic z = *this;
    for (auto& x : z.c_) x *= r;
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> raw(order_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) raw[(order_ - static_cast<long>(i)) % order_] += c_[i];
    return from_residues(order_, raw);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return order_ == o.order_ && c_ == o.c_; }

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const { return c_[0]; }

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
        s += c_[i].get_d() * std::complex<double>(std::cos(a), std::sin(a));
    }
    return s;
}

}  // namespace orbitfn
