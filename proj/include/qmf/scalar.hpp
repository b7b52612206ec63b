#ifndef QMF_SCALAR_HPP
#define QMF_SCALAR_HPP

#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qmf/rational.hpp"

namespace qmf {

// Laurent polynomial in the formal symbol w over the rationals. The symbol
// stands for 2*pi*i and is never given a numeric value inside exact
// computations; numeric evaluation substitutes it at the very end. Keeping it
// formal makes d/dtau q = w q exact.
//
// Zero coefficients are never stored; exponents may be negative.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& r) { set(0, r); }
    Scalar(long n) { set(0, Rational(n)); }
    Scalar(int n) { set(0, Rational(n)); }

    static Scalar omega(int e = 1) {
        Scalar s;
        s.set(e, Rational(1));
        return s;
    }
    static Scalar mono(const Rational& c, int e) {
        Scalar s;
        s.set(e, c);
        return s;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
    }
    // Coefficient of w^e (zero if absent).
    Rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }
    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("Scalar: not a pure rational: " + str());
        return coeff(0);
    }
    const std::map<int, Rational>& terms() const { return c_; }

    Scalar operator-() const {
        Scalar r;
        for (auto& [e, c] : c_) r.c_.emplace(e, -c);
        return r;
    }
    Scalar& operator+=(const Scalar& o) {
        for (auto& [e, c] : o.c_) add(e, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (auto& [e, c] : o.c_) add(e, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (auto& [e1, c1] : a.c_)
            for (auto& [e2, c2] : b.c_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend Scalar operator*(const Scalar& a, const Rational& r) {
        Scalar out;
        if (r.is_zero()) return out;
        for (auto& [e, c] : a.c_) out.c_.emplace(e, c * r);
        return out;
    }
    friend Scalar operator*(const Rational& r, const Scalar& a) { return a * r; }

    // Invertible means a single nonzero monomial c w^e.
    bool is_invertible() const { return c_.size() == 1; }
    Scalar inverse() const {
        if (!is_invertible()) throw std::domain_error("Scalar: not invertible: " + str());
        auto& [e, c] = *c_.begin();
        return mono(Rational(1) / c, -e);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend Scalar operator/(const Scalar& a, const Rational& r) {
        if (r.is_zero()) throw std::domain_error("Scalar: division by zero rational");
        return a * (Rational(1) / r);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::complex<double> eval(std::complex<double> omega_value) const {
        std::complex<double> acc = 0.0;
        for (auto& [e, c] : c_) acc += c.to_double() * std::pow(omega_value, e);
        return acc;
    }
    // Crude bound used by the numeric evaluator's truncation metadata.
    double magnitude_bound(double omega_abs) const {
        double acc = 0.0;
        for (auto& [e, c] : c_) acc += std::abs(c.to_double()) * std::pow(omega_abs, e);
        return acc;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << it->second.str();
            if (it->first != 0) os << "*w^" << it->first;
        }
        return os.str();
    }

private:
    void set(int e, const Rational& c) {
        if (!c.is_zero()) c_[e] = c;
    }
    void add(int e, const Rational& c) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!c.is_zero()) c_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    std::map<int, Rational> c_;
};

}  // namespace qmf

#endif
