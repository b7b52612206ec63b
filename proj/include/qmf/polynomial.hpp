#ifndef QMF_POLYNOMIAL_HPP
#define QMF_POLYNOMIAL_HPP

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// Dense univariate polynomial over the rationals. The indeterminate is called
// lambda throughout the eigenvalue code; the same type also serves for
// polynomials in mu. Invariant: leading coefficient nonzero unless zero poly.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    UniPoly(long n) : UniPoly(Rational(n)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    // c1*x + c0
    static UniPoly linear(const Rational& c1, const Rational& c0) {
        return UniPoly(std::vector<Rational>{c0, c1});
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
        return c_[i];
    }
    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coeff");
        return c_.back();
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return UniPoly(std::move(out));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(out));
    }
    friend UniPoly operator*(const UniPoly& a, const Rational& r) {
        if (r.is_zero()) return UniPoly();
        UniPoly out = a;
        for (auto& c : out.c_) c = c * r;
        return out;
    }
    friend UniPoly operator*(const Rational& r, const UniPoly& a) { return a * r; }
    friend UniPoly operator/(const UniPoly& a, const Rational& r) {
        if (r.is_zero()) throw std::domain_error("UniPoly: division by zero");
        return a * (Rational(1) / r);
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this / leading();
    }
    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> out(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UniPoly(std::move(out));
    }
    // Synthetic division by (x - r); remainder must vanish.
    UniPoly deflate(const Rational& r) const {
        if (is_zero()) throw std::domain_error("UniPoly: deflating zero polynomial");
        std::vector<Rational> out(c_.size() - 1, Rational(0));
        Rational carry(0);
        for (long i = degree(); i >= 1; --i) {
            carry = carry * r + c_[i];
            out[i - 1] = carry;
        }
        if (carry * r + c_[0] != Rational(0))
            throw std::domain_error("UniPoly: deflate by non-root");
        return UniPoly(std::move(out));
    }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << c_[i].str();
            if (i > 0) os << "*" << var << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// All rational roots with multiplicities, plus the root-free residual factor
// (normalized monic). Found by the divisor search on the primitive integer
// form followed by repeated deflation.
struct RootList {
    std::vector<std::pair<Rational, long>> roots;
    UniPoly residual;

    bool has_root(const Rational& r) const {
        for (auto& [x, m] : roots)
            if (x == r) return true;
        return false;
    }
    long total_count() const {
        long n = 0;
        for (auto& [x, m] : roots) n += m;
        return n;
    }
};

RootList rational_roots(const UniPoly& p);

// Bivariate polynomial in (lambda, mu): coefficient of lambda^i is a UniPoly
// in mu.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(UniPoly(c));
    }
    explicit BiPoly(const UniPoly& mu_poly) {
        if (!mu_poly.is_zero()) c_.push_back(mu_poly);
    }
    explicit BiPoly(std::vector<UniPoly> by_lambda) : c_(std::move(by_lambda)) { trim(); }

    static BiPoly lambda() { return BiPoly(std::vector<UniPoly>{UniPoly(), UniPoly(1L)}); }
    static BiPoly mu() { return BiPoly(UniPoly::variable()); }

    bool is_zero() const { return c_.empty(); }
    long degree_lambda() const { return static_cast<long>(c_.size()) - 1; }
    UniPoly coeff_lambda(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return UniPoly();
        return c_[i];
    }

    Rational eval(const Rational& lam, const Rational& mu) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lam + it->eval(mu);
        return acc;
    }
    // Substitute a rational mu, leaving a polynomial in lambda.
    UniPoly at_mu(const Rational& mu) const {
        std::vector<Rational> out;
        out.reserve(c_.size());
        for (auto& p : c_) out.push_back(p.eval(mu));
        return UniPoly(std::move(out));
    }
    UniPoly at_lambda(const Rational& lam) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lam + *it;
        return acc;
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& p : r.c_) p = -p;
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        std::vector<UniPoly> out(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return BiPoly(std::move(out));
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        std::vector<UniPoly> out(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return BiPoly(std::move(out));
    }
    friend BiPoly operator*(const BiPoly& a, const Rational& r) {
        BiPoly out = a;
        for (auto& p : out.c_) p = p * r;
        out.trim();
        return out;
    }
    friend BiPoly operator*(const BiPoly& a, const UniPoly& m) { return a * BiPoly(m); }
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // Derivative with respect to lambda.
    BiPoly d_lambda() const {
        if (c_.size() <= 1) return BiPoly();
        std::vector<UniPoly> out(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return BiPoly(std::move(out));
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree_lambda(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[i].str("mu") << ")";
            if (i > 0) os << "*lam^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<UniPoly> c_;
};

// Resultant of p and q as polynomials in lambda (entries are polynomials in
// mu), via cofactor expansion of the Sylvester matrix. Fine at the small
// degrees used here.
UniPoly resultant_lambda(const BiPoly& p, const BiPoly& q);

// Discriminant of p with respect to lambda: Res(p, dp/dlambda) divided by the
// leading coefficient, up to the conventional sign.
UniPoly discriminant_lambda(const BiPoly& p);

}  // namespace qmf

#endif
