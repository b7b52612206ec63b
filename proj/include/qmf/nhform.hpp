#ifndef QMF_NHFORM_HPP
#define QMF_NHFORM_HPP

#include <map>
#include <sstream>
#include <stdexcept>

#include "qmf/rational.hpp"
#include "qmf/scalar.hpp"

namespace qmf {

// Nearly holomorphic form: a polynomial in Y = 1/(-2iy) over a differential
// coefficient ring C (QSeries or SymCoeff), together with a declared weight.
// The variable choice makes the operator actions exact over the rationals:
//
//   d/dtau Y = Y^2,  d/dtaubar Y = -Y^2,  1/(2iy) = -Y,  y^2 = -1/(4 Y^2).
//
// Coefficients are assumed annihilated by d/dtaubar (holomorphic or formal),
// which is what makes the weight-lowering action below purely algebraic.
//
// Zero coefficients are never stored. The depth of the zero form is 0 by
// convention, with is_zero() consulted before depth comparisons.
template <class C>
class NHForm {
public:
    NHForm() : weight_(0) {}
    explicit NHForm(const Rational& weight) : weight_(weight) {}
    NHForm(const Rational& weight, const C& part0) : weight_(weight) { add_part(0, part0); }

    static NHForm zero(const Rational& weight) { return NHForm(weight); }
    static NHForm term(const Rational& weight, long ypow, const C& coeff) {
        NHForm f(weight);
        f.add_part(ypow, coeff);
        return f;
    }

    const Rational& weight() const { return weight_; }
    bool is_zero() const { return parts_.empty(); }
    long depth() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }
    const std::map<long, C>& parts() const { return parts_; }
    C part(long t) const {
        auto it = parts_.find(t);
        return it == parts_.end() ? C() : it->second;
    }

    NHForm with_weight(const Rational& w) const {
        NHForm f = *this;
        f.weight_ = w;
        return f;
    }

    NHForm operator-() const {
        NHForm r(weight_);
        for (auto& [t, c] : parts_) r.parts_.emplace(t, -c);
        return r;
    }
    NHForm& operator+=(const NHForm& o) {
        if (!o.is_zero() && !is_zero() && weight_ != o.weight_)
            throw std::domain_error("NHForm: adding different weights " + weight_.str() +
                                    " and " + o.weight_.str());
        if (is_zero()) weight_ = o.weight_;
        for (auto& [t, c] : o.parts_) add_part(t, c);
        return *this;
    }
    NHForm& operator-=(const NHForm& o) { return *this += -o; }
    friend NHForm operator+(NHForm a, const NHForm& b) { return a += b; }
    friend NHForm operator-(NHForm a, const NHForm& b) { return a -= b; }

    template <class S>
    NHForm scaled(const S& s) const {
        NHForm r(weight_);
        for (auto& [t, c] : parts_) r.add_part(t, c * s);
        return r;
    }
    friend NHForm operator*(const NHForm& a, const Rational& r) { return a.scaled(r); }
    friend NHForm operator*(const Rational& r, const NHForm& a) { return a.scaled(r); }
    friend NHForm operator*(const NHForm& a, const Scalar& s) { return a.scaled(s); }
    friend NHForm operator*(const Scalar& s, const NHForm& a) { return a.scaled(s); }

    friend bool operator==(const NHForm& a, const NHForm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.weight_ == b.weight_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const NHForm& a, const NHForm& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "[wt " << weight_.str() << "]";
        if (parts_.empty()) {
            os << " 0";
            return os.str();
        }
        for (auto& [t, c] : parts_) os << " + (" << c.str() << ")*Y^" << t;
        return os.str();
    }

private:
    void add_part(long t, const C& c) {
        if (t < 0) throw std::domain_error("NHForm: negative Y power");
        if (c.is_zero()) return;
        auto it = parts_.find(t);
        if (it == parts_.end()) {
            parts_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) parts_.erase(it);
        }
    }

    Rational weight_;
    std::map<long, C> parts_;

    template <class D>
    friend NHForm<D> raise(const NHForm<D>&, const Rational&);
    template <class D>
    friend NHForm<D> lower4(const NHForm<D>&);
    template <class D>
    friend NHForm<D> mulY(const NHForm<D>&);
    template <class D>
    friend NHForm<D> nh_mul(const NHForm<D>&, const NHForm<D>&);
    template <class D>
    friend NHForm<D> partial_tau(const NHForm<D>&);
};

// Weight raising operator delta_l = d/dtau + l/(2iy) = d/dtau - l Y. On a
// single term: delta_l(c Y^t) = (dc) Y^t + (t - l) c Y^{t+1}. The result is
// bookkept at weight + 2 whatever l is; only l = weight preserves modularity.
template <class C>
NHForm<C> raise(const NHForm<C>& f, const Rational& l) {
    NHForm<C> r(f.weight_ + Rational(2));
    for (auto& [t, c] : f.parts_) {
        r.add_part(t, c.derive());
        r.add_part(t + 1, c * (Rational(t) - l));
    }
    return r;
}

// The 4 y^2 d/dtaubar action: c Y^t -> t c Y^{t-1} for d/dtaubar-closed c.
// Kills exactly the meromorphic part (depth 0); weight drops by 2, depth
// drops by exactly 1 on any form of positive depth.
template <class C>
NHForm<C> lower4(const NHForm<C>& f) {
    NHForm<C> r(f.weight_ - Rational(2));
    for (auto& [t, c] : f.parts_)
        if (t >= 1) r.add_part(t - 1, c * Rational(t));
    return r;
}

// Multiplication by Y = 1/(-2iy); weight goes up by 2.
template <class C>
NHForm<C> mulY(const NHForm<C>& f) {
    NHForm<C> r(f.weight_ + Rational(2));
    for (auto& [t, c] : f.parts_) r.add_part(t + 1, c);
    return r;
}

// Plain holomorphic differentiation d/dtau = delta_0.
template <class C>
NHForm<C> partial_tau(const NHForm<C>& f) {
    return raise(f, Rational(0));
}

// Cauchy product in Y; weights add.
template <class C>
NHForm<C> nh_mul(const NHForm<C>& a, const NHForm<C>& b) {
    NHForm<C> r(a.weight_ + b.weight_);
    for (auto& [t1, c1] : a.parts_)
        for (auto& [t2, c2] : b.parts_) r.add_part(t1 + t2, c1 * c2);
    return r;
}

// The standard weight-l Laplacian Delta_l = 4 delta_{l-2} y^2 d/dtaubar,
// realized as raise(lower4(f), l-2). Annihilates depth-0 forms.
template <class C>
NHForm<C> laplace(const NHForm<C>& f, const Rational& l) {
    return raise(lower4(f), l - Rational(2));
}

// s-fold raising tower delta_{m+2(s-1)} o ... o delta_m.
template <class C>
NHForm<C> delta_power_iter(const NHForm<C>& f, const Rational& m, long s) {
    if (s < 0) throw std::domain_error("delta_power: negative exponent");
    NHForm<C> r = f;
    for (long i = 0; i < s; ++i) r = raise(r, m + Rational(2 * i));
    return r;
}

// Closed form of the tower on a depth-0 form:
//   delta_m^s c = sum_p binom(s,p) [prod_{q=s-p}^{s-1} (m+q)] d^{s-p}c / (2iy)^p,
// with 1/(2iy) = -Y. The empty product for s = 0 is 1.
template <class C>
NHForm<C> delta_power_closed(const NHForm<C>& f, const Rational& m, long s) {
    if (s < 0) throw std::domain_error("delta_power: negative exponent");
    if (!f.is_zero() && f.depth() != 0)
        throw std::domain_error("delta_power_closed: input must have depth 0");
    NHForm<C> r(f.weight() + Rational(2 * s));
    if (f.is_zero()) return r;
    const C& c = f.parts().begin()->second;
    for (long p = 0; p <= s; ++p) {
        Rational coef = binomial(s, p);
        for (long q = s - p; q <= s - 1; ++q) coef *= (m + Rational(q));
        if (p % 2 == 1) coef = -coef;
        if (coef.is_zero()) continue;
        C dc = c;
        for (long i = 0; i < s - p; ++i) dc = dc.derive();
        r += NHForm<C>::term(f.weight() + Rational(2 * s), p, dc * coef);
    }
    return r;
}

// Dispatch: closed form on depth-0 inputs, iteration otherwise. The two paths
// agree exactly; the unit tests compare them.
template <class C>
NHForm<C> delta_power(const NHForm<C>& f, const Rational& m, long s) {
    if (f.is_zero() || f.depth() == 0) return delta_power_closed(f, m, s);
    return delta_power_iter(f, m, s);
}

}  // namespace qmf

#endif
