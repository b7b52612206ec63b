#ifndef QMF_SYMCOEFF_HPP
#define QMF_SYMCOEFF_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "qmf/scalar.hpp"

namespace qmf {

// One factor g_i^{(p)}: the formal p-th tau-derivative of the abstract symbol
// g_i. The weight tag travels with the generator id so that test data can be
// assembled with consistent weights; the ring operations themselves never
// consult it.
struct SymFactor {
    int gen = 0;
    int der = 0;
    friend auto operator<=>(const SymFactor&, const SymFactor&) = default;
};

// Normal form: sorted factor list, repeated factors kept adjacent.
using SymMonomial = std::vector<SymFactor>;

// Free differential ring: exact Scalar-linear combinations of monomials in
// the generators, with d(g_i^{(p)}) = g_i^{(p+1)} extended by the Leibniz
// rule. This is the coefficient ring used for symbolic identity checks, where
// an arbitrary holomorphic form is represented by a fresh generator.
class SymCoeff {
public:
    SymCoeff() = default;
    SymCoeff(const Scalar& s) { add_term({}, s); }
    SymCoeff(const Rational& r) : SymCoeff(Scalar(r)) {}
    SymCoeff(long n) : SymCoeff(Scalar(n)) {}

    static SymCoeff generator(int id, int der = 0) {
        SymCoeff c;
        c.add_term({SymFactor{id, der}}, Scalar(Rational(1)));
        return c;
    }
    static SymCoeff monomial(SymMonomial m, const Scalar& s) {
        std::sort(m.begin(), m.end());
        SymCoeff c;
        c.add_term(std::move(m), s);
        return c;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<SymMonomial, Scalar>& terms() const { return t_; }

    SymCoeff operator-() const {
        SymCoeff r;
        for (auto& [m, s] : t_) r.t_.emplace(m, -s);
        return r;
    }
    SymCoeff& operator+=(const SymCoeff& o) {
        for (auto& [m, s] : o.t_) add_term(m, s);
        return *this;
    }
    SymCoeff& operator-=(const SymCoeff& o) {
        for (auto& [m, s] : o.t_) add_term(m, -s);
        return *this;
    }
    friend SymCoeff operator+(SymCoeff a, const SymCoeff& b) { return a += b; }
    friend SymCoeff operator-(SymCoeff a, const SymCoeff& b) { return a -= b; }
    friend SymCoeff operator*(const SymCoeff& a, const SymCoeff& b) {
        SymCoeff r;
        for (auto& [m1, s1] : a.t_)
            for (auto& [m2, s2] : b.t_) {
                SymMonomial m = m1;
                m.insert(m.end(), m2.begin(), m2.end());
                std::sort(m.begin(), m.end());
                r.add_term(std::move(m), s1 * s2);
            }
        return r;
    }
    SymCoeff& operator*=(const SymCoeff& o) { return *this = *this * o; }
    friend SymCoeff operator*(const SymCoeff& a, const Scalar& s) {
        SymCoeff r;
        if (s.is_zero()) return r;
        for (auto& [m, c] : a.t_) r.add_term(m, c * s);
        return r;
    }
    friend SymCoeff operator*(const Scalar& s, const SymCoeff& a) { return a * s; }
    friend SymCoeff operator*(const SymCoeff& a, const Rational& r) { return a * Scalar(r); }
    friend SymCoeff operator*(const Rational& r, const SymCoeff& a) { return a * Scalar(r); }

    // Leibniz rule; each factor's derivative order is bumped in turn.
    SymCoeff derive() const {
        SymCoeff r;
        for (auto& [m, s] : t_) {
            for (size_t i = 0; i < m.size(); ++i) {
                SymMonomial d = m;
                d[i].der += 1;
                std::sort(d.begin(), d.end());
                r.add_term(std::move(d), s);
            }
        }
        return r;
    }

    friend bool operator==(const SymCoeff& a, const SymCoeff& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SymCoeff& a, const SymCoeff& b) { return !(a == b); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, s] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << s.str() << ")";
            for (auto& f : m) os << "*g" << f.gen << "^(" << f.der << ")";
        }
        return os.str();
    }

private:
    void add_term(SymMonomial m, const Scalar& s) {
        if (s.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(std::move(m), s);
        } else {
            it->second += s;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    std::map<SymMonomial, Scalar> t_;
};

// Weight bookkeeping for generators used when assembling symbolic forms.
struct GenSpec {
    int id;
    Rational weight;
};

}  // namespace qmf

#endif
