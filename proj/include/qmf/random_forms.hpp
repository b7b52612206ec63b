#ifndef QMF_RANDOM_FORMS_HPP
#define QMF_RANDOM_FORMS_HPP

#include <random>

#include "qmf/quasimod.hpp"
#include "qmf/symcoeff.hpp"
#include "qmf/vvops.hpp"

namespace qmf {

// Random generators for the symbolic property suites. Everything is driven
// by a caller-provided engine so runs are reproducible from a seed.

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_num = 9, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, long max_num = 9, long max_den = 4) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

// A rational that is generically not a small integer (used for weights that
// must avoid the special integral branches).
inline Rational random_noninteger_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(2, 7);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!r.is_integer()) return r;
    }
}

inline Scalar random_scalar(Rng& rng) {
    std::uniform_int_distribution<int> exp(-1, 1);
    Scalar s = Scalar::mono(random_nonzero_rational(rng), exp(rng));
    std::uniform_int_distribution<int> extra(0, 2);
    if (extra(rng) == 0) s += Scalar::mono(random_rational(rng), exp(rng));
    return s;
}

inline SymCoeff random_symcoeff(Rng& rng, int ngens = 2, int max_der = 2) {
    std::uniform_int_distribution<int> nterms(1, 2);
    std::uniform_int_distribution<int> gen(0, ngens - 1);
    std::uniform_int_distribution<int> der(0, max_der);
    std::uniform_int_distribution<int> deg(1, 2);
    SymCoeff acc;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        SymCoeff m(random_scalar(rng));
        int d = deg(rng);
        for (int j = 0; j < d; ++j) m *= SymCoeff::generator(gen(rng), der(rng));
        acc += m;
    }
    return acc;
}

// Nearly holomorphic form with Y-powers up to max_y.
inline NHForm<SymCoeff> random_nhform(Rng& rng, const Rational& weight, long max_y = 2) {
    NHForm<SymCoeff> f(weight);
    std::uniform_int_distribution<int> keep(0, 1);
    for (long t = 0; t <= max_y; ++t)
        if (t == 0 || keep(rng)) f += NHForm<SymCoeff>::term(weight, t, random_symcoeff(rng));
    return f;
}

inline VVTuple<SymCoeff> random_vvtuple(Rng& rng, const Rational& k, long depth, long max_y = 2) {
    std::vector<NHForm<SymCoeff>> comp;
    for (long s = 0; s <= depth; ++s)
        comp.push_back(random_nhform(rng, k - Rational(2 * s), max_y));
    return VVTuple<SymCoeff>(k, std::move(comp));
}

inline QMForm<SymCoeff> random_qmform(Rng& rng, const Rational& k, long depth, long max_y = 2) {
    std::vector<NHForm<SymCoeff>> comp;
    for (long r = 0; r <= depth; ++r)
        comp.push_back(random_nhform(rng, k - Rational(2 * r), max_y));
    return QMForm<SymCoeff>(k, std::move(comp));
}

// Quasi-modular form whose components are Y-free symbolic holomorphic
// functions; this is the shape on which the sl2-triple relations are exact.
inline QMForm<SymCoeff> random_holomorphic_qmform(Rng& rng, const Rational& k, long depth) {
    std::vector<NHForm<SymCoeff>> comp;
    for (long r = 0; r <= depth; ++r)
        comp.push_back(NHForm<SymCoeff>(k - Rational(2 * r), random_symcoeff(rng)));
    return QMForm<SymCoeff>(k, std::move(comp));
}

// Random (a, b, c) with a b + (1 - a) c = 1: draw a and b, solve for c when
// a != 1, otherwise force b = 1 and draw c freely.
inline TripleParams random_triple(Rng& rng) {
    for (;;) {
        Rational a = random_rational(rng, 5, 3);
        if (a == Rational(1)) continue;
        Rational b = random_nonzero_rational(rng, 5, 3);
        Rational c = (Rational(1) - a * b) / (Rational(1) - a);
        return TripleParams(a, b, c);
    }
}

}  // namespace qmf

#endif
