#ifndef QMF_VVOPS_HPP
#define QMF_VVOPS_HPP

#include <string>
#include <vector>

#include "qmf/quasimod.hpp"

namespace qmf {

// Parameters (a, b, c) of the two-parameter family of sl2-triples: the raise
// is delta-tilde at index a*k, the lower is b * 4 y^2 d/dtaubar - c * D, and
// the constraint a b + (1 - a) c = 1 normalizes the bracket to the weight.
struct TripleParams {
    Rational a, b, c;
    // defaults to the Shimura-Maass triple
    TripleParams() : a(1), b(1), c(0) {}
    TripleParams(const Rational& a_, const Rational& b_, const Rational& c_)
        : a(a_), b(b_), c(c_) {
        if (a * b + (Rational(1) - a) * c != Rational(1))
            throw std::domain_error("TripleParams: ab + (1-a)c != 1");
    }
};

// ---- Componentwise weight-changing operators on tuples. ----
//
// Tuples are handled in the free-top convention: operators that would need an
// embedding precondition on a fixed-length tuple simply lengthen it instead,
// so every operator below is total. New ambient weights follow the operator.

// delta_{k-m} on a tuple of length m+1 = top_index+1: component s becomes
// delta_{k-2s} F_s + (m + 1 - s) F_{s-1}. Preserves the length.
template <class C>
VVTuple<C> vv_raise(const VVTuple<C>& T) {
    const Rational& k = T.ambient_weight();
    long d = T.top_index();
    std::vector<NHForm<C>> out;
    for (long s = 0; s <= d; ++s)
        out.push_back(raise(T.component(s), k - Rational(2 * s)) +
                      T.component(s - 1) * Rational(d + 1 - s));
    return VVTuple<C>(k + Rational(2), std::move(out));
}

// Multiplication by the conjugate vector over -2iy: pure shift, component s
// becomes F_{s-1}; length grows by one, ambient weight + 2.
template <class C>
VVTuple<C> vv_ibar_over(const VVTuple<C>& T) {
    const Rational& k = T.ambient_weight();
    long d = T.top_index();
    std::vector<NHForm<C>> out;
    for (long s = 0; s <= d + 1; ++s) out.push_back(T.component(s - 1));
    return VVTuple<C>(k + Rational(2), std::move(out));
}

// The component-shift derivation D: component s becomes (s+1) F_{s+1};
// ambient weight - 2.
template <class C>
VVTuple<C> vv_D(const VVTuple<C>& T) {
    const Rational& k = T.ambient_weight();
    long d = T.top_index();
    std::vector<NHForm<C>> out;
    for (long s = 0; s <= d; ++s) out.push_back(T.component(s + 1) * Rational(s + 1));
    return VVTuple<C>(k - Rational(2), std::move(out));
}

// y^2 d/dtaubar on tuples: component s becomes
// y^2 d/dtaubar F_s + (s+1)/4 F_{s+1}; ambient weight - 2.
template <class C>
VVTuple<C> vv_lower(const VVTuple<C>& T) {
    const Rational& k = T.ambient_weight();
    long d = T.top_index();
    std::vector<NHForm<C>> out;
    for (long s = 0; s <= d; ++s)
        out.push_back(lower4(T.component(s)) * Rational(1, 4) +
                      T.component(s + 1) * Rational(s + 1, 4));
    return VVTuple<C>(k - Rational(2), std::move(out));
}

// delta-tilde_l, the limit raise with parameter l: component s becomes
// delta_{k-2s} F_s + (k - l + 1 - s) F_{s-1}, k the ambient weight of the
// input; length grows by one (the new top is (k - l - d) F_d). At l = k - m
// this is vv_raise up to the zero top.
template <class C>
VVTuple<C> vv_tilde_delta(const VVTuple<C>& T, const Rational& l) {
    const Rational& k = T.ambient_weight();
    long d = T.top_index();
    std::vector<NHForm<C>> out;
    for (long s = 0; s <= d + 1; ++s)
        out.push_back(raise(T.component(s), k - Rational(2 * s)) +
                      T.component(s - 1) * (k - l + Rational(1) - Rational(s)));
    return VVTuple<C>(k + Rational(2), std::move(out));
}

// The triple's lowering operator b * (4 y^2 d/dtaubar) - c * D.
template <class C>
VVTuple<C> vv_delta_bar(const VVTuple<C>& T, const TripleParams& p) {
    return vv_lower(T) * (Rational(4) * p.b) - vv_D(T) * p.c;
}

// Operator tags, used by the CLI dispatcher and the verification suites.
enum class VVOp { RaiseDelta, TildeDelta, Lower4, IbarOver, D, MulByWeight };

struct OperatorSpec {
    VVOp tag;
    Rational l;  // only for TildeDelta
};

template <class C>
VVTuple<C> apply_operator(const OperatorSpec& spec, const VVTuple<C>& T) {
    switch (spec.tag) {
        case VVOp::RaiseDelta: return vv_raise(T);
        case VVOp::TildeDelta: return vv_tilde_delta(T, spec.l);
        case VVOp::Lower4: return vv_lower(T) * Rational(4);
        case VVOp::IbarOver: return vv_ibar_over(T);
        case VVOp::D: return vv_D(T);
        case VVOp::MulByWeight: return T * T.ambient_weight();
    }
    throw std::logic_error("apply_operator: bad tag");
}

// ---- Verification reports. ----

struct ReportEntry {
    std::string relation;
    std::string params;
    bool passed = false;
    std::string witness;  // the verified scalar, or a counterexample dump
};

struct Report {
    std::vector<ReportEntry> entries;
    bool all_passed() const {
        for (auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

// Commutator table and sl2 suite over randomized symbolic tuples; defined in
// vvops.cpp on the SymCoeff realization.
Report check_commutators(long depth_bound, long samples, unsigned long seed);
Report check_sl2(const TripleParams& params, long depth_bound, long samples, unsigned long seed);

// Roundtrip of the tuple correspondence and transport of the five
// weight-changing operations across it.
Report check_correspondence(long depth_bound, long samples, unsigned long seed);

// Raising-tower closed form against iteration, and the full-cancellation
// identity delta_{-n}^{n+1} = d^{n+1}.
Report check_bol(long max_n);

}  // namespace qmf

#endif
