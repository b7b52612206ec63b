#ifndef QMF_QUASIMOD_HPP
#define QMF_QUASIMOD_HPP

#include <stdexcept>
#include <vector>

#include "qmf/nhform.hpp"

namespace qmf {

namespace detail {

template <class C>
void trim_components(std::vector<NHForm<C>>& comp) {
    while (comp.size() > 1 && comp.back().is_zero()) comp.pop_back();
    if (comp.size() == 1 && comp[0].is_zero()) comp.clear();
}

// Force component r to weight k - 2r; a nonzero component with a different
// declared weight is a construction error.
template <class C>
std::vector<NHForm<C>> normalize_components(const Rational& k, std::vector<NHForm<C>> comp) {
    for (size_t r = 0; r < comp.size(); ++r) {
        Rational want = k - Rational(2 * static_cast<long>(r));
        if (!comp[r].is_zero() && comp[r].weight() != want)
            throw std::domain_error("component " + std::to_string(r) + " has weight " +
                                    comp[r].weight().str() + ", expected " + want.str());
        comp[r] = comp[r].with_weight(want);
    }
    trim_components(comp);
    return comp;
}

}  // namespace detail

// Quasi-modular form of weight k as the list of its companion functions
// (f_0, ..., f_d); f_0 is the form itself and f_r carries weight k - 2r. The
// depth is recomputed by trimming trailing zero components after every
// operation rather than trusted, so that forced cancellations are observed.
template <class C>
class QMForm {
public:
    QMForm() : k_(0) {}
    explicit QMForm(const Rational& k) : k_(k) {}
    QMForm(const Rational& k, std::vector<NHForm<C>> components)
        : k_(k), comp_(detail::normalize_components(k, std::move(components))) {}

    static QMForm depth0(const NHForm<C>& f) { return QMForm(f.weight(), {f}); }

    const Rational& weight() const { return k_; }
    bool is_zero() const { return comp_.empty(); }
    long depth() const { return comp_.empty() ? 0 : static_cast<long>(comp_.size()) - 1; }
    const std::vector<NHForm<C>>& components() const { return comp_; }
    NHForm<C> component(long r) const {
        if (r < 0 || r >= static_cast<long>(comp_.size()))
            return NHForm<C>::zero(k_ - Rational(2 * r));
        return comp_[r];
    }

    friend bool operator==(const QMForm& a, const QMForm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.k_ == b.k_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const QMForm& a, const QMForm& b) { return !(a == b); }

    QMForm operator-() const {
        QMForm r(k_);
        for (auto& f : comp_) r.comp_.push_back(-f);
        return r;
    }
    friend QMForm operator+(const QMForm& a, const QMForm& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.k_ != b.k_) throw std::domain_error("QMForm: adding different weights");
        std::vector<NHForm<C>> out;
        size_t n = std::max(a.comp_.size(), b.comp_.size());
        for (size_t r = 0; r < n; ++r)
            out.push_back(a.component(static_cast<long>(r)) + b.component(static_cast<long>(r)));
        return QMForm(a.k_, std::move(out));
    }
    friend QMForm operator-(const QMForm& a, const QMForm& b) { return a + (-b); }
    template <class S>
    QMForm scaled(const S& s) const {
        std::vector<NHForm<C>> out;
        for (auto& f : comp_) out.push_back(f.scaled(s));
        return QMForm(k_, std::move(out));
    }
    friend QMForm operator*(const QMForm& a, const Rational& r) { return a.scaled(r); }
    friend QMForm operator*(const Rational& r, const QMForm& a) { return a.scaled(r); }
    friend QMForm operator*(const QMForm& a, const Scalar& s) { return a.scaled(s); }

private:
    Rational k_;
    std::vector<NHForm<C>> comp_;
};

// Vector-valued presentation: the tuple (F_0, ..., F_d) with F_s of weight
// k - 2s, k being the ambient weight. Same storage discipline as QMForm.
template <class C>
class VVTuple {
public:
    VVTuple() : k_(0) {}
    explicit VVTuple(const Rational& k) : k_(k) {}
    VVTuple(const Rational& k, std::vector<NHForm<C>> components)
        : k_(k), comp_(detail::normalize_components(k, std::move(components))) {}

    const Rational& ambient_weight() const { return k_; }
    bool is_zero() const { return comp_.empty(); }
    long top_index() const { return comp_.empty() ? 0 : static_cast<long>(comp_.size()) - 1; }
    const std::vector<NHForm<C>>& components() const { return comp_; }
    NHForm<C> component(long s) const {
        if (s < 0 || s >= static_cast<long>(comp_.size()))
            return NHForm<C>::zero(k_ - Rational(2 * s));
        return comp_[s];
    }

    friend bool operator==(const VVTuple& a, const VVTuple& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.k_ == b.k_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const VVTuple& a, const VVTuple& b) { return !(a == b); }

    VVTuple operator-() const {
        VVTuple r(k_);
        for (auto& f : comp_) r.comp_.push_back(-f);
        return r;
    }
    friend VVTuple operator+(const VVTuple& a, const VVTuple& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.k_ != b.k_) throw std::domain_error("VVTuple: adding different ambient weights");
        std::vector<NHForm<C>> out;
        size_t n = std::max(a.comp_.size(), b.comp_.size());
        for (size_t s = 0; s < n; ++s)
            out.push_back(a.component(static_cast<long>(s)) + b.component(static_cast<long>(s)));
        return VVTuple(a.k_, std::move(out));
    }
    friend VVTuple operator-(const VVTuple& a, const VVTuple& b) { return a + (-b); }
    template <class S>
    VVTuple scaled(const S& s) const {
        std::vector<NHForm<C>> out;
        for (auto& f : comp_) out.push_back(f.scaled(s));
        return VVTuple(k_, std::move(out));
    }
    friend VVTuple operator*(const VVTuple& a, const Rational& r) { return a.scaled(r); }
    friend VVTuple operator*(const Rational& r, const VVTuple& a) { return a.scaled(r); }

private:
    Rational k_;
    std::vector<NHForm<C>> comp_;
};

// ---- The five weight-changing operations on quasi-modular forms. ----

// d/dtau: weight + 2, depth can grow by 1. Component r becomes
// d(f_r)/dtau + (k + 1 - r) f_{r-1}.
template <class C>
QMForm<C> qm_derive(const QMForm<C>& f) {
    const Rational& k = f.weight();
    long d = f.depth();
    std::vector<NHForm<C>> out;
    for (long r = 0; r <= d + 1; ++r)
        out.push_back(partial_tau(f.component(r)) +
                      f.component(r - 1) * (k + Rational(1) - Rational(r)));
    return QMForm<C>(k + Rational(2), std::move(out));
}

// Division by -2iy, i.e. multiplication by Y: component r becomes
// Y f_r + f_{r-1}; weight + 2, depth can grow by 1.
template <class C>
QMForm<C> qm_div_neg2iy(const QMForm<C>& f) {
    const Rational& k = f.weight();
    long d = f.depth();
    std::vector<NHForm<C>> out;
    for (long r = 0; r <= d + 1; ++r) out.push_back(mulY(f.component(r)) + f.component(r - 1));
    return QMForm<C>(k + Rational(2), std::move(out));
}

// delta_{k-d}: the depth-preserving raise. Component r becomes
// delta_{k-d} f_r + (d + 1 - r) f_{r-1}; the would-be component d + 1 cancels
// identically, which is asserted.
template <class C>
QMForm<C> qm_delta(const QMForm<C>& f) {
    const Rational& k = f.weight();
    long d = f.depth();
    std::vector<NHForm<C>> out;
    for (long r = 0; r <= d + 1; ++r)
        out.push_back(raise(f.component(r), k - Rational(d)) +
                      f.component(r - 1) * Rational(d + 1 - r));
    if (!out.back().is_zero())
        throw std::logic_error("qm_delta: top component failed to cancel");
    return QMForm<C>(k + Rational(2), std::move(out));
}

// y^2 d/dtaubar componentwise; weight - 2, depth does not grow.
template <class C>
QMForm<C> qm_lower(const QMForm<C>& f) {
    long d = f.depth();
    std::vector<NHForm<C>> out;
    for (long r = 0; r <= d; ++r) out.push_back(lower4(f.component(r)) * Rational(1, 4));
    return QMForm<C>(f.weight() - Rational(2), std::move(out));
}

// f -> f_1 with its own companions: component r becomes (r+1) f_{r+1};
// weight - 2, depth - 1.
template <class C>
QMForm<C> qm_shift1(const QMForm<C>& f) {
    long d = f.depth();
    std::vector<NHForm<C>> out;
    for (long r = 0; r + 1 <= d; ++r) out.push_back(f.component(r + 1) * Rational(r + 1));
    if (out.empty()) out.push_back(NHForm<C>::zero(f.weight() - Rational(2)));
    return QMForm<C>(f.weight() - Rational(2), std::move(out));
}

// Product: weights and depths add; components convolve.
template <class C>
QMForm<C> qm_mul(const QMForm<C>& f, const QMForm<C>& g) {
    Rational k = f.weight() + g.weight();
    if (f.is_zero() || g.is_zero()) return QMForm<C>(k);
    long d = f.depth(), e = g.depth();
    std::vector<NHForm<C>> out;
    for (long r = 0; r <= d + e; ++r) {
        NHForm<C> acc = NHForm<C>::zero(k - Rational(2 * r));
        for (long i = std::max(0L, r - e); i <= std::min(d, r); ++i)
            acc += nh_mul(f.component(i), g.component(r - i));
        out.push_back(acc);
    }
    return QMForm<C>(k, std::move(out));
}

// ---- The correspondence with tuples. ----

// F_s = sum_{r >= s} binom(r, s) f_r / (2iy)^{r-s}, with 1/(2iy) = -Y.
template <class C>
VVTuple<C> qm_to_tuple(const QMForm<C>& f) {
    const Rational& k = f.weight();
    long d = f.depth();
    std::vector<NHForm<C>> out;
    for (long s = 0; s <= d; ++s) {
        NHForm<C> acc = NHForm<C>::zero(k - Rational(2 * s));
        for (long r = s; r <= d; ++r) {
            NHForm<C> term = f.component(r);
            for (long j = 0; j < r - s; ++j) term = mulY(term);
            Rational coef = binomial(r, s);
            if ((r - s) % 2 == 1) coef = -coef;
            acc += term * coef;
        }
        out.push_back(acc);
    }
    return VVTuple<C>(k, std::move(out));
}

// Inverse: f_r = sum_{s >= r} binom(s, r) F_s / (-2iy)^{s-r} with
// 1/(-2iy) = Y.
template <class C>
QMForm<C> tuple_to_qm(const VVTuple<C>& T) {
    const Rational& k = T.ambient_weight();
    long d = T.top_index();
    std::vector<NHForm<C>> out;
    for (long r = 0; r <= d; ++r) {
        NHForm<C> acc = NHForm<C>::zero(k - Rational(2 * r));
        for (long s = r; s <= d; ++s) {
            NHForm<C> term = T.component(s);
            for (long j = 0; j < s - r; ++j) term = mulY(term);
            acc += term * binomial(s, r);
        }
        out.push_back(acc);
    }
    return QMForm<C>(k, std::move(out));
}

// Pad with zero components up to new_len entries. The image of the embedding
// is exactly the tuples whose last coordinate vanishes; with trailing-zero
// trimming the embedding is the identity on stored data, which keeps it an
// exact section of the truncation.
template <class C>
VVTuple<C> tuple_embed(const VVTuple<C>& T, long new_len) {
    long len = T.is_zero() ? 0 : T.top_index() + 1;
    if (new_len < len) throw std::domain_error("tuple_embed: target length too small");
    return T;
}

}  // namespace qmf

#endif
