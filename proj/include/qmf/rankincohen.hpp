#ifndef QMF_RANKINCOHEN_HPP
#define QMF_RANKINCOHEN_HPP

#include <vector>

#include "qmf/quasimod.hpp"
#include "qmf/symcoeff.hpp"
#include "qmf/vvops.hpp"

namespace qmf {

// Bracket parameters: n-th bracket between depth-d weight-k forms and
// depth-e weight-l forms.
struct RCParams {
    long n;
    Rational k;
    long d;
    Rational l;
    long e;
};

// Solved coefficient data: one basis vector {a_0..a_n} outside the excluded
// parameter region, two inside it. The stored a_r follow the closed-form
// normalization; the coefficient of d^r f (x) d^{n-r} g is binom(n, r) a_r.
struct RCCoeffs {
    long n = 0;
    bool excluded = false;
    std::vector<std::vector<Rational>> basis;

    Rational term_coeff(size_t which, long r) const {
        return binomial(n, r) * basis.at(which).at(r);
    }
};

// True iff both d-k and e-l are non-negative integers and
// max(d-k, e-l) < n <= d+e-k-l+1; there the solution space is 2-dimensional.
bool rc_is_excluded(const RCParams& p);

// Exact dimension of the kernel of the t = 1 linear system
// a_s (l-e+n-s-1) + a_{s+1} (k-d+s) = 0, 0 <= s < n.
long rc_kernel_dim(const RCParams& p);

// Kernel basis of the t = 1 system by forward substitution over exact
// rationals, with vanishing pivots detected explicitly.
std::vector<std::vector<Rational>> rc_kernel_basis(const RCParams& p);

// Closed-form coefficients a_r = (-1)^r prod_{j=r}^{n-1}(k-d+j)
// prod_{q=n-r}^{n-1}(l-e+q); only valid outside the excluded region.
std::vector<Rational> rc_closed_form(const RCParams& p);

// The two closed-form basis vectors of the excluded case (piecewise
// factorial quotients; entries with negative factorial arguments are zero).
std::vector<Rational> rc_excluded_first(const RCParams& p);
std::vector<Rational> rc_excluded_second(const RCParams& p);

// Solve the system: kernel by forward substitution, cross-checked against the
// closed forms, which are what gets returned (so output follows the closed-form
// normalization, not an arbitrary kernel scaling).
RCCoeffs rc_solve(const RCParams& p);

// Apply the bracket: sum_r binom(n,r) a_r (d^r f) (d^{n-r} g) via qm_derive
// and qm_mul. Inputs must match the declared weights and respect the depth
// bounds; the output is asserted to have weight k+l+2n and depth <= d+e.
template <class C>
QMForm<C> rc_apply(const RCParams& p, const QMForm<C>& f, const QMForm<C>& g,
                   const std::vector<Rational>& a) {
    if (f.weight() != p.k || g.weight() != p.l)
        throw std::domain_error("rc_apply: weight mismatch");
    if (f.depth() > p.d || g.depth() > p.e)
        throw std::domain_error("rc_apply: depth exceeds declared bound");
    if (static_cast<long>(a.size()) != p.n + 1)
        throw std::domain_error("rc_apply: coefficient count");

    Rational out_weight = p.k + p.l + Rational(2 * p.n);
    QMForm<C> acc(out_weight);
    std::vector<QMForm<C>> df{f}, dg{g};
    for (long i = 0; i < p.n; ++i) {
        df.push_back(qm_derive(df.back()));
        dg.push_back(qm_derive(dg.back()));
    }
    for (long r = 0; r <= p.n; ++r) {
        Rational c = binomial(p.n, r) * a[r];
        if (c.is_zero()) continue;
        acc = acc + qm_mul(df[r], dg[p.n - r]).scaled(c);
    }
    if (acc.depth() > p.d + p.e)
        throw std::logic_error("rc_apply: depth cancellation failed");
    return acc;
}

// Y-freeness certificate from the bracket's construction: expand
// sum_r binom(n,r) a_r delta^r phi (x) delta^{n-r} psi on two fresh symbols
// and check that every Y^t coefficient with t >= 1 vanishes identically.
Report rc_holomorphy_certificate(const RCParams& p, const std::vector<Rational>& a);

}  // namespace qmf

#endif
