#ifndef QMF_LAPLACIAN_HPP
#define QMF_LAPLACIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "qmf/polynomial.hpp"
#include "qmf/vvops.hpp"

namespace qmf {

// ---- The Laplacian delta o delta-bar on tuples. ----

// Closed form of the composition: component s of the image is
//
//   b Delta_{k-2s} F_s + (b-c)(s+1) delta_{k-2-2s} F_{s+1}
//     + [(1-a)(k-2) - s + 1] ( s (b-c) F_s + 4 b y^2 d/dtaubar F_{s-1} )
//
// with Delta_w = raise(. , w-2) o lower4. Output has the same ambient weight
// and one more component slot (the new top vanishes in the cases the lift
// theory cares about). Terms with an exactly zero scalar coefficient are
// skipped, so coefficient rings that cannot represent a stray lowering are
// never asked to.
template <class C>
VVTuple<C> lap_closed(const VVTuple<C>& T, const TripleParams& p) {
    const Rational& k = T.ambient_weight();
    long d = T.top_index();
    Rational bc = p.b - p.c;
    std::vector<NHForm<C>> out;
    for (long s = 0; s <= d + 1; ++s) {
        Rational w = k - Rational(2 * s);
        NHForm<C> acc = NHForm<C>::zero(w);
        if (!p.b.is_zero()) acc += laplace(T.component(s), w) * p.b;
        Rational c1 = bc * Rational(s + 1);
        if (!c1.is_zero() && s + 1 <= d)
            acc += raise(T.component(s + 1), w - Rational(2)) * c1;
        Rational j1 = (Rational(1) - p.a) * (k - Rational(2)) - Rational(s) + Rational(1);
        if (!j1.is_zero()) {
            Rational c2 = j1 * Rational(s) * bc;
            if (!c2.is_zero()) acc += T.component(s) * c2;
            Rational c3 = j1 * p.b;
            if (!c3.is_zero() && s >= 1) acc += lower4(T.component(s - 1)) * c3;
        }
        out.push_back(acc);
    }
    return VVTuple<C>(k, std::move(out));
}

// The same operator as an honest composition of the triple's raise and
// lower; the raise acts on the lowered tuple, so its index is a(k-2).
template <class C>
VVTuple<C> lap_composed(const VVTuple<C>& T, const TripleParams& p) {
    VVTuple<C> low = vv_delta_bar(T, p);
    return vv_tilde_delta(low, p.a * (T.ambient_weight() - Rational(2)));
}

// Eigenvalues follow the usual spectral convention: lambda is an eigenvalue
// when lap(T) + lambda T = 0.
template <class C>
VVTuple<C> eigen_residual(const VVTuple<C>& T, const TripleParams& p, const Rational& lambda0) {
    return lap_closed(T, p) + T * lambda0;
}

template <class C>
bool verify_eigen(const VVTuple<C>& T, const TripleParams& p, const Rational& lambda0) {
    return eigen_residual(T, p, lambda0).is_zero();
}

// ---- Eigenvalue shifts along the ladder (single raise / lower step). ----

// Moving down: an eigenfunction h = delta_l g of nonzero eigenvalue kappa has
// g = lower4(h) / (-kappa). Moving up: psi = lower4(phi) of eigenvalue
// nu != -l has phi = raise(psi, l) / (-l - nu), up to the respective kernels.
// kappa = 0 (resp. nu = -l) is the degenerate branch where the function is
// already meromorphic (resp. conjugate-meromorphic) and no shift applies.
template <class C>
NHForm<C> eigen_shift(const NHForm<C>& h, const Rational& l, const Rational& eig, bool down) {
    if (down) {
        if (eig.is_zero())
            throw std::domain_error("eigen_shift: harmonic input, preimage is meromorphic");
        return lower4(h) * (Rational(-1) / eig);
    }
    if (eig == -l)
        throw std::domain_error("eigen_shift: eigenvalue -l, degenerate upward shift");
    return raise(h, l) * (Rational(-1) / (l + eig));
}

// ---- Branch classification for the lift problem. ----

enum class LiftBranch {
    GenericMer,     // b != 0, no integral degeneracy
    IntegralJ,      // b != 0, (1-a)(k-2) = j-1 with 1 <= j <= d
    IntegralP,      // b != 0, k = d+p with 1 <= p <= d
    IntegralJP,     // both of the above
    MuBranch,       // b != 0, (1-a)(k-2) = d: lifts of Laplace eigenfunctions
    BZero,          // b = 0, generic
    BZeroIntegral,  // b = 0, (1-a)(k-2) = d-1+j0 with 0 <= j0 < d
};

std::string branch_name(LiftBranch b);

struct LiftProblem {
    TripleParams abc;
    Rational k;
    long d;
    LiftBranch branch;
    long j = -1;   // IntegralJ / IntegralJP
    long p = -1;   // IntegralP / IntegralJP
    long j0 = -1;  // BZeroIntegral

    static LiftProblem classify(const TripleParams& abc, const Rational& k, long d);
};

// ---- The coefficient recursion. ----

// Result of the symbolic (lambda left formal) pass of the three-term
// recursion. alpha[s] is a polynomial in lambda for s_min <= s <= d, with
// alpha[d] = 1; below s_min the coefficients depend on the root chosen and on
// free parameters, and are produced by lift_coefficients. The eigenvalue
// polynomial comes from the first equation that fails to define the next
// coefficient (the s = 0 equation in the generic case).
struct AlphaSolveResult {
    LiftProblem prob;
    Rational mu0;
    std::vector<UniPoly> alpha;
    long s_min = 0;
    UniPoly eigen_raw;    // as accumulated by the recursion
    UniPoly eigen_monic;  // cleared to leading coefficient 1
};

// mu0 is the eigenvalue parameter of the lifted form (0 for meromorphic
// input); nonzero values are meaningful in the MuBranch.
AlphaSolveResult solve_alpha(const LiftProblem& prob, const Rational& mu0 = Rational(0));

struct LiftCoeffs {
    enum class Status { Unique, NoLift, ExtraFreedom };
    Status status = Status::Unique;
    std::vector<Rational> alpha;  // s = 0..d; meaningful when status == Unique
    std::string note;
};

// Complete the recursion at a specific rational root lambda0: evaluates the
// symbolic coefficients and resolves the degenerate equations (free
// parameters pinned by the remaining affine constraints, or reported as
// missing/extra).
LiftCoeffs lift_coefficients(const AlphaSolveResult& sol, const Rational& lambda0);

// ---- The b = 0 family. ----

// b = 0 forces c = 1/(1-a); the only eigenvalue in depth d is
// lambda = d (k - 2 + (1-d)/(1-a)). In the integral case
// (1-a)(k-2) = d-1+j0 the table truncates to s > j0 and the lifted form must
// satisfy delta_{k-2d}^{d-j0} phi = 0, which is returned as annihilate_power.
struct BetaSolveResult {
    Rational lambda;
    std::vector<Rational> beta;  // s = 0..d
    long annihilate_power = 0;   // 0 when no side condition applies
};

BetaSolveResult solve_beta(const LiftProblem& prob);

// ---- Building and verifying lifts over nearly holomorphic coefficients. ----

// F_s = alpha_s delta_{k-2d}^{d-s} phi. For b != 0 branches phi must be
// meromorphic (depth 0, killed by the lowering operator); mu0 = 0 throughout
// this entry point. For b = 0, phi may be any representable form, subject to
// the annihilation side condition in the integral case.
template <class C>
VVTuple<C> build_lift(const LiftProblem& prob, const Rational& lambda0, const NHForm<C>& phi) {
    Rational w0 = prob.k - Rational(2 * prob.d);
    if (phi.weight() != w0)
        throw std::domain_error("build_lift: phi has weight " + phi.weight().str() +
                                ", expected " + w0.str());
    std::vector<Rational> coef;
    if (prob.abc.b.is_zero()) {
        BetaSolveResult b = solve_beta(prob);
        if (lambda0 != b.lambda)
            throw std::domain_error("build_lift: lambda is not the b=0 eigenvalue " +
                                    b.lambda.str());
        if (b.annihilate_power > 0 && !delta_power(phi, w0, b.annihilate_power).is_zero())
            throw std::domain_error("build_lift: phi is not annihilated by delta^" +
                                    std::to_string(b.annihilate_power));
        coef = b.beta;
    } else {
        if (!lower4(phi).is_zero())
            throw std::domain_error("build_lift: phi must be meromorphic for b != 0");
        AlphaSolveResult sol = solve_alpha(prob);
        LiftCoeffs lc = lift_coefficients(sol, lambda0);
        if (lc.status != LiftCoeffs::Status::Unique)
            throw std::domain_error("build_lift: " + lc.note);
        coef = lc.alpha;
    }
    std::vector<NHForm<C>> out;
    for (long s = 0; s <= prob.d; ++s)
        out.push_back(delta_power(phi, w0, prob.d - s) * coef[s]);
    return VVTuple<C>(prob.k, std::move(out));
}

// ---- The quasi-modular side of a lift. ----

// Companion functions of the quasi-modular form attached to a lift with
// coefficients alpha_s:
//
//   f_r = sum_{p=0}^{d-r} [ sum_{s=r}^{d-p} (-1)^{d-s-p} binom(s,r)
//           binom(d-s,p) alpha_s prod_{i=p}^{d-s-1} (k-2d+i) ]
//         d^p phi Y^{d-r-p}
//
// (the sign flip relative to the tuple side comes from expanding the raising
// towers in powers of -2iy). Must coincide with tuple_to_qm of the lift.
template <class C>
QMForm<C> qm_eigen_output(const LiftProblem& prob, const std::vector<Rational>& alpha,
                          const NHForm<C>& phi) {
    const Rational& k = prob.k;
    long d = prob.d;
    Rational w0 = k - Rational(2 * d);
    std::vector<NHForm<C>> comp;
    for (long r = 0; r <= d; ++r) {
        Rational wr = k - Rational(2 * r);
        NHForm<C> fr = NHForm<C>::zero(wr);
        for (long p = 0; p <= d - r; ++p) {
            Rational inner(0);
            for (long s = r; s <= d - p; ++s) {
                Rational term = binomial(s, r) * binomial(d - s, p) * alpha.at(s);
                for (long i = p; i <= d - s - 1; ++i) term *= (w0 + Rational(i));
                if ((d - s - p) % 2 == 1) term = -term;
                inner += term;
            }
            if (inner.is_zero()) continue;
            NHForm<C> dp = phi;
            for (long i = 0; i < p; ++i) dp = partial_tau(dp);
            for (long i = 0; i < d - r - p; ++i) dp = mulY(dp);
            fr += dp * inner;
        }
        comp.push_back(fr);
    }
    return QMForm<C>(k, std::move(comp));
}

inline Rational rational_pow(const Rational& x, long n) {
    Rational r(1);
    for (long i = 0; i < n; ++i) r *= x;
    return r;
}

// Closed form of the harmonic (lambda = 0) lift's quasi-modular form for
// b != 0, b != c:
//   f_r = binom(d,r) sum_p binom(d-r,p) (b-c)^p c^{d-r-p}
//            / (b^{d-r} prod_{i=0}^{p-1} (k-2d+i)) d^p phi Y^{d-r-p}.
template <class C>
QMForm<C> expeigen_harmonic(const LiftProblem& prob, const NHForm<C>& phi) {
    const Rational& k = prob.k;
    long d = prob.d;
    Rational w0 = k - Rational(2 * d);
    std::vector<NHForm<C>> comp;
    for (long r = 0; r <= d; ++r) {
        NHForm<C> fr = NHForm<C>::zero(k - Rational(2 * r));
        for (long p = 0; p <= d - r; ++p) {
            Rational c = binomial(d, r) * binomial(d - r, p) *
                         rational_pow(prob.abc.b - prob.abc.c, p) *
                         rational_pow(prob.abc.c, d - r - p) /
                         rational_pow(prob.abc.b, d - r);
            for (long i = 0; i <= p - 1; ++i) c /= (w0 + Rational(i));
            if (c.is_zero()) continue;
            NHForm<C> dp = phi;
            for (long i = 0; i < p; ++i) dp = partial_tau(dp);
            for (long i = 0; i < d - r - p; ++i) dp = mulY(dp);
            fr += dp * c;
        }
        comp.push_back(fr);
    }
    return QMForm<C>(k, std::move(comp));
}

// Closed form for b = c = 1 at the eigenvalue q (k - 2d + q - 1):
//   f_r = sum_{h=0}^{min(q, d-r)} binom(q,h) binom(d-h,r)
//           prod_{i=0}^{h-1} (k-2d+q-1+i) / ((k-2d+i) [(1-a)(k-2)+1-d+i])
//         delta^h phi Y^{d-r-h}.
// The [(1-a)(k-2)+1-d+i] factor comes from the pivot of the coefficient
// recursion; the triple's raise index a(k-2) enters the lift even though the
// eigenvalue ladder itself does not depend on a.
template <class C>
QMForm<C> expeigen_bc1(const LiftProblem& prob, long q, const NHForm<C>& phi) {
    const Rational& k = prob.k;
    long d = prob.d;
    Rational w0 = k - Rational(2 * d);
    Rational abr = (Rational(1) - prob.abc.a) * (k - Rational(2));
    std::vector<NHForm<C>> comp;
    for (long r = 0; r <= d; ++r) {
        NHForm<C> fr = NHForm<C>::zero(k - Rational(2 * r));
        long hmax = std::min(q, d - r);
        for (long h = 0; h <= hmax; ++h) {
            Rational c = binomial(q, h) * binomial(d - h, r);
            for (long i = 0; i <= h - 1; ++i)
                c *= (w0 + Rational(q - 1 + i)) /
                     ((w0 + Rational(i)) * (abr + Rational(1 - d + i)));
            if (c.is_zero()) continue;
            NHForm<C> t = delta_power(phi, w0, h);
            for (long i = 0; i < d - r - h; ++i) t = mulY(t);
            fr += t * c;
        }
        comp.push_back(fr);
    }
    return QMForm<C>(k, std::move(comp));
}

// Closed form for b = 0 at the unique eigenvalue:
//   f_r = binom(d,r) sum_h binom(d-r,h) delta^h phi Y^{d-r-h}
//           prod_{i=0}^{h-1} 1/((1-a)(k-2)+2-2d+i),
// with the h-range capped at d-1-j0 in the integral case.
template <class C>
QMForm<C> expeigen_b0(const LiftProblem& prob, const NHForm<C>& phi) {
    const Rational& k = prob.k;
    long d = prob.d;
    Rational w0 = k - Rational(2 * d);
    Rational base = (Rational(1) - prob.abc.a) * (k - Rational(2)) + Rational(2 - 2 * d);
    long hcap = prob.branch == LiftBranch::BZeroIntegral ? d - 1 - prob.j0 : d;
    std::vector<NHForm<C>> comp;
    for (long r = 0; r <= d; ++r) {
        NHForm<C> fr = NHForm<C>::zero(k - Rational(2 * r));
        for (long h = 0; h <= std::min(d - r, hcap); ++h) {
            Rational c = binomial(d, r) * binomial(d - r, h);
            for (long i = 0; i <= h - 1; ++i) c /= (base + Rational(i));
            NHForm<C> t = delta_power(phi, w0, h);
            for (long i = 0; i < d - r - h; ++i) t = mulY(t);
            fr += t * c;
        }
        comp.push_back(fr);
    }
    return QMForm<C>(k, std::move(comp));
}

// ---- Delta-towers over an abstract Laplace eigenfunction. ----

// c delta_{w0}^t phi for an abstract phi of weight w0 with
// Delta_{w0} phi = -mu phi. Raising at the running weight climbs the tower;
// the lowering and Laplace actions rewrite through the eigenvalue
// nu_t = mu + t (w0 + t - 1) of the t-th stage.
struct TowerTerm {
    Rational w0;
    Rational mu;
    long t = 0;
    Rational coeff;

    Rational weight() const { return w0 + Rational(2 * t); }
    Rational eigenvalue() const { return mu + Rational(t) * (w0 + Rational(t - 1)); }
    bool is_zero() const { return coeff.is_zero(); }
};

TowerTerm tower_raise(const TowerTerm& x, const Rational& l);
TowerTerm tower_lower4(const TowerTerm& x);
TowerTerm tower_laplace(const TowerTerm& x);
TowerTerm tower_eigen_shift(const TowerTerm& h, const Rational& l, const Rational& eig, bool down);

// Lift with tower components: component s is coeff[s] * delta^{d-s} phi.
struct TowerLift {
    LiftProblem prob;
    Rational mu;
    Rational lambda;
    std::vector<Rational> coeff;  // s = 0..d
};

// Build the MuBranch lift at a rational (lambda0, mu0) with
// P(lambda0, mu0) = 0, and verify it against the closed-form Laplacian
// evaluated through the tower rewriting.
TowerLift build_lift_tower(const LiftProblem& prob, const Rational& lambda0, const Rational& mu0);
bool verify_eigen_tower(const TowerLift& lift);

// ---- The bivariate eigenvalue data of the MuBranch. ----

struct MuSolveResult {
    LiftProblem prob;
    std::vector<BiPoly> alpha_num;   // s = 0..d, numerators in (lambda, mu)
    std::vector<UniPoly> alpha_den;  // denominators in mu
    BiPoly eigen;                    // monic of degree d+1 in lambda
    UniPoly disc;                    // discriminant in mu
};

MuSolveResult solve_alpha_mu(const LiftProblem& prob);

// ---- Per-depth eigenvalue enumeration. ----

struct DepthEigen {
    long d;
    LiftBranch branch;
    bool b_zero = false;
    Rational b0_lambda;   // when b_zero
    UniPoly poly_monic;   // when !b_zero (mu0 = 0 instantiation)
    RootList roots;       // rational roots of poly_monic
};

std::vector<DepthEigen> enumerate_eigenvalues(const TripleParams& abc, const Rational& k,
                                              long depth_bound);

}  // namespace qmf

#endif
