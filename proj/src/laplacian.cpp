#include "qmf/laplacian.hpp"

#include <map>
#include <set>
#include <sstream>

namespace qmf {

std::string branch_name(LiftBranch b) {
    switch (b) {
        case LiftBranch::GenericMer: return "generic";
        case LiftBranch::IntegralJ: return "integral-j";
        case LiftBranch::IntegralP: return "integral-p";
        case LiftBranch::IntegralJP: return "integral-jp";
        case LiftBranch::MuBranch: return "mu";
        case LiftBranch::BZero: return "b0";
        case LiftBranch::BZeroIntegral: return "b0-integral";
    }
    return "?";
}

LiftProblem LiftProblem::classify(const TripleParams& abc, const Rational& k, long d) {
    if (d < 0) throw std::domain_error("LiftProblem: negative depth");
    LiftProblem prob{abc, k, d, LiftBranch::GenericMer};
    Rational q = (Rational(1) - abc.a) * (k - Rational(2));
    Rational p = k - Rational(d);
    if (abc.b.is_zero()) {
        if (d >= 1 && q.is_integer() && q >= Rational(d - 1) && q <= Rational(2 * d - 2)) {
            prob.branch = LiftBranch::BZeroIntegral;
            prob.j0 = (q - Rational(d - 1)).to_long();
        } else {
            prob.branch = LiftBranch::BZero;
        }
        return prob;
    }
    if (q == Rational(d)) {
        prob.branch = LiftBranch::MuBranch;
        if (p.is_integer() && p >= Rational(1) && p <= Rational(d)) prob.p = p.to_long();
        return prob;
    }
    bool jint = q.is_integer() && q >= Rational(0) && q <= Rational(d - 1);
    bool pint = p.is_integer() && p >= Rational(1) && p <= Rational(d);
    if (jint) prob.j = q.to_long() + 1;
    if (pint) prob.p = p.to_long();
    if (jint && pint)
        prob.branch = LiftBranch::IntegralJP;
    else if (jint)
        prob.branch = LiftBranch::IntegralJ;
    else if (pint)
        prob.branch = LiftBranch::IntegralP;
    else
        prob.branch = LiftBranch::GenericMer;
    return prob;
}

namespace {

// Scalar data of the three-term recursion
//   A_s alpha_s + B_s alpha_{s+1} - piv_s alpha_{s-1} = 0,
// with mu0 the eigenvalue parameter of the lifted form (0 for meromorphic).
struct Coefs {
    Rational a, b, c, k;
    long d;
    Rational mu0;

    Rational j1(long s) const {
        return (Rational(1) - a) * (k - Rational(2)) - Rational(s) + Rational(1);
    }
    // eigenvalue of the tower stage carried by F_s
    Rational eig(long s) const {
        return mu0 + Rational(d - s) * (k - Rational(d + s + 1));
    }
    Rational A_const(long s) const {
        return Rational(s) * (b - c) * j1(s) - b * eig(s);
    }
    UniPoly A(long s) const { return UniPoly::linear(Rational(1), A_const(s)); }
    Rational B(long s) const { return (b - c) * Rational(s + 1); }
    Rational piv(long s) const {
        return b * j1(s) * (mu0 + Rational(d - s + 1) * (k - Rational(s + d)));
    }
};

Coefs make_coefs(const LiftProblem& prob, const Rational& mu0) {
    return Coefs{prob.abc.a, prob.abc.b, prob.abc.c, prob.k, prob.d, mu0};
}

// Affine expression in the free parameters introduced at degenerate pivots.
struct Affine {
    Rational c0;
    std::map<long, Rational> f;

    static Affine constant(const Rational& r) { return Affine{r, {}}; }
    static Affine free_var(long id) { return Affine{Rational(0), {{id, Rational(1)}}}; }
    bool is_const() const { return f.empty(); }

    Affine operator*(const Rational& r) const {
        Affine out;
        out.c0 = c0 * r;
        if (!r.is_zero())
            for (auto& [i, v] : f) out.f[i] = v * r;
        return out;
    }
    Affine operator+(const Affine& o) const {
        Affine out = *this;
        out.c0 += o.c0;
        for (auto& [i, v] : o.f) {
            out.f[i] += v;
            if (out.f[i].is_zero()) out.f.erase(i);
        }
        return out;
    }
    void subst(long id, const Affine& val) {
        auto it = f.find(id);
        if (it == f.end()) return;
        Rational coef = it->second;
        f.erase(it);
        *this = *this + val * coef;
    }
};

}  // namespace

AlphaSolveResult solve_alpha(const LiftProblem& prob, const Rational& mu0) {
    if (prob.abc.b.is_zero())
        throw std::domain_error("solve_alpha: b = 0 parameters use solve_beta");
    Coefs cf = make_coefs(prob, mu0);
    long d = prob.d;

    // Degenerate pivot indices the classification expects (checked for the
    // meromorphic case; the mu-branch inherits whatever mu0 produces).
    if (mu0.is_zero()) {
        std::set<long> expect;
        if (prob.branch == LiftBranch::IntegralJ || prob.branch == LiftBranch::IntegralJP)
            expect.insert(prob.j);
        if (prob.branch == LiftBranch::IntegralP || prob.branch == LiftBranch::IntegralJP)
            expect.insert(prob.p);
        if (prob.branch == LiftBranch::MuBranch && prob.p >= 1) expect.insert(prob.p);
        std::set<long> seen;
        for (long s = 1; s <= d; ++s)
            if (cf.piv(s).is_zero()) seen.insert(s);
        if (seen != expect)
            throw std::logic_error("solve_alpha: pivot degeneracies disagree with branch " +
                                   branch_name(prob.branch));
    }

    AlphaSolveResult out;
    out.prob = prob;
    out.mu0 = mu0;
    out.alpha.assign(d + 2, UniPoly());
    out.alpha[d] = UniPoly(Rational(1));
    out.s_min = 0;
    for (long s = d; s >= 1; --s) {
        UniPoly combo = cf.A(s) * out.alpha[s] + out.alpha[s + 1] * cf.B(s);
        Rational piv = cf.piv(s);
        if (piv.is_zero()) {
            out.eigen_raw = combo;
            out.s_min = s;
            break;
        }
        out.alpha[s - 1] = combo / piv;
    }
    if (out.s_min == 0)
        out.eigen_raw = cf.A(0) * out.alpha[0] + out.alpha[1] * cf.B(0);
    if (out.eigen_raw.is_zero())
        throw std::logic_error("solve_alpha: vanishing eigenvalue polynomial");
    out.eigen_monic = out.eigen_raw.monic();
    return out;
}

LiftCoeffs lift_coefficients(const AlphaSolveResult& sol, const Rational& lambda0) {
    if (!sol.eigen_raw.eval(lambda0).is_zero())
        throw std::domain_error("lift_coefficients: lambda0 = " + lambda0.str() +
                                " is not a root of the eigenvalue polynomial");
    Coefs cf = make_coefs(sol.prob, sol.mu0);
    long d = sol.prob.d;

    std::vector<Affine> val(d + 2, Affine::constant(Rational(0)));
    for (long s = sol.s_min; s <= d; ++s)
        val[s] = Affine::constant(sol.alpha[s].eval(lambda0));

    LiftCoeffs out;
    bool inconsistent = false;
    auto resolve = [&](const Affine& expr) {
        if (expr.is_const()) {
            if (!expr.c0.is_zero()) inconsistent = true;
            return;
        }
        auto [id, coef] = *expr.f.rbegin();
        Affine pinned = expr;
        pinned.f.erase(id);
        pinned = pinned * (Rational(-1) / coef);
        for (auto& v : val) v.subst(id, pinned);
    };

    if (sol.s_min > 0) {
        val[sol.s_min - 1] = Affine::free_var(sol.s_min - 1);
        for (long s = sol.s_min - 1; s >= 1; --s) {
            Affine combo = val[s] * (cf.A_const(s) + lambda0) + val[s + 1] * cf.B(s);
            Rational piv = cf.piv(s);
            if (!piv.is_zero()) {
                val[s - 1] = combo * (Rational(1) / piv);
            } else {
                resolve(combo);
                val[s - 1] = Affine::free_var(s - 1);
            }
        }
        Affine fin = val[0] * (cf.A_const(0) + lambda0) + val[1] * cf.B(0);
        resolve(fin);
    }

    if (inconsistent) {
        out.status = LiftCoeffs::Status::NoLift;
        out.note = "no lift: the affine constraints are inconsistent at lambda = " +
                   lambda0.str();
        return out;
    }
    for (long s = 0; s <= d; ++s) {
        if (!val[s].is_const()) {
            out.status = LiftCoeffs::Status::ExtraFreedom;
            out.note = "extra degree of freedom in alpha_" + std::to_string(s);
            return out;
        }
    }
    out.status = LiftCoeffs::Status::Unique;
    out.alpha.resize(d + 1);
    for (long s = 0; s <= d; ++s) out.alpha[s] = val[s].c0;
    return out;
}

BetaSolveResult solve_beta(const LiftProblem& prob) {
    if (!prob.abc.b.is_zero()) throw std::domain_error("solve_beta: requires b = 0");
    const Rational& a = prob.abc.a;
    const Rational& k = prob.k;
    long d = prob.d;
    Rational one_minus_a = Rational(1) - a;

    BetaSolveResult out;
    out.lambda = Rational(d) * (k - Rational(2) + (Rational(1 - d)) / one_minus_a);
    out.beta.assign(d + 1, Rational(0));
    out.beta[d] = Rational(1);
    long stop = prob.branch == LiftBranch::BZeroIntegral ? prob.j0 : -1;
    for (long s = d - 1; s >= 0; --s) {
        if (s == stop) {
            out.annihilate_power = d - prob.j0;
            break;
        }
        Rational den = Rational(d - s) * (one_minus_a * (k - Rational(2)) + Rational(1 - d - s));
        if (den.is_zero())
            throw std::logic_error("solve_beta: unexpected vanishing denominator at s = " +
                                   std::to_string(s));
        out.beta[s] = Rational(s + 1) * out.beta[s + 1] / den;
    }
    return out;
}

// ---- Towers. ----

TowerTerm tower_raise(const TowerTerm& x, const Rational& l) {
    if (l != x.weight())
        throw std::domain_error("tower_raise: index " + l.str() + " does not match weight " +
                                x.weight().str());
    return TowerTerm{x.w0, x.mu, x.t + 1, x.coeff};
}

TowerTerm tower_lower4(const TowerTerm& x) {
    if (x.t == 0) {
        // mu = 0 models a meromorphic base, which the lowering kills exactly;
        // a genuine eigenfunction base has no representable image.
        if (x.mu.is_zero()) return TowerTerm{x.w0 - Rational(2), x.mu, 0, Rational(0)};
        throw std::domain_error("tower_lower4: lowering of the base eigenfunction is not "
                                "representable");
    }
    return TowerTerm{x.w0, x.mu, x.t - 1, x.coeff * (-x.eigenvalue())};
}

TowerTerm tower_laplace(const TowerTerm& x) {
    return TowerTerm{x.w0, x.mu, x.t, x.coeff * (-x.eigenvalue())};
}

TowerTerm tower_eigen_shift(const TowerTerm& h, const Rational& l, const Rational& eig,
                            bool down) {
    if (down) {
        if (eig.is_zero())
            throw std::domain_error("tower_eigen_shift: harmonic input");
        TowerTerm low = tower_lower4(h);
        low.coeff = low.coeff * (Rational(-1) / eig);
        return low;
    }
    if (eig == -l)
        throw std::domain_error("tower_eigen_shift: eigenvalue -l, degenerate shift");
    TowerTerm up = tower_raise(h, l);
    up.coeff = up.coeff * (Rational(-1) / (l + eig));
    return up;
}

TowerLift build_lift_tower(const LiftProblem& prob, const Rational& lambda0,
                           const Rational& mu0) {
    AlphaSolveResult sol = solve_alpha(prob, mu0);
    LiftCoeffs lc = lift_coefficients(sol, lambda0);
    if (lc.status != LiftCoeffs::Status::Unique)
        throw std::domain_error("build_lift_tower: " + lc.note);
    return TowerLift{prob, mu0, lambda0, lc.alpha};
}

bool verify_eigen_tower(const TowerLift& lift) {
    const LiftProblem& prob = lift.prob;
    const Rational &b = prob.abc.b, &c = prob.abc.c;
    long d = prob.d;
    Rational w0 = prob.k - Rational(2 * d);
    auto nu = [&](long t) { return lift.mu + Rational(t) * (w0 + Rational(t - 1)); };
    auto coeff = [&](long s) { return s >= 0 && s <= d ? lift.coeff[s] : Rational(0); };
    Coefs cf = make_coefs(prob, lift.mu);

    for (long s = 0; s <= d + 1; ++s) {
        Rational acc(0);
        acc += b * (-nu(d - s)) * coeff(s);                // b Delta_{k-2s} F_s
        acc += (b - c) * Rational(s + 1) * coeff(s + 1);   // raise from F_{s+1}
        Rational j1 = cf.j1(s);
        if (!j1.is_zero()) {
            acc += j1 * Rational(s) * (b - c) * coeff(s);
            if (s >= 1) {
                long t = d - s + 1;  // tower stage of F_{s-1}
                if (t == 0) {
                    // The component would contain the lowering of the base
                    // form itself. For mu = 0 the base is meromorphic and the
                    // term vanishes; otherwise the tuple cannot be an
                    // eigenfunction.
                    if (!lift.mu.is_zero() && !(j1 * b * coeff(s - 1)).is_zero()) return false;
                } else {
                    acc += j1 * b * (-nu(t)) * coeff(s - 1);
                }
            }
        }
        acc += lift.lambda * coeff(s);
        if (!acc.is_zero()) return false;
    }
    return true;
}

MuSolveResult solve_alpha_mu(const LiftProblem& prob) {
    if (prob.branch != LiftBranch::MuBranch)
        throw std::domain_error("solve_alpha_mu: parameters are not in the mu-branch");
    const Rational &b = prob.abc.b, &c = prob.abc.c;
    const Rational& k = prob.k;
    long d = prob.d;
    Coefs cf = make_coefs(prob, Rational(0));

    BiPoly lam = BiPoly::lambda();
    BiPoly mu = BiPoly::mu();
    auto A = [&](long s) {
        // lambda + s(b-c) j1(s) - b (mu + (d-s)(k-d-s-1))
        return lam - mu * b +
               BiPoly(Rational(s) * (b - c) * cf.j1(s) -
                      b * Rational(d - s) * (k - Rational(d + s + 1)));
    };
    auto piv = [&](long s) {
        // b j1(s) (mu + (d-s+1)(k-s-d)) as a polynomial in mu
        return (UniPoly::variable() + UniPoly(Rational(d - s + 1) * (k - Rational(s + d)))) *
               (b * cf.j1(s));
    };

    MuSolveResult out;
    out.prob = prob;
    out.alpha_num.assign(d + 2, BiPoly());
    out.alpha_den.assign(d + 2, UniPoly(Rational(1)));
    out.alpha_num[d] = BiPoly(Rational(1));
    for (long s = d; s >= 1; --s) {
        BiPoly combo = A(s) * out.alpha_num[s];
        if (s + 1 <= d) combo += out.alpha_num[s + 1] * BiPoly(piv(s + 1)) * cf.B(s);
        out.alpha_num[s - 1] = combo;
        out.alpha_den[s - 1] = out.alpha_den[s] * piv(s);
    }
    BiPoly P = A(0) * out.alpha_num[0];
    if (d >= 1) P += out.alpha_num[1] * BiPoly(piv(1)) * cf.B(0);
    UniPoly lead = P.coeff_lambda(P.degree_lambda());
    if (P.degree_lambda() != d + 1 || lead.degree() != 0)
        throw std::logic_error("solve_alpha_mu: eigenvalue polynomial is not monic of degree d+1");
    if (lead.coeff(0) != Rational(1)) {
        Rational inv = Rational(1) / lead.coeff(0);
        P = P * inv;
    }
    out.eigen = P;
    out.disc = d >= 1 ? discriminant_lambda(P) : UniPoly(Rational(1));
    out.alpha_num.resize(d + 1);
    out.alpha_den.resize(d + 1);
    return out;
}

std::vector<DepthEigen> enumerate_eigenvalues(const TripleParams& abc, const Rational& k,
                                              long depth_bound) {
    std::vector<DepthEigen> out;
    for (long d = 0; d <= depth_bound; ++d) {
        LiftProblem prob = LiftProblem::classify(abc, k, d);
        DepthEigen de;
        de.d = d;
        de.branch = prob.branch;
        if (abc.b.is_zero()) {
            de.b_zero = true;
            de.b0_lambda = solve_beta(prob).lambda;
        } else {
            AlphaSolveResult sol = solve_alpha(prob);
            de.poly_monic = sol.eigen_monic;
            de.roots = rational_roots(de.poly_monic);
        }
        out.push_back(std::move(de));
    }
    return out;
}

}  // namespace qmf
