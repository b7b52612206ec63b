#include "qmf/rankincohen.hpp"

#include <sstream>

namespace qmf {

namespace {

// Kernel of an m x n rational matrix by Gaussian elimination.
std::vector<std::vector<Rational>> kernel_of(std::vector<std::vector<Rational>> a, long cols) {
    long rows = static_cast<long>(a.size());
    std::vector<long> pivot_col;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Rational inv = Rational(1) / a[r][c];
        for (long j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (long j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (long free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (long i = 0; i < static_cast<long>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> system_matrix(const RCParams& p) {
    std::vector<std::vector<Rational>> m(p.n, std::vector<Rational>(p.n + 1, Rational(0)));
    for (long s = 0; s < p.n; ++s) {
        m[s][s] = p.l - Rational(p.e) + Rational(p.n - s - 1);
        m[s][s + 1] = p.k - Rational(p.d) + Rational(s);
    }
    return m;
}

bool in_kernel(const RCParams& p, const std::vector<Rational>& a) {
    for (long s = 0; s < p.n; ++s) {
        Rational lhs = a[s] * (p.l - Rational(p.e) + Rational(p.n - s - 1)) +
                       a[s + 1] * (p.k - Rational(p.d) + Rational(s));
        if (!lhs.is_zero()) return false;
    }
    return true;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational ca(0), cb(0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() || !b[i].is_zero()) {
            ca = a[i];
            cb = b[i];
            break;
        }
    }
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] * cb != b[i] * ca) return false;
    return true;
}

// (x)! as a rational, with negative arguments flagging a zero entry.
bool rat_factorial(const Rational& x, Rational& out) {
    if (!x.is_integer() || x.sign() < 0) return false;
    out = factorial(x.to_long());
    return true;
}

}  // namespace

bool rc_is_excluded(const RCParams& p) {
    Rational dk = Rational(p.d) - p.k;
    Rational el = Rational(p.e) - p.l;
    if (!dk.is_integer() || dk.sign() < 0) return false;
    if (!el.is_integer() || el.sign() < 0) return false;
    Rational mx = dk > el ? dk : el;
    return Rational(p.n) > mx && Rational(p.n) <= dk + el + Rational(1);
}

long rc_kernel_dim(const RCParams& p) {
    if (p.n == 0) return 1;  // no equations, single coefficient
    return static_cast<long>(kernel_of(system_matrix(p), p.n + 1).size());
}

std::vector<std::vector<Rational>> rc_kernel_basis(const RCParams& p) {
    if (p.n == 0) return {{Rational(1)}};
    return kernel_of(system_matrix(p), p.n + 1);
}

std::vector<Rational> rc_closed_form(const RCParams& p) {
    std::vector<Rational> a(p.n + 1);
    for (long r = 0; r <= p.n; ++r) {
        Rational c(1);
        for (long j = r; j <= p.n - 1; ++j) c *= (p.k - Rational(p.d) + Rational(j));
        for (long q = p.n - r; q <= p.n - 1; ++q) c *= (p.l - Rational(p.e) + Rational(q));
        if (r % 2 == 1) c = -c;
        a[r] = c;
    }
    return a;
}

std::vector<Rational> rc_excluded_first(const RCParams& p) {
    // a_r = (n-1-d+k)! (e-l+r-n)! / ((r-1-d+k)! (e-l)!) for r >= d-k+1.
    std::vector<Rational> a(p.n + 1, Rational(0));
    for (long r = 0; r <= p.n; ++r) {
        Rational rr(r);
        if (rr < Rational(p.d) - p.k + Rational(1)) continue;
        Rational f1, f2, f3, f4;
        if (!rat_factorial(Rational(p.n - 1 - p.d) + p.k, f1)) continue;
        if (!rat_factorial(Rational(p.e) - p.l + rr - Rational(p.n), f2)) continue;
        if (!rat_factorial(rr - Rational(1 + p.d) + p.k, f3)) continue;
        if (!rat_factorial(Rational(p.e) - p.l, f4)) continue;
        a[r] = f1 * f2 / (f3 * f4);
    }
    return a;
}

std::vector<Rational> rc_excluded_second(const RCParams& p) {
    // a_r = (n-1-e+l)! (d-k-r)! / ((n-1-r-e+l)! (d-k)!) for r <= n-e+l-1.
    std::vector<Rational> a(p.n + 1, Rational(0));
    for (long r = 0; r <= p.n; ++r) {
        Rational rr(r);
        if (rr > Rational(p.n - p.e) + p.l - Rational(1)) continue;
        Rational f1, f2, f3, f4;
        if (!rat_factorial(Rational(p.n - 1 - p.e) + p.l, f1)) continue;
        if (!rat_factorial(Rational(p.d) - p.k - rr, f2)) continue;
        if (!rat_factorial(Rational(p.n - 1 - p.e) + p.l - rr, f3)) continue;
        if (!rat_factorial(Rational(p.d) - p.k, f4)) continue;
        a[r] = f1 * f2 / (f3 * f4);
    }
    return a;
}

RCCoeffs rc_solve(const RCParams& p) {
    RCCoeffs out;
    out.n = p.n;
    out.excluded = rc_is_excluded(p);
    auto kernel = rc_kernel_basis(p);
    if (out.excluded) {
        if (kernel.size() != 2)
            throw std::logic_error("rc_solve: excluded case kernel is not 2-dimensional");
        auto s1 = rc_excluded_first(p);
        auto s2 = rc_excluded_second(p);
        if (!in_kernel(p, s1) || !in_kernel(p, s2))
            throw std::logic_error("rc_solve: excluded-case closed forms not in kernel");
        if (proportional(s1, s2))
            throw std::logic_error("rc_solve: excluded-case basis not independent");
        out.basis = {std::move(s1), std::move(s2)};
        return out;
    }
    if (kernel.size() != 1)
        throw std::logic_error("rc_solve: kernel dimension " + std::to_string(kernel.size()) +
                               " outside the excluded case");
    auto closed = rc_closed_form(p);
    if (!in_kernel(p, closed) || !proportional(kernel[0], closed))
        throw std::logic_error("rc_solve: closed form disagrees with solved kernel");
    out.basis = {std::move(closed)};
    return out;
}

Report rc_holomorphy_certificate(const RCParams& p, const std::vector<Rational>& a) {
    Report rep;
    NHForm<SymCoeff> phi(p.k - Rational(p.d), SymCoeff::generator(0));
    NHForm<SymCoeff> psi(p.l - Rational(p.e), SymCoeff::generator(1));
    NHForm<SymCoeff> total(p.k + p.l + Rational(2 * p.n) - Rational(p.d + p.e));
    for (long r = 0; r <= p.n; ++r) {
        Rational c = binomial(p.n, r) * a.at(r);
        if (c.is_zero()) continue;
        total += nh_mul(delta_power(phi, p.k - Rational(p.d), r),
                        delta_power(psi, p.l - Rational(p.e), p.n - r)) *
                 c;
    }
    std::ostringstream params;
    params << "n=" << p.n << ", k=" << p.k.str() << ", d=" << p.d << ", l=" << p.l.str()
           << ", e=" << p.e;
    ReportEntry e;
    e.relation = "rc.holomorphy";
    e.params = params.str();
    e.passed = total.depth() == 0 || total.is_zero();
    e.witness = e.passed ? "all Y^t coefficients (t >= 1) vanish"
                         : "nonzero Y-part: " + total.str();
    rep.entries.push_back(std::move(e));
    return rep;
}

}  // namespace qmf
