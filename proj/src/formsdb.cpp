#include "qmf/formsdb.hpp"

#include <cmath>

namespace qmf {

namespace {

std::complex<double> ipow(std::complex<double> z, long n) {
    std::complex<double> acc = 1.0;
    for (long i = 0; i < n; ++i) acc *= z;
    return acc;
}

Rational sigma(long n, int power) {
    Rational acc(0);
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Rational t(1);
        for (int i = 0; i < power; ++i) t *= Rational(d);
        acc += t;
    }
    return acc;
}

}  // namespace

QSeries eisenstein_q(int weight, long order) {
    long factor;
    switch (weight) {
        case 2: factor = -24; break;
        case 4: factor = 240; break;
        case 6: factor = -504; break;
        default: throw std::domain_error("eisenstein_q: weight must be 2, 4, or 6");
    }
    QSeries s(order);
    s.set_coeff(0, Scalar(Rational(1)));
    for (long n = 1; n < order; ++n)
        s.set_coeff(n, Scalar(Rational(factor) * sigma(n, weight - 1)));
    return s;
}

NHForm<QSeries> eisenstein(int weight, long order) {
    return NHForm<QSeries>(Rational(weight), eisenstein_q(weight, order));
}

QSeries delta_q(long order) {
    QSeries e4 = eisenstein_q(4, order);
    QSeries e6 = eisenstein_q(6, order);
    return (e4 * e4 * e4 - e6 * e6) * Rational(1, 1728);
}

QMForm<QSeries> e2_qmform(long order) {
    NHForm<QSeries> f0(Rational(2), eisenstein_q(2, order));
    NHForm<QSeries> f1(Rational(0),
                       QSeries::constant(Scalar::mono(Rational(12), -1), order));
    return QMForm<QSeries>(Rational(2), {f0, f1});
}

EvalResult eval_numeric(const NHForm<QSeries>& f, const EvalPoint& p) {
    const std::complex<double> omega(0.0, 2.0 * M_PI);
    const double omega_abs = 2.0 * M_PI;
    std::complex<double> q = std::exp(omega * p.tau);
    double qa = std::abs(q);
    std::complex<double> Y = 1.0 / std::complex<double>(0.0, -2.0 * p.tau.imag());
    double Ya = std::abs(Y);

    std::complex<double> total = 0.0;
    double bound = 0.0;
    for (auto& [t, series] : f.parts()) {
        std::complex<double> acc = 0.0;
        std::complex<double> qn = 1.0;
        double cmax = 0.0;
        for (long n = 0; n < series.order(); ++n) {
            acc += series.coeff(n).eval(omega) * qn;
            cmax = std::max(cmax, series.coeff(n).magnitude_bound(omega_abs));
            qn *= q;
        }
        total += acc * std::pow(Y, double(t));
        // Tail heuristic: last-coefficient scale carried geometrically.
        double tail = qa < 1.0
                          ? cmax * std::pow(qa, double(series.order())) / (1.0 - qa) *
                                double(series.order())
                          : INFINITY;
        bound += tail * std::pow(Ya, double(t));
    }
    return EvalResult{total, bound};
}

TransformReport verify_transformation(const QMForm<QSeries>& f, const GroupElement& gamma,
                                      const EvalPoint& p, double tol,
                                      std::optional<std::complex<double>> rho) {
    std::complex<double> rho_v = rho.value_or(1.0);
    std::complex<double> gtau = gamma.act(p.tau);
    if (!(gtau.imag() > 0)) throw std::domain_error("verify_transformation: gamma tau not in H");
    EvalPoint gp(gtau);

    EvalResult lhs = eval_numeric(f.component(0), gp);
    double k = f.weight().to_double();
    std::complex<double> j = gamma.j(p.tau);
    std::complex<double> jp = double(gamma.c);

    std::complex<double> rhs = 0.0;
    double rhs_bound = 0.0;
    for (long r = 0; r <= f.depth(); ++r) {
        EvalResult fr = eval_numeric(f.component(r), p);
        std::complex<double> factor = std::pow(j, k - double(r)) * ipow(jp, r);
        rhs += factor * rho_v * fr.value;
        rhs_bound += std::abs(factor) * std::abs(rho_v) * fr.trunc_bound;
    }

    TransformReport rep;
    rep.lhs = lhs.value;
    rep.rhs = rhs;
    rep.error = std::abs(lhs.value - rhs) / (1.0 + std::abs(lhs.value));
    rep.trunc_bound = (lhs.trunc_bound + rhs_bound) / (1.0 + std::abs(lhs.value));
    if (rep.trunc_bound > tol)
        rep.status = TransformStatus::Inconclusive;
    else
        rep.status = rep.error <= tol ? TransformStatus::Pass : TransformStatus::Fail;
    return rep;
}

std::vector<TransformReport> verify_transformation_vec(
    const std::vector<QMForm<QSeries>>& forms, const GroupElement& gamma,
    const std::vector<std::vector<std::complex<double>>>& rho, const EvalPoint& p, double tol) {
    size_t n = forms.size();
    if (rho.size() != n) throw std::domain_error("verify_transformation_vec: rho shape");
    std::complex<double> gtau = gamma.act(p.tau);
    EvalPoint gp(gtau);
    std::complex<double> j = gamma.j(p.tau);
    std::complex<double> jp = double(gamma.c);

    std::vector<TransformReport> out;
    for (size_t i = 0; i < n; ++i) {
        if (rho[i].size() != n) throw std::domain_error("verify_transformation_vec: rho shape");
        double k = forms[i].weight().to_double();
        EvalResult lhs = eval_numeric(forms[i].component(0), gp);
        std::complex<double> rhs = 0.0;
        double rhs_bound = 0.0;
        long depth = 0;
        for (auto& g : forms) depth = std::max(depth, g.depth());
        for (long r = 0; r <= depth; ++r) {
            std::complex<double> factor = std::pow(j, k - double(r)) * ipow(jp, r);
            for (size_t m = 0; m < n; ++m) {
                EvalResult fr = eval_numeric(forms[m].component(r), p);
                rhs += factor * rho[i][m] * fr.value;
                rhs_bound += std::abs(factor) * std::abs(rho[i][m]) * fr.trunc_bound;
            }
        }
        TransformReport rep;
        rep.lhs = lhs.value;
        rep.rhs = rhs;
        rep.error = std::abs(lhs.value - rhs) / (1.0 + std::abs(lhs.value));
        rep.trunc_bound = (lhs.trunc_bound + rhs_bound) / (1.0 + std::abs(lhs.value));
        if (rep.trunc_bound > tol)
            rep.status = TransformStatus::Inconclusive;
        else
            rep.status = rep.error <= tol ? TransformStatus::Pass : TransformStatus::Fail;
        out.push_back(rep);
    }
    return out;
}

}  // namespace qmf
