#ifndef QMF_FORMSDB_HPP
#define QMF_FORMSDB_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qmf/qseries.hpp"
#include "qmf/quasimod.hpp"

namespace qmf {

// Exact q-expansions for the level-one Eisenstein series E2, E4, E6, with
// rational coefficients: E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QSeries eisenstein_q(int weight, long order);
NHForm<QSeries> eisenstein(int weight, long order);

// Discriminant form (E4^3 - E6^2)/1728.
QSeries delta_q(long order);

// E2 as a quasi-modular form of weight 2 and depth 1: f_0 = E2 and
// f_1 = 12/w (w the formal 2*pi*i).
QMForm<QSeries> e2_qmform(long order);

struct GroupElement {
    long a, b, c, d;
    GroupElement(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a * d - b * c != 1) throw std::domain_error("GroupElement: determinant != 1");
    }
    static GroupElement identity() { return {1, 0, 0, 1}; }
    static GroupElement T() { return {1, 1, 0, 1}; }
    static GroupElement S() { return {0, -1, 1, 0}; }
    static GroupElement TS() { return {1, -1, 1, 0}; }

    std::complex<double> act(std::complex<double> tau) const {
        return (double(a) * tau + double(b)) / (double(c) * tau + double(d));
    }
    std::complex<double> j(std::complex<double> tau) const {
        return double(c) * tau + double(d);
    }
};

struct EvalPoint {
    std::complex<double> tau;
    explicit EvalPoint(std::complex<double> t) : tau(t) {
        if (!(t.imag() > 0)) throw std::domain_error("EvalPoint: Im tau must be positive");
    }
};

struct EvalResult {
    std::complex<double> value;
    double trunc_bound;  // heuristic bound on the dropped q-series tail
};

// Substitute w -> 2*pi*i, q -> exp(2*pi*i*tau), Y -> 1/(-2i*Im tau).
EvalResult eval_numeric(const NHForm<QSeries>& f, const EvalPoint& p);

enum class TransformStatus { Pass, Fail, Inconclusive };

struct TransformReport {
    TransformStatus status;
    double error;        // |lhs - rhs| / (1 + |lhs|)
    double trunc_bound;  // combined truncation metadata
    std::complex<double> lhs, rhs;
};

// Numeric check of the quasi-modular functional equation
//   f(gamma tau) = sum_r j^{k-r} (j')^r rho(gamma) f_r(tau),
// j' being the lower-left entry of gamma. rho defaults to the trivial
// character; for scalar forms an explicit 1x1 value may be supplied.
// Rational weights use the principal branch of the complex power.
TransformReport verify_transformation(const QMForm<QSeries>& f, const GroupElement& gamma,
                                      const EvalPoint& p, double tol,
                                      std::optional<std::complex<double>> rho = std::nullopt);

// Vector-valued variant: forms share a weight and transform through an
// explicit matrix rho(gamma), supplied row-major.
std::vector<TransformReport> verify_transformation_vec(
    const std::vector<QMForm<QSeries>>& forms, const GroupElement& gamma,
    const std::vector<std::vector<std::complex<double>>>& rho, const EvalPoint& p, double tol);

}  // namespace qmf

#endif
