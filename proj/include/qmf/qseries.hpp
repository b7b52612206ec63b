#ifndef QMF_QSERIES_HPP
#define QMF_QSERIES_HPP

#include <stdexcept>
#include <vector>

#include "qmf/scalar.hpp"

namespace qmf {

// Truncated q-expansion with Scalar coefficients: c_0 + c_1 q + ... up to but
// not including q^order. Every value stores its own truncation order;
// arithmetic propagates the minimum of the operand orders, and equality only
// compares up to the shared order. The tau-derivative is w q d/dq, so that
// d/dtau q^n = n w q^n stays exact in the formal symbol w = 2*pi*i.
class QSeries {
public:
    // The default is the zero series known only to order 1; it exists so that
    // containers of coefficients have a neutral placeholder.
    QSeries() : c_(1) {}
    explicit QSeries(long order) : c_(check_order(order)) {}
    QSeries(long order, std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
        check_order(order);
        c_.resize(order);
    }
    static QSeries constant(const Scalar& s, long order) {
        QSeries r(order);
        r.c_[0] = s;
        return r;
    }

    long order() const { return static_cast<long>(c_.size()); }
    const Scalar& coeff(long n) const {
        if (n < 0 || n >= order()) throw std::out_of_range("QSeries: coefficient index");
        return c_[n];
    }
    void set_coeff(long n, const Scalar& s) {
        if (n < 0 || n >= order()) throw std::out_of_range("QSeries: coefficient index");
        c_[n] = s;
    }
    bool is_zero() const {
        for (auto& s : c_)
            if (!s.is_zero()) return false;
        return true;
    }

    QSeries truncated(long new_order) const {
        if (new_order > order()) throw std::domain_error("QSeries: cannot extend truncation");
        QSeries r(new_order);
        for (long n = 0; n < new_order; ++n) r.c_[n] = c_[n];
        return r;
    }

    QSeries operator-() const {
        QSeries r = *this;
        for (auto& s : r.c_) s = -s;
        return r;
    }
    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        long n = std::min(a.order(), b.order());
        QSeries r(n);
        for (long i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        long n = std::min(a.order(), b.order());
        QSeries r(n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    friend QSeries operator*(const QSeries& a, const Scalar& s) {
        QSeries r = a;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    friend QSeries operator*(const Scalar& s, const QSeries& a) { return a * s; }
    friend QSeries operator*(const QSeries& a, const Rational& r) { return a * Scalar(r); }
    friend QSeries operator*(const Rational& r, const QSeries& a) { return a * Scalar(r); }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }

    // d/dtau: coefficient of q^n picks up n*w.
    QSeries derive() const {
        QSeries r(order());
        for (long n = 1; n < order(); ++n)
            r.c_[n] = c_[n] * Scalar::mono(Rational(n), 1);
        return r;
    }

    // Equality up to the shared truncation order.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        long n = std::min(a.order(), b.order());
        for (long i = 0; i < n; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    static long check_order(long order) {
        if (order < 1) throw std::domain_error("QSeries: order must be >= 1");
        return order;
    }
    std::vector<Scalar> c_;
};

}  // namespace qmf

#endif
