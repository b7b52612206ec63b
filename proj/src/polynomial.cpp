#include "qmf/polynomial.hpp"

#include <algorithm>

namespace qmf {

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    mpz_class i = 1;
    while (i * i <= n) {
        if (n % i == 0) {
            divs.push_back(i);
            mpz_class j = n / i;
            if (j != i) divs.push_back(j);
        }
        i += 1;
    }
    return divs;
}

// Clear denominators and divide by integer content.
std::vector<mpz_class> primitive_integer_form(const UniPoly& p) {
    mpz_class l = 1;
    for (auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs().size());
    for (auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
    mpz_class g = 0;
    for (auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : z) c /= g;
    return z;
}

}  // namespace

RootList rational_roots(const UniPoly& p_in) {
    if (p_in.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    RootList out;
    UniPoly p = p_in;

    // Powers of x split off first.
    long v = 0;
    while (p.coeff(0).is_zero() && p.degree() > 0) {
        p = p.deflate(Rational(0));
        ++v;
    }
    if (v > 0) out.roots.emplace_back(Rational(0), v);

    while (p.degree() >= 1) {
        auto z = primitive_integer_form(p);
        std::vector<mpz_class> nums = divisors_of(z.front());
        std::vector<mpz_class> dens = divisors_of(z.back());
        bool found = false;
        for (auto& a : nums) {
            for (auto& b : dens) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                if (g != 1) continue;
                for (int sign : {1, -1}) {
                    Rational cand(mpq_class(sign * a, b));
                    if (p.eval(cand).is_zero()) {
                        long mult = 0;
                        while (p.degree() >= 1 && p.eval(cand).is_zero()) {
                            p = p.deflate(cand);
                            ++mult;
                        }
                        out.roots.emplace_back(cand, mult);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.residual = p.is_zero() ? p : p.monic();
    std::sort(out.roots.begin(), out.roots.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

UniPoly resultant_lambda(const BiPoly& p, const BiPoly& q) {
    long n = p.degree_lambda();
    long m = q.degree_lambda();
    if (n < 0 || m < 0) return UniPoly();
    if (n == 0 && m == 0) return UniPoly(Rational(1));
    long size = n + m;
    // Sylvester matrix, rows of p-coefficients then q-coefficients.
    std::vector<std::vector<UniPoly>> a(size, std::vector<UniPoly>(size));
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j) a[r][r + j] = p.coeff_lambda(n - j);
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j) a[m + r][r + j] = q.coeff_lambda(m - j);

    // Cofactor expansion; matrices here are at most 2*deg-1 wide.
    std::vector<long> cols(size);
    for (long i = 0; i < size; ++i) cols[i] = i;
    struct Det {
        const std::vector<std::vector<UniPoly>>& a;
        UniPoly run(long row, std::vector<long>& cols) {
            if (cols.empty()) return UniPoly(Rational(1));
            UniPoly acc;
            for (size_t i = 0; i < cols.size(); ++i) {
                const UniPoly& piv = a[row][cols[i]];
                if (piv.is_zero()) continue;
                long c = cols[i];
                cols.erase(cols.begin() + i);
                UniPoly sub = run(row + 1, cols);
                cols.insert(cols.begin() + i, c);
                UniPoly term = piv * sub;
                if (i % 2 == 1) term = -term;
                acc += term;
            }
            return acc;
        }
    } det{a};
    return det.run(0, cols);
}

UniPoly discriminant_lambda(const BiPoly& p) {
    long n = p.degree_lambda();
    if (n < 1) throw std::domain_error("discriminant_lambda: degree < 1");
    UniPoly res = resultant_lambda(p, p.d_lambda());
    UniPoly lead = p.coeff_lambda(n);
    // disc = (-1)^{n(n-1)/2} Res(p, p') / lc(p); the division is exact when
    // lc is a nonzero rational, which is the only case used here.
    if (lead.degree() != 0)
        throw std::domain_error("discriminant_lambda: non-constant leading coefficient");
    UniPoly d = res / lead.coeff(0);
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

}  // namespace qmf
