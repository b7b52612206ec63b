#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmf/json_io.hpp"
#include "qmf/polynomial.hpp"
#include "qmf/qseries.hpp"
#include "qmf/random_forms.hpp"
#include "qmf/rational.hpp"
#include "qmf/scalar.hpp"
#include "qmf/symcoeff.hpp"

using namespace qmf;

TEST_CASE("rational basics and canonical form") {
    Rational r(6, 4);
    CHECK(r.num() == 3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "3/2");
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(4, -8).str() == "-1/2");
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1, 2).to_long());
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(5, -1).is_zero());
    CHECK(binomial(5, 6).is_zero());
    CHECK(factorial(6) == Rational(720));
}

TEST_CASE("scalar like-term addition: 3/2 w + 1/2 w = 2 w") {
    Scalar a = Scalar::mono(Rational(3, 2), 1);
    Scalar b = Scalar::mono(Rational(1, 2), 1);
    CHECK(a + b == Scalar::mono(Rational(2), 1));
}

TEST_CASE("scalar laurent arithmetic and inversion") {
    Scalar s = Scalar::mono(Rational(12), -1);  // 12/w
    CHECK(s.is_invertible());
    CHECK(s * s.inverse() == Scalar(Rational(1)));
    Scalar t = s + Scalar(Rational(1));
    CHECK(!t.is_invertible());
    CHECK_THROWS(t.inverse());
    CHECK((t - s) == Scalar(Rational(1)));
    CHECK((s * Rational(0)).is_zero());
}

TEST_CASE("qseries multiplicative identity and min-order propagation") {
    QSeries e2 = QSeries(3);
    e2.set_coeff(0, Scalar(Rational(1)));
    e2.set_coeff(1, Scalar(Rational(-24)));
    e2.set_coeff(2, Scalar(Rational(-72)));
    QSeries one = QSeries::constant(Scalar(Rational(1)), 3);
    CHECK(e2 * one == e2);

    QSeries longer = QSeries::constant(Scalar(Rational(1)), 10);
    CHECK((e2 * longer).order() == 3);
    CHECK((e2 + longer).order() == 3);

    // equality is only up to the shared order
    QSeries a(2), b(5);
    a.set_coeff(1, Scalar(Rational(3)));
    b.set_coeff(1, Scalar(Rational(3)));
    b.set_coeff(4, Scalar(Rational(99)));
    CHECK(a == b);
}

TEST_CASE("qseries derivative is w q d/dq") {
    QSeries f(4);
    f.set_coeff(0, Scalar(Rational(1)));
    f.set_coeff(1, Scalar(Rational(1)));
    QSeries df = f.derive();
    CHECK(df.coeff(0).is_zero());
    CHECK(df.coeff(1) == Scalar::omega());

    QSeries q2(4);
    q2.set_coeff(2, Scalar(Rational(1)));
    CHECK(q2.derive().coeff(2) == Scalar::mono(Rational(2), 1));
}

TEST_CASE("symcoeff product and Leibniz rule") {
    SymCoeff g0 = SymCoeff::generator(0, 0);
    SymCoeff g1 = SymCoeff::generator(0, 1);
    SymCoeff prod = g0 * g1;
    SymCoeff d = prod.derive();
    SymCoeff expect = g1 * g1 + g0 * SymCoeff::generator(0, 2);
    CHECK(d == expect);

    SymCoeff g = SymCoeff::generator(0);
    SymCoeff h = SymCoeff::generator(1);
    CHECK((g * h).derive() ==
          SymCoeff::generator(0, 1) * h + g * SymCoeff::generator(1, 1));
}

TEST_CASE("ring axioms on randomized operands") {
    Rng rng(20240811);
    for (int i = 0; i < 30; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));

        Scalar sa = random_scalar(rng), sb = random_scalar(rng), sc = random_scalar(rng);
        CHECK((sa + sb) * sc == sa * sc + sb * sc);
        CHECK((sa * sb) * sc == sa * (sb * sc));

        SymCoeff ya = random_symcoeff(rng), yb = random_symcoeff(rng), yc = random_symcoeff(rng);
        CHECK((ya + yb) * yc == ya * yc + yb * yc);
        CHECK((ya * yb) * yc == ya * (yb * yc));
        // derivation property
        CHECK((ya * yb).derive() == ya.derive() * yb + ya * yb.derive());
    }
}

TEST_CASE("qseries ring axioms and derivation, randomized") {
    Rng rng(7);
    auto random_qs = [&](long order) {
        QSeries s(order);
        for (long n = 0; n < order; ++n) s.set_coeff(n, random_scalar(rng));
        return s;
    };
    for (int i = 0; i < 15; ++i) {
        QSeries a = random_qs(6), b = random_qs(6), c = random_qs(6);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).derive() == a.derive() * b + a * b.derive());
    }
}

TEST_CASE("unipoly arithmetic, eval, deflation") {
    UniPoly x = UniPoly::variable();
    UniPoly p = x * x - Rational(3) * x + UniPoly(Rational(2));  // (x-1)(x-2)
    CHECK(p.eval(Rational(1)).is_zero());
    CHECK(p.eval(Rational(2)).is_zero());
    CHECK(p.eval(Rational(3)) == Rational(2));
    UniPoly q = p.deflate(Rational(1));
    CHECK(q.eval(Rational(2)).is_zero());
    CHECK_THROWS(p.deflate(Rational(5)));
    CHECK(p.derivative() == Rational(2) * x - UniPoly(Rational(3)));
}

TEST_CASE("rational roots: depth-1 eigenvalues at k = 12 are 0 and 10") {
    // lambda^2 - (k-2) lambda with k = 12
    UniPoly x = UniPoly::variable();
    UniPoly p = x * x - Rational(10) * x;
    RootList r = rational_roots(p);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.has_root(Rational(0)));
    CHECK(r.has_root(Rational(10)));
    CHECK(r.roots[0].second == 1);
    CHECK(r.roots[1].second == 1);
    CHECK(r.residual.degree() <= 0);
}

TEST_CASE("rational roots: q(k-2d+q-1) ladder at d = 2, k = 13") {
    // lambda (lambda - 9)(lambda - 20): the eigenvalues q(k-2d+q-1), q=0,1,2
    UniPoly x = UniPoly::variable();
    UniPoly p = x * (x - UniPoly(Rational(9))) * (x - UniPoly(Rational(20)));
    RootList r = rational_roots(p);
    REQUIRE(r.roots.size() == 3);
    CHECK(r.has_root(Rational(0)));
    CHECK(r.has_root(Rational(9)));
    CHECK(r.has_root(Rational(20)));
    // back-substitution
    for (auto& [root, mult] : r.roots) CHECK(p.eval(root).is_zero());
}

TEST_CASE("rational roots: irreducible residual") {
    UniPoly x = UniPoly::variable();
    UniPoly p = x * x + UniPoly(Rational(1));
    RootList r = rational_roots(p);
    CHECK(r.roots.empty());
    CHECK(r.residual == p);
    CHECK_THROWS(rational_roots(UniPoly()));
}

TEST_CASE("rational roots: multiplicities and fractional roots") {
    UniPoly x = UniPoly::variable();
    // (2x - 1)^2 (x + 3)
    UniPoly p = (Rational(2) * x - UniPoly(Rational(1))) *
                (Rational(2) * x - UniPoly(Rational(1))) * (x + UniPoly(Rational(3)));
    RootList r = rational_roots(p);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.has_root(Rational(1, 2)));
    CHECK(r.has_root(Rational(-3)));
    for (auto& [root, mult] : r.roots)
        CHECK(mult == (root == Rational(1, 2) ? 2 : 1));
}

TEST_CASE("bipoly arithmetic and discriminant") {
    BiPoly lam = BiPoly::lambda();
    BiPoly mu = BiPoly::mu();
    // (lambda - mu)(lambda - mu - 3) = lambda^2 - (2mu+3)lambda + mu(mu+3)
    BiPoly p = (lam - mu) * (lam - mu - BiPoly(Rational(3)));
    CHECK(p.degree_lambda() == 2);
    CHECK(p.eval(Rational(5), Rational(2)) == Rational(0));
    CHECK(p.eval(Rational(2), Rational(2)) == Rational(0));
    CHECK(p.at_mu(Rational(2)).eval(Rational(7)) == Rational(10));
    // disc = (2mu+3)^2 - 4 mu(mu+3) = 9
    UniPoly d = discriminant_lambda(p);
    CHECK(d == UniPoly(Rational(9)));

    // repeated root: disc vanishes
    BiPoly sq = (lam - mu) * (lam - mu);
    CHECK(discriminant_lambda(sq).is_zero());
}

TEST_CASE("serialization round trips") {
    using qmf::io::json;
    Rational r(-7, 3);
    CHECK(qmf::io::rational_from(qmf::io::to_json(r)) == r);

    Scalar s = Scalar::mono(Rational(12), -1) + Scalar(Rational(3, 4));
    CHECK(qmf::io::scalar_from(qmf::io::to_json(s)) == s);

    QSeries q(3);
    q.set_coeff(1, Scalar::omega());
    q.set_coeff(2, Scalar(Rational(5, 2)));
    QSeries back = qmf::io::qseries_from(qmf::io::to_json(q));
    CHECK(back.order() == q.order());
    CHECK(back == q);

    Rng rng(99);
    SymCoeff y = random_symcoeff(rng);
    CHECK(qmf::io::symcoeff_from(qmf::io::to_json(y)) == y);
}

TEST_CASE("form-level JSON round trips") {
    using qmf::io::json;
    Rng rng(424242);

    NHForm<SymCoeff> f = random_nhform(rng, Rational(7, 2), 2);
    CHECK(qmf::io::nhform_from<SymCoeff>(qmf::io::to_json(f)) == f);

    QMForm<SymCoeff> qm = random_qmform(rng, Rational(-3, 4), 3);
    CHECK(qmf::io::qmform_from<SymCoeff>(qmf::io::to_json(qm)) == qm);

    VVTuple<SymCoeff> t = qm_to_tuple(qm);
    CHECK(qmf::io::vvtuple_from<SymCoeff>(qmf::io::to_json(t)) == t);

    json j = qmf::io::to_json(qm);
    CHECK(j.at("kind") == "qmform");
    CHECK(qmf::io::to_json(t).at("kind") == "vvtuple");

    // q-series realization
    QSeries s(4);
    s.set_coeff(2, Scalar::mono(Rational(5, 3), 1));
    NHForm<QSeries> g(Rational(2), s);
    CHECK(qmf::io::nhform_from<QSeries>(qmf::io::to_json(g)) == g);
    CHECK(qmf::io::to_json(g).at("coeff_kind") == "qseries");
}

TEST_CASE("polynomial ring axioms, randomized") {
    Rng rng(31415);
    auto random_unipoly = [&](long maxdeg) {
        std::uniform_int_distribution<long> dd(0, maxdeg);
        long d = dd(rng);
        std::vector<Rational> c;
        for (long i = 0; i <= d; ++i) c.push_back(random_rational(rng));
        return UniPoly(std::move(c));
    };
    auto random_bipoly = [&](long maxdeg) {
        std::uniform_int_distribution<long> dd(0, maxdeg);
        long d = dd(rng);
        std::vector<UniPoly> c;
        for (long i = 0; i <= d; ++i) c.push_back(random_unipoly(maxdeg));
        return BiPoly(std::move(c));
    };
    for (int i = 0; i < 20; ++i) {
        UniPoly a = random_unipoly(4), b = random_unipoly(4), c = random_unipoly(4);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        Rational x = random_rational(rng);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));

        BiPoly p = random_bipoly(3), q = random_bipoly(3), r = random_bipoly(3);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        Rational y = random_rational(rng);
        CHECK((p * q).eval(x, y) == p.eval(x, y) * q.eval(x, y));
    }
}
