#ifndef QMF_JSON_IO_HPP
#define QMF_JSON_IO_HPP

#include <json.hpp>

#include "qmf/formsdb.hpp"
#include "qmf/laplacian.hpp"
#include "qmf/quasimod.hpp"
#include "qmf/symcoeff.hpp"
#include "qmf/vvops.hpp"

// JSON wire formats:
//   Rational   "p" or "p/q"
//   Scalar     {"<omega exponent>": Rational, ...}
//   QSeries    {"order": N, "coeffs": [Scalar, ...]}
//   SymCoeff   {"terms": [{"coeff": Scalar, "monomial": [[gen, der], ...]}]}
//   NHForm     {"weight": Rational, "coeff_kind": "qseries"|"symbolic",
//               "parts": {"<Y power>": coeff, ...}}
//   QMForm     {"kind": "qmform", "weight": ..., "components": [NHForm...]}
//   VVTuple    {"kind": "vvtuple", ...}

namespace qmf::io {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }
inline Rational rational_from(const json& j) { return Rational::parse(j.get<std::string>()); }

inline json to_json(const Scalar& s) {
    json out = json::object();
    for (auto& [e, c] : s.terms()) out[std::to_string(e)] = c.str();
    return out;
}
inline Scalar scalar_from(const json& j) {
    Scalar s;
    for (auto it = j.begin(); it != j.end(); ++it)
        s += Scalar::mono(Rational::parse(it.value().get<std::string>()), std::stoi(it.key()));
    return s;
}

inline json to_json(const QSeries& q) {
    json coeffs = json::array();
    for (long n = 0; n < q.order(); ++n) coeffs.push_back(to_json(q.coeff(n)));
    return json{{"order", q.order()}, {"coeffs", coeffs}};
}
inline QSeries qseries_from(const json& j) {
    long order = j.at("order").get<long>();
    QSeries q(order);
    const json& coeffs = j.at("coeffs");
    for (long n = 0; n < order && n < static_cast<long>(coeffs.size()); ++n)
        q.set_coeff(n, scalar_from(coeffs[n]));
    return q;
}

inline json to_json(const SymCoeff& s) {
    json terms = json::array();
    for (auto& [m, c] : s.terms()) {
        json mono = json::array();
        for (auto& f : m) mono.push_back(json::array({f.gen, f.der}));
        terms.push_back(json{{"coeff", to_json(c)}, {"monomial", mono}});
    }
    return json{{"terms", terms}};
}
inline SymCoeff symcoeff_from(const json& j) {
    SymCoeff s;
    for (auto& t : j.at("terms")) {
        SymMonomial m;
        for (auto& f : t.at("monomial")) m.push_back(SymFactor{f[0].get<int>(), f[1].get<int>()});
        s += SymCoeff::monomial(std::move(m), scalar_from(t.at("coeff")));
    }
    return s;
}

template <class C>
const char* coeff_kind_name();
template <>
inline const char* coeff_kind_name<QSeries>() { return "qseries"; }
template <>
inline const char* coeff_kind_name<SymCoeff>() { return "symbolic"; }

inline QSeries coeff_from(const json& j, const QSeries*) { return qseries_from(j); }
inline SymCoeff coeff_from(const json& j, const SymCoeff*) { return symcoeff_from(j); }

template <class C>
json to_json(const NHForm<C>& f) {
    json parts = json::object();
    for (auto& [t, c] : f.parts()) parts[std::to_string(t)] = to_json(c);
    return json{{"weight", to_json(f.weight())},
                {"coeff_kind", coeff_kind_name<C>()},
                {"parts", parts}};
}
template <class C>
NHForm<C> nhform_from(const json& j) {
    NHForm<C> f(rational_from(j.at("weight")));
    const json& parts = j.at("parts");
    for (auto it = parts.begin(); it != parts.end(); ++it)
        f += NHForm<C>::term(f.weight(), std::stol(it.key()),
                             coeff_from(it.value(), static_cast<const C*>(nullptr)));
    return f;
}

template <class C>
json to_json(const QMForm<C>& f) {
    json comps = json::array();
    for (auto& c : f.components()) comps.push_back(to_json(c));
    return json{{"kind", "qmform"},
                {"weight", to_json(f.weight())},
                {"coeff_kind", coeff_kind_name<C>()},
                {"components", comps}};
}
template <class C>
QMForm<C> qmform_from(const json& j) {
    std::vector<NHForm<C>> comps;
    for (auto& c : j.at("components")) comps.push_back(nhform_from<C>(c));
    return QMForm<C>(rational_from(j.at("weight")), std::move(comps));
}

template <class C>
json to_json(const VVTuple<C>& f) {
    json comps = json::array();
    for (auto& c : f.components()) comps.push_back(to_json(c));
    return json{{"kind", "vvtuple"},
                {"weight", to_json(f.ambient_weight())},
                {"coeff_kind", coeff_kind_name<C>()},
                {"components", comps}};
}
template <class C>
VVTuple<C> vvtuple_from(const json& j) {
    std::vector<NHForm<C>> comps;
    for (auto& c : j.at("components")) comps.push_back(nhform_from<C>(c));
    return VVTuple<C>(rational_from(j.at("weight")), std::move(comps));
}

inline json to_json(const Report& rep) {
    json out = json::array();
    for (auto& e : rep.entries)
        out.push_back(json{{"relation", e.relation},
                           {"params", e.params},
                           {"status", e.passed ? "pass" : "fail"},
                           {"witness", e.witness}});
    return out;
}

inline json to_json(const UniPoly& p, const std::string& var = "lambda") {
    json coeffs = json::array();
    for (auto& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"var", var}, {"coeffs", coeffs}, {"display", p.str(var)}};
}

inline json to_json(const RootList& roots) {
    json rs = json::array();
    for (auto& [r, m] : roots.roots) {
        if (m == 1)
            rs.push_back(r.str());
        else
            rs.push_back(json{{"root", r.str()}, {"multiplicity", m}});
    }
    json out{{"roots", rs}};
    if (!roots.residual.is_zero() && roots.residual.degree() > 0)
        out["residual"] = to_json(roots.residual);
    return out;
}

}  // namespace qmf::io

#endif
