// Command-line front end: operator application, Rankin-Cohen brackets,
// eigenvalue polynomials, lift construction and verification, the concrete
// form database, and the randomized verification suites. All I/O is JSON.
//
// Exit codes: 0 success / all checks pass, 1 mathematical failure (a check
// evaluated to false), 2 usage or I/O error.

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>

#include "qmf/json_io.hpp"
#include "qmf/random_forms.hpp"
#include "qmf/rankincohen.hpp"

using namespace qmf;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// "2i", "1+2i", "-0.5+0.25i", "3" (real parts with Im 0 are rejected later)
std::complex<double> parse_complex(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw std::runtime_error("empty complex literal");
    double re = 0, im = 0;
    if (s.back() == 'i') {
        s.pop_back();
        size_t split = std::string::npos;
        for (size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            im = s.empty() || s == "+" ? 1.0 : (s == "-" ? -1.0 : std::stod(s));
        } else {
            re = std::stod(s.substr(0, split));
            std::string imphase = s.substr(split);
            im = imphase == "+" ? 1.0 : (imphase == "-" ? -1.0 : std::stod(imphase));
        }
    } else {
        re = std::stod(s);
    }
    return {re, im};
}

GroupElement parse_gamma(const std::string& s) {
    long v[4];
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t next = s.find(',', pos);
        std::string tok = next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        v[i] = std::stol(tok);
        pos = next == std::string::npos ? s.size() : next + 1;
    }
    return GroupElement(v[0], v[1], v[2], v[3]);
}

json report_json(const Report& rep) {
    json out;
    out["checks"] = io::to_json(rep);
    out["passed"] = rep.all_passed();
    return out;
}

// Dispatch an operation over both coefficient realizations of a form file.
template <class Fn>
int with_realization(const json& j, Fn&& fn) {
    std::string kind = j.value("coeff_kind", "qseries");
    if (kind == "qseries") return fn(static_cast<const QSeries*>(nullptr));
    if (kind == "symbolic") return fn(static_cast<const SymCoeff*>(nullptr));
    throw std::runtime_error("unknown coeff_kind " + kind);
}

template <class C>
int apply_op(const std::string& op, const json& input, const json* input2, const Rational& l,
             const Rational& m, long spow, const TripleParams* abc) {
    std::string kind = input.value("kind", "nhform");
    if (kind == "qmform") {
        QMForm<C> f = io::qmform_from<C>(input);
        if (op == "qm-derive") return emit(io::to_json(qm_derive(f))), 0;
        if (op == "qm-div-neg2iy") return emit(io::to_json(qm_div_neg2iy(f))), 0;
        if (op == "qm-delta") return emit(io::to_json(qm_delta(f))), 0;
        if (op == "qm-lower") return emit(io::to_json(qm_lower(f))), 0;
        if (op == "qm-shift1") return emit(io::to_json(qm_shift1(f))), 0;
        if (op == "qm-to-tuple") return emit(io::to_json(qm_to_tuple(f))), 0;
        if (op == "qm-mul") {
            if (!input2) throw std::runtime_error("qm-mul needs two inputs");
            return emit(io::to_json(qm_mul(f, io::qmform_from<C>(*input2)))), 0;
        }
    } else if (kind == "vvtuple") {
        VVTuple<C> t = io::vvtuple_from<C>(input);
        if (op == "tuple-to-qm") return emit(io::to_json(tuple_to_qm(t))), 0;
        if (op == "vv-raise") return emit(io::to_json(vv_raise(t))), 0;
        if (op == "vv-lower") return emit(io::to_json(vv_lower(t))), 0;
        if (op == "vv-d") return emit(io::to_json(vv_D(t))), 0;
        if (op == "vv-ibar-over") return emit(io::to_json(vv_ibar_over(t))), 0;
        if (op == "vv-tilde-delta") return emit(io::to_json(vv_tilde_delta(t, l))), 0;
        if (op == "lap") {
            if (!abc) throw std::runtime_error("lap needs --a --b --c");
            return emit(io::to_json(lap_closed(t, *abc))), 0;
        }
    } else {
        NHForm<C> f = io::nhform_from<C>(input);
        if (op == "raise") return emit(io::to_json(raise(f, l))), 0;
        if (op == "lower4") return emit(io::to_json(lower4(f))), 0;
        if (op == "muly") return emit(io::to_json(mulY(f))), 0;
        if (op == "delta-power") return emit(io::to_json(delta_power(f, m, spow))), 0;
        if (op == "nh-mul") {
            if (!input2) throw std::runtime_error("nh-mul needs two inputs");
            return emit(io::to_json(nh_mul(f, io::nhform_from<C>(*input2)))), 0;
        }
    }
    throw std::runtime_error("operation '" + op + "' does not apply to input kind '" + kind +
                             "'");
}

json eigenpoly_json(const TripleParams& abc, const Rational& k, long d, const Rational& mu0) {
    LiftProblem prob = LiftProblem::classify(abc, k, d);
    json out;
    out["branch"] = branch_name(prob.branch);
    if (prob.j >= 0) out["j"] = prob.j;
    if (prob.p >= 0) out["p"] = prob.p;
    if (prob.j0 >= 0) out["j0"] = prob.j0;
    if (abc.b.is_zero()) {
        BetaSolveResult b = solve_beta(prob);
        out["lambda"] = b.lambda.str();
        json betas = json::array();
        for (auto& v : b.beta) betas.push_back(v.str());
        out["beta_table"] = betas;
        if (b.annihilate_power > 0) out["annihilate_power"] = b.annihilate_power;
        return out;
    }
    AlphaSolveResult sol = solve_alpha(prob, mu0);
    json alphas = json::object();
    for (long s = sol.s_min; s <= d; ++s)
        alphas[std::to_string(s)] = io::to_json(sol.alpha[s]);
    out["alpha_table"] = alphas;
    out["s_min"] = sol.s_min;
    out["poly"] = io::to_json(sol.eigen_monic);
    out["poly_raw"] = io::to_json(sol.eigen_raw);
    RootList roots = rational_roots(sol.eigen_monic);
    out.update(io::to_json(roots));
    json lifts = json::object();
    for (auto& [root, mult] : roots.roots) {
        LiftCoeffs lc = lift_coefficients(sol, root);
        json entry;
        switch (lc.status) {
            case LiftCoeffs::Status::Unique: {
                json a = json::array();
                for (auto& v : lc.alpha) a.push_back(v.str());
                entry = json{{"status", "unique"}, {"alpha", a}};
                break;
            }
            case LiftCoeffs::Status::NoLift:
                entry = json{{"status", "none"}, {"note", lc.note}};
                break;
            case LiftCoeffs::Status::ExtraFreedom:
                entry = json{{"status", "extra-freedom"}, {"note", lc.note}};
                break;
        }
        lifts[root.str()] = entry;
    }
    out["lifts"] = lifts;
    if (prob.branch == LiftBranch::MuBranch && mu0.is_zero()) {
        MuSolveResult ms = solve_alpha_mu(prob);
        json biv = json::array();
        for (long i = 0; i <= ms.eigen.degree_lambda(); ++i)
            biv.push_back(io::to_json(ms.eigen.coeff_lambda(i), "mu"));
        out["bivariate_poly_lambda_coeffs"] = biv;
        out["discriminant_mu"] = io::to_json(ms.disc, "mu");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quasi-modular / nearly holomorphic form calculator"};
    app.require_subcommand(1);
    int rc_exit = 0;

    // ---- forms ----
    auto* forms = app.add_subcommand("forms", "concrete q-expansions");
    auto* forms_emit = forms->add_subcommand("emit", "emit a form as JSON");
    std::string form_name = "E4";
    long order = 20;
    forms_emit->add_option("--name", form_name, "E2, E4, E6, Delta, E2QM");
    forms_emit->add_option("--order", order, "q-expansion truncation order");
    forms_emit->callback([&]() {
        if (form_name == "E2QM") {
            emit(io::to_json(e2_qmform(order)));
        } else if (form_name == "Delta") {
            emit(io::to_json(NHForm<QSeries>(Rational(12), delta_q(order))));
        } else if (form_name == "E2" || form_name == "E4" || form_name == "E6") {
            emit(io::to_json(eisenstein(std::stoi(form_name.substr(1)), order)));
        } else {
            throw CLI::ValidationError("unknown form " + form_name);
        }
    });

    // ---- rc ----
    auto* rc = app.add_subcommand("rc", "Rankin-Cohen bracket coefficients");
    RCParams rcp{1, Rational(0), 0, Rational(0), 0};
    std::string rc_k = "4", rc_l = "6";
    std::vector<std::string> rc_apply_files;
    bool rc_cert = false;
    rc->add_option("--n", rcp.n, "bracket index");
    rc->add_option("--k", rc_k, "first weight");
    rc->add_option("--d", rcp.d, "first depth bound");
    rc->add_option("--l", rc_l, "second weight");
    rc->add_option("--e", rcp.e, "second depth bound");
    rc->add_option("--apply", rc_apply_files, "two QMForm JSON files")->expected(2);
    rc->add_flag("--certificate", rc_cert, "run the Y-freeness certificate");
    rc->callback([&]() {
        rcp.k = Rational::parse(rc_k);
        rcp.l = Rational::parse(rc_l);
        RCCoeffs sol = rc_solve(rcp);
        json out;
        out["excluded"] = sol.excluded;
        out["kernel_dim"] = rc_kernel_dim(rcp);
        json basis = json::array();
        for (auto& vec : sol.basis) {
            json a = json::array(), tc = json::array();
            for (long r = 0; r <= rcp.n; ++r) {
                a.push_back(vec[r].str());
                tc.push_back((binomial(rcp.n, r) * vec[r]).str());
            }
            basis.push_back(json{{"a", a}, {"term_coeffs", tc}});
        }
        out["basis"] = basis;
        if (rc_cert) {
            Report rep;
            for (auto& vec : sol.basis) {
                Report r1 = rc_holomorphy_certificate(rcp, vec);
                rep.entries.insert(rep.entries.end(), r1.entries.begin(), r1.entries.end());
            }
            out["certificate"] = io::to_json(rep);
            if (!rep.all_passed()) rc_exit = 1;
        }
        if (!rc_apply_files.empty()) {
            json f = load_json(rc_apply_files[0]);
            json g = load_json(rc_apply_files[1]);
            std::string kind = f.value("coeff_kind", "qseries");
            if (kind == "qseries") {
                out["bracket"] = io::to_json(rc_apply(rcp, io::qmform_from<QSeries>(f),
                                                      io::qmform_from<QSeries>(g),
                                                      sol.basis[0]));
            } else {
                out["bracket"] = io::to_json(rc_apply(rcp, io::qmform_from<SymCoeff>(f),
                                                      io::qmform_from<SymCoeff>(g),
                                                      sol.basis[0]));
            }
        }
        emit(out);
    });

    // ---- eigenpoly ----
    auto* ep = app.add_subcommand("eigenpoly", "eigenvalue polynomial of the lift recursion");
    std::string ep_a = "1", ep_b = "1", ep_c = "0", ep_k = "12", ep_mu = "0";
    long ep_d = 1;
    ep->add_option("--a", ep_a);
    ep->add_option("--b", ep_b);
    ep->add_option("--c", ep_c);
    ep->add_option("--k", ep_k, "weight");
    ep->add_option("--d", ep_d, "depth");
    ep->add_option("--mu", ep_mu, "eigenvalue parameter of the lifted form");
    ep->callback([&]() {
        TripleParams abc(Rational::parse(ep_a), Rational::parse(ep_b), Rational::parse(ep_c));
        emit(eigenpoly_json(abc, Rational::parse(ep_k), ep_d, Rational::parse(ep_mu)));
    });

    // ---- lift ----
    auto* lift = app.add_subcommand("lift", "build a lift from phi");
    std::string lf_a = "1", lf_b = "1", lf_c = "0", lf_k = "12", lf_lambda = "0", lf_phi;
    long lf_d = 1;
    lift->add_option("--a", lf_a);
    lift->add_option("--b", lf_b);
    lift->add_option("--c", lf_c);
    lift->add_option("--k", lf_k);
    lift->add_option("--d", lf_d);
    lift->add_option("--lambda", lf_lambda);
    lift->add_option("--phi", lf_phi, "NHForm JSON file")->required();
    lift->callback([&]() {
        TripleParams abc(Rational::parse(lf_a), Rational::parse(lf_b), Rational::parse(lf_c));
        LiftProblem prob = LiftProblem::classify(abc, Rational::parse(lf_k), lf_d);
        json j = load_json(lf_phi);
        with_realization(j, [&](auto tag) {
            using C = std::remove_cv_t<std::remove_pointer_t<decltype(tag)>>;
            auto T = build_lift(prob, Rational::parse(lf_lambda), io::nhform_from<C>(j));
            emit(io::to_json(T));
            return 0;
        });
    });

    // ---- verify-eigen ----
    auto* ve = app.add_subcommand("verify-eigen", "check lap(T) + lambda T = 0");
    std::string ve_a = "1", ve_b = "1", ve_c = "0", ve_lambda = "0", ve_file;
    ve->add_option("file", ve_file, "VVTuple JSON")->required();
    ve->add_option("--a", ve_a);
    ve->add_option("--b", ve_b);
    ve->add_option("--c", ve_c);
    ve->add_option("--lambda", ve_lambda);
    ve->callback([&]() {
        TripleParams abc(Rational::parse(ve_a), Rational::parse(ve_b), Rational::parse(ve_c));
        Rational lambda0 = Rational::parse(ve_lambda);
        json j = load_json(ve_file);
        rc_exit = with_realization(j, [&](auto tag) {
            using C = std::remove_cv_t<std::remove_pointer_t<decltype(tag)>>;
            VVTuple<C> T = io::vvtuple_from<C>(j);
            auto residual = eigen_residual(T, abc, lambda0);
            bool ok = residual.is_zero();
            emit(json{{"verified", ok}, {"residual", io::to_json(residual)}});
            return ok ? 0 : 1;
        });
    });

    // ---- verify-transform ----
    auto* vt = app.add_subcommand("verify-transform", "numeric functional-equation check");
    std::string vt_file, vt_gamma = "0,-1,1,0", vt_tau = "2i";
    double vt_tol = 1e-6;
    vt->add_option("file", vt_file, "QMForm JSON")->required();
    vt->add_option("--gamma", vt_gamma, "a,b,c,d");
    vt->add_option("--tau", vt_tau, "evaluation point, e.g. 1+2i");
    vt->add_option("--tol", vt_tol);
    vt->callback([&]() {
        json j = load_json(vt_file);
        QMForm<QSeries> f = io::qmform_from<QSeries>(j);
        TransformReport rep = verify_transformation(f, parse_gamma(vt_gamma),
                                                    EvalPoint(parse_complex(vt_tau)), vt_tol);
        std::string status = rep.status == TransformStatus::Pass ? "pass"
                             : rep.status == TransformStatus::Fail ? "fail"
                                                                   : "inconclusive";
        emit(json{{"status", status},
                  {"relative_error", rep.error},
                  {"truncation_bound", rep.trunc_bound}});
        if (rep.status == TransformStatus::Fail) rc_exit = 1;
    });

    // ---- apply ----
    auto* ap = app.add_subcommand("apply", "apply an operator to a form file");
    std::string ap_op, ap_l = "0", ap_m = "0", ap_a = "1", ap_b = "1", ap_c = "0";
    long ap_s = 1;
    std::vector<std::string> ap_files;
    ap->add_option("--op", ap_op,
                   "qm-derive|qm-div-neg2iy|qm-delta|qm-lower|qm-shift1|qm-mul|qm-to-tuple|"
                   "tuple-to-qm|vv-raise|vv-lower|vv-d|vv-ibar-over|vv-tilde-delta|lap|"
                   "raise|lower4|muly|delta-power|nh-mul")
        ->required();
    ap->add_option("files", ap_files, "input JSON file(s)")->expected(1, 2);
    ap->add_option("--l", ap_l, "operator index for raise / vv-tilde-delta");
    ap->add_option("--m", ap_m, "base index for delta-power");
    ap->add_option("--s", ap_s, "exponent for delta-power");
    ap->add_option("--a", ap_a);
    ap->add_option("--b", ap_b);
    ap->add_option("--c", ap_c);
    ap->callback([&]() {
        if (ap_files.empty()) throw CLI::ValidationError("apply needs an input file");
        json input = load_json(ap_files[0]);
        json second;
        bool has2 = ap_files.size() > 1;
        if (has2) second = load_json(ap_files[1]);
        TripleParams abc(Rational::parse(ap_a), Rational::parse(ap_b), Rational::parse(ap_c));
        with_realization(input, [&](auto tag) {
            using C = std::remove_cv_t<std::remove_pointer_t<decltype(tag)>>;
            return apply_op<C>(ap_op, input, has2 ? &second : nullptr, Rational::parse(ap_l),
                               Rational::parse(ap_m), ap_s, &abc);
        });
    });

    // ---- suite ----
    auto* suite = app.add_subcommand("suite", "randomized verification suites");
    std::string su_name = "sl2", su_a, su_b, su_c;
    long su_depth = 4, su_samples = 10;
    unsigned long su_seed = 20240811;
    suite->add_option("--name", su_name, "sl2|comrels|correspondence|bol");
    suite->add_option("--depth", su_depth);
    suite->add_option("--samples", su_samples);
    suite->add_option("--seed", su_seed);
    suite->add_option("--a", su_a);
    suite->add_option("--b", su_b);
    suite->add_option("--c", su_c);
    suite->callback([&]() {
        Report rep;
        if (su_name == "comrels") {
            rep = check_commutators(su_depth, su_samples, su_seed);
        } else if (su_name == "correspondence") {
            rep = check_correspondence(su_depth, su_samples, su_seed);
        } else if (su_name == "bol") {
            rep = check_bol(su_depth);
        } else if (su_name == "sl2") {
            std::vector<TripleParams> triples;
            if (!su_a.empty()) {
                triples.emplace_back(Rational::parse(su_a), Rational::parse(su_b),
                                     Rational::parse(su_c));
            } else {
                triples.emplace_back(Rational(1), Rational(1), Rational(0));
                triples.emplace_back(Rational(0), Rational(0), Rational(1));
                Rng rng(su_seed);
                for (int i = 0; i < 3; ++i) triples.push_back(random_triple(rng));
            }
            for (auto& t : triples) {
                Report r = check_sl2(t, su_depth, su_samples, su_seed);
                rep.entries.insert(rep.entries.end(), r.entries.begin(), r.entries.end());
            }
        } else {
            throw CLI::ValidationError("unknown suite " + su_name);
        }
        json out = report_json(rep);
        out["seed"] = su_seed;
        emit(out);
        if (!rep.all_passed()) rc_exit = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc_exit;
}
