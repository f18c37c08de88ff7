// torimod: exact q-expansions of toric modular forms and their operators.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "torimod/hecke.hpp"
#include "torimod/verify.hpp"

using namespace torimod;

namespace {

Json read_json_arg(const std::string& arg) {
    // inline JSON first, then a file path
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw Error("cannot open " + arg);
    Json j;
    in >> j;
    return j;
}

Json poly_to_json(const GeneratorPoly& g) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : g.terms) {
        Json syms = Json::array();
        for (const auto& s : mono)
            syms.push_back(Json{{"kind", s.kind == GeneratorSymbol::Kind::S ? "s" : "r"},
                                {"a", s.a},
                                {"k", s.k}});
        terms.push_back(Json{{"monomial", syms}, {"coeff", cyc_to_json(coeff)}});
    }
    return Json{{"l", g.l}, {"weight", g.weight}, {"terms", terms}};
}

void emit(const Json& out, bool pretty_json) {
    std::cout << out.dump(pretty_json ? 2 : -1) << "\n";
}

struct FormArgs {
    std::string fan_arg, deg_arg, pipeline = "lattice";
    long prec = 20;
    bool certify = false;
};

DegreeFunction load_degree(const std::string& fan_arg, const std::string& deg_arg) {
    Fan fan = fan_from_json(read_json_arg(fan_arg));
    return degree_from_json(std::move(fan), read_json_arg(deg_arg));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric modular forms"};
    app.require_subcommand(1);
    std::string cache_dir;
    bool pretty = false;
    app.add_option("--cache-dir", cache_dir, "expansion cache directory (overrides TORIMOD_CACHE)");
    app.add_flag("--pretty", pretty, "human-readable series rendering");

    FormArgs fa;
    auto* form = app.add_subcommand("form", "q-expansion of f_{N,deg}");
    form->add_option("--fan", fa.fan_arg, "fan JSON (path or inline)")->required();
    form->add_option("--deg", fa.deg_arg, "degree JSON (path or inline)")->required();
    form->add_option("--prec", fa.prec, "expansion precision")->check(CLI::PositiveNumber);
    form->add_option("--pipeline", fa.pipeline, "lattice | cohomology | both")
        ->check(CLI::IsMember({"lattice", "cohomology", "both"}));
    form->add_flag("--certify", fa.certify, "emit the termination certificate");

    std::string gen_type = "s";
    long gen_a = 1, gen_l = 5, gen_prec = 20;
    int gen_k = 1;
    auto* gen = app.add_subcommand("gen", "generator series s_{a/l}^(k) or rhat^(k)");
    gen->add_option("--type", gen_type)->check(CLI::IsMember({"s", "r"}));
    gen->add_option("--a", gen_a);
    gen->add_option("--l", gen_l);
    gen->add_option("--k", gen_k);
    gen->add_option("--prec", gen_prec)->check(CLI::PositiveNumber);

    std::string h_fan, h_deg;
    long h_a = 0, h_l = 5, h_p = 2, h_prec = 30;
    auto* hecke = app.add_subcommand("hecke", "T_p action; on --fan/--deg also the sublattice side");
    hecke->add_option("--fan", h_fan);
    hecke->add_option("--deg", h_deg);
    hecke->add_option("--a", h_a, "residue of a weight-1 generator input");
    hecke->add_option("--l", h_l);
    hecke->add_option("--p", h_p)->required();
    hecke->add_option("--prec", h_prec)->check(CLI::PositiveNumber);

    long f_a = 1, f_l = 5, f_prec = 30;
    auto* fricke = app.add_subcommand("fricke", "weight-1 Fricke image of s_{a/l}");
    fricke->add_option("--a", f_a)->required();
    fricke->add_option("--l", f_l)->required();
    fricke->add_option("--prec", f_prec)->check(CLI::PositiveNumber);

    long lift_a = 1, lift_l = 5, lift_p = 2, lift_prec = 30;
    auto* lift = app.add_subcommand("lift", "level raising of s_{a/l} to level p*l");
    lift->add_option("--a", lift_a)->required();
    lift->add_option("--l", lift_l)->required();
    lift->add_option("--p", lift_p)->required();
    lift->add_option("--prec", lift_prec)->check(CLI::PositiveNumber);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the bundled acceptance suites");
    verify->add_option("--suite", suite, "all or a criterion number 1..15");

    std::string fi_fan;
    auto* fan_info = app.add_subcommand("fan-info", "validate a fan and report its structure");
    fan_info->add_option("--fan", fi_fan)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!cache_dir.empty()) set_cache_directory(cache_dir);

    try {
        if (*form) {
            DegreeFunction deg = load_degree(fa.fan_arg, fa.deg_arg);
            Json out;
            QSeries result(unsigned(deg.level()), 0);
            if (fa.pipeline == "lattice" || fa.pipeline == "both") {
                Json cert;
                result = toric_form_lattice_sum(deg, fa.prec, fa.certify ? &cert : nullptr);
                if (fa.certify) out["certificate"] = cert;
            }
            if (fa.pipeline == "cohomology" || fa.pipeline == "both") {
                QSeries coh = toric_form_cohomological(deg, fa.prec);
                if (fa.pipeline == "both") {
                    if (compare(result, coh, fa.prec) != SeriesVerdict::EqualToPrecision) {
                        std::cerr << "pipeline disagreement: lattice and cohomology series differ\n";
                        return 1;
                    }
                    out["pipelines_agree"] = true;
                } else {
                    result = coh;
                }
            }
            out["series"] = qseries_to_json(result);
            if (pretty) out["pretty"] = pretty_qseries(result);
            emit(out, pretty);
        } else if (*gen) {
            QSeries s = gen_type == "s" ? s_series(gen_a, gen_l, gen_k, gen_prec)
                                        : r_series(gen_k, gen_prec);
            Json out{{"series", qseries_to_json(s)}};
            if (pretty) out["pretty"] = pretty_qseries(s);
            emit(out, pretty);
        } else if (*hecke) {
            Json out;
            if (!h_fan.empty()) {
                DegreeFunction deg = load_degree(h_fan, h_deg);
                int w = deg.fan().rank();
                long B = std::max(sturm_bound(deg.level(), w), h_prec);
                GeneratorPoly g = express_in_generators(toric_form_lattice_sum(deg, B), w,
                                                        deg.level());
                QSeries tp = t_p(g, h_p, w, h_prec);
                QSeries sub = sublattice_side(deg, h_p, h_prec);
                out["t_p"] = qseries_to_json(tp);
                out["sublattice_side"] = qseries_to_json(sub);
                out["equal"] = compare(tp, sub, h_prec) == SeriesVerdict::EqualToPrecision;
                if (pretty) out["pretty"] = pretty_qseries(tp);
            } else {
                if (h_a == 0) throw Error("hecke needs either --fan/--deg or --a/--l");
                GeneratorPoly g;
                g.l = h_l;
                g.weight = 1;
                g.add_term({GeneratorSymbol::s(h_a, h_l, 1)}, Cyclotomic::one(unsigned(h_l)));
                QSeries tp = t_p(g, h_p, 1, h_prec);
                out["t_p"] = qseries_to_json(tp);
                if (pretty) out["pretty"] = pretty_qseries(tp);
            }
            emit(out, pretty);
        } else if (*fricke) {
            GeneratorPoly g = fricke_s1(f_a, f_l);
            QSeries s = evaluate(g, f_prec);
            Json out{{"poly", poly_to_json(g)}, {"series", qseries_to_json(s)}};
            if (pretty) out["pretty"] = pretty_qseries(s);
            emit(out, pretty);
        } else if (*lift) {
            GeneratorPoly g;
            g.l = lift_l;
            g.weight = 1;
            g.add_term({GeneratorSymbol::s(lift_a, lift_l, 1)}, Cyclotomic::one(unsigned(lift_l)));
            GeneratorPoly lifted = level_raise(g, lift_p);
            QSeries s = evaluate(lifted, lift_prec);
            Json out{{"poly", poly_to_json(lifted)}, {"series", qseries_to_json(s)}};
            if (pretty) out["pretty"] = pretty_qseries(s);
            emit(out, pretty);
        } else if (*verify) {
            bool all = true;
            if (suite == "all") {
                for (const CheckResult& r : run_all_criteria()) {
                    all = all && r.pass;
                    std::printf("%s  criterion %2d  %-42s %s [%.1fs]\n",
                                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                                r.detail.c_str(), r.seconds);
                }
            } else {
                CheckResult r = run_criterion(std::stoi(suite));
                all = r.pass;
                std::printf("%s  criterion %2d  %-42s %s [%.1fs]\n", r.pass ? "PASS" : "FAIL",
                            r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
            }
            return all ? 0 : 1;
        } else if (*fan_info) {
            Fan fan = fan_from_json(read_json_arg(fi_fan));
            Json out{{"rank", fan.rank()},
                     {"rays", fan_to_json(fan).at("rays")},
                     {"max_cones", fan_to_json(fan).at("max_cones")},
                     {"cones", fan.cones().size()},
                     {"complete", fan.is_complete()},
                     {"simplicial", fan.is_simplicial()},
                     {"smooth", fan.is_smooth()}};
            if (fan.is_complete()) {
                TruncationBound tb(fan);
                Json pts = Json::array();
                for (const auto& n : tb.interior_points()) pts.push_back(n);
                out["hull_interior_points"] = pts;
            }
            emit(out, pretty);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
