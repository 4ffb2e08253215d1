#include "halg/cli.hpp"

#include <chrono>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "halg/affinization.hpp"
#include "halg/cext.hpp"
#include "halg/conformal.hpp"
#include "halg/constructions.hpp"
#include "halg/errors.hpp"
#include "halg/expr.hpp"
#include "halg/spec_io.hpp"
#include "halg/superalgebra.hpp"

namespace halg {

namespace {

using Json = nlohmann::ordered_json;

Json witness_json(const Witness& w) {
    Json residual = Json::array();
    for (const auto& [label, value] : w.residual)
        residual.push_back(Json::array({label, value}));
    Json out = Json::object();
    out["axiom"] = w.axiom;
    out["elements"] = w.elements;
    out["residual"] = std::move(residual);
    return out;
}

Json report_json(const CheckReport& rep) {
    Json witnesses = Json::array();
    for (const auto& w : rep.witnesses) witnesses.push_back(witness_json(w));
    Json out = Json::object();
    out["check"] = rep.check;
    out["ok"] = rep.ok;
    out["failures"] = rep.failure_count;
    out["witnesses"] = std::move(witnesses);
    return out;
}

Json cvec_json(const SuperBasis& basis, const CVec& v) {
    Json out = Json::array();
    for (std::size_t t = 0; t < v.size(); ++t)
        if (!v[t].is_zero())
            out.push_back(Json::array({basis.names[t], v[t].str()}));
    return out;
}

// Collects the same content for both output formats.
struct Emitter {
    bool json = false;
    Json doc = Json::object();
    std::ostringstream text;

    Emitter(const std::string& format, const std::vector<std::string>& args) {
        json = format == "json";
        doc["schema"] = 1;
        std::string echo = "halg";
        for (const auto& a : args) echo += " " + a;
        doc["command"] = echo;
    }

    void report(const CheckReport& rep) {
        if (!doc.contains("checks")) doc["checks"] = Json::array();
        doc["checks"].push_back(report_json(rep));
        text << rep.summary() << "\n";
    }

    void error(const std::string& message) {
        doc["error"] = message;
        text << "error: " << message << "\n";
    }

    void line(const std::string& s) { text << s << "\n"; }

    std::string render(double elapsed_ms) {
        doc["elapsed_ms"] = elapsed_ms;
        if (json) return doc.dump(2) + "\n";
        return text.str();
    }
};

const SuperAlgebra& need_finite(const AlgebraFile& af) {
    if (af.kind != FileKind::FiniteDimensional)
        throw ValidationError("this command needs a finite-dimensional file");
    return af.algebra;
}

const ConformalAlgebra& need_conformal(const AlgebraFile& af) {
    if (af.kind != FileKind::Conformal)
        throw ValidationError("this command needs a conformal file");
    return af.conformal;
}

Scalar parse_file_scalar(const std::string& text,
                         const std::vector<std::string>& params) {
    const std::set<std::string> set(params.begin(), params.end());
    ExprOptions opts;
    opts.allowed_params = &set;
    opts.allow_formal = false;
    return parse_scalar(text, opts);
}

// "lo..hi" with signed integer ends.
std::pair<long, long> parse_window(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw ParseError("window must look like <lo>..<hi>");
    try {
        std::size_t used = 0;
        const long lo = std::stol(text.substr(0, dots), &used);
        if (used != dots) throw ParseError("window must look like <lo>..<hi>");
        const std::string rest = text.substr(dots + 2);
        const long hi = std::stol(rest, &used);
        if (used != rest.size())
            throw ParseError("window must look like <lo>..<hi>");
        if (lo > hi) throw ParseError("window is empty");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw ParseError("window must look like <lo>..<hi>");
    } catch (const std::out_of_range&) {
        throw ParseError("window bound out of range");
    }
}

// The compatible pair named by the file, deriving the graded commutator
// of circ when the file does not carry a bracket of its own. No gate on
// the derived bracket: downstream checkers are the ones reporting on bad
// input, witnesses intact.
GDStructure gd_of(const SuperAlgebra& A) {
    if (A.has_product("bracket")) return GDStructure{A};
    GDStructure S{A};
    const ProductTable& circ = S.algebra.product(S.circ);
    const std::size_t n = S.algebra.dim();
    ProductTable bracket(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long sign =
                (S.algebra.basis.parity(i) && S.algebra.basis.parity(j)) ? 1
                                                                         : -1;
            Vec v = circ.at(i, j);
            axpy(v, Scalar(sign), circ.at(j, i));
            bracket.set(i, j, std::move(v));
        }
    S.algebra.products.emplace(S.bracket, std::move(bracket));
    return S;
}

void emit_table(Emitter& em, const std::string& serialized,
                const std::string& outfile) {
    em.doc["table"] = Json::parse(serialized);
    if (!outfile.empty()) {
        em.doc["outfile"] = outfile;
        em.line("wrote " + outfile);
    } else {
        em.text << serialized;
    }
}

} // namespace

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact arithmetic for twisted graded algebra structures"};
    app.name("halg");
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = app.add_option("--seed", seed, "echoed into reports");

    std::string file, structure, outfile, map_name, shift_text, window_text;
    std::string cocycle_file, center_name = "c", center_scale = "1";
    std::string kind;
    bool classical = false, prime = false, delta = false;
    unsigned degree = 0;
    std::size_t max_degree = 3;

    CLI::App* check = app.add_subcommand("check", "verify an axiom system");
    check->add_option("file", file)->required();
    check
        ->add_option("--structure", structure,
                     "which axiom system to verify")
        ->required()
        ->check(CLI::IsMember({"hom-lie-super", "hom-novikov-super",
                               "hom-assoc", "gd", "hom-poisson", "conformal"}));
    check->add_flag("--classical", classical,
                    "replace the twist map by the identity first");

    CLI::App* construct =
        app.add_subcommand("construct", "build a derived structure");
    construct->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"supercommutator", "yau-twist", "derivation",
                               "poisson", "star"}));
    construct->add_option("file", file)->required();
    construct->add_option("--shift", shift_text, "scalar shift term");
    construct->add_option("--map", map_name, "auxiliary map name");
    construct->add_flag("--prime", prime, "star variant acting on the right");
    construct->add_option("-o,--output", outfile)->required();

    CLI::App* affinize =
        app.add_subcommand("affinize", "check the loop-space bracket");
    affinize->add_option("file", file)->required();
    affinize->add_flag("--delta", delta, "symbolic powers");
    affinize->add_option("--window", window_text, "concrete powers <lo>..<hi>");

    CLI::App* conformalize = app.add_subcommand(
        "conformalize", "quadratic bracket table of a compatible pair");
    conformalize->add_option("file", file)->required();
    conformalize->add_option("-o,--output", outfile)->required();

    CLI::App* gd_extract = app.add_subcommand(
        "gd-extract", "recover the compatible pair of a quadratic table");
    gd_extract->add_option("file", file)->required();
    gd_extract->add_option("-o,--output", outfile)->required();

    CLI::App* solve_alpha_cmd = app.add_subcommand(
        "solve-alpha", "solve for twist maps satisfying the Jacobi identity");
    solve_alpha_cmd->add_option("file", file)->required();
    CLI::Option* degree_opt = solve_alpha_cmd->add_option(
        "--degree", degree, "D-degree bound for the unknown map");

    CLI::App* cocycles_cmd =
        app.add_subcommand("cocycles", "solve for the 2-cocycle space");
    cocycles_cmd->add_option("file", file)->required();
    cocycles_cmd->add_option("--max-degree", max_degree,
                             "largest Lm power of the unknown form");
    cocycles_cmd->add_option("-o,--output", outfile,
                             "write each basis form to <prefix><k>.json");

    CLI::App* extend_cmd = app.add_subcommand(
        "extend", "one-dimensional central extension by a 2-cocycle");
    extend_cmd->add_option("file", file)->required();
    extend_cmd->add_option("--cocycle", cocycle_file)->required();
    extend_cmd->add_option("-o,--output", outfile);
    extend_cmd->add_option("--center", center_name, "name of the new generator");
    extend_cmd->add_option("--center-scale", center_scale,
                           "twist map eigenvalue on the center");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify-thm51", "degree relations of a cocycle over a quadratic table");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--cocycle", cocycle_file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {0, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }

    const auto started = std::chrono::steady_clock::now();
    Emitter em(format, args);
    if (seed_opt->count()) em.doc["seed"] = seed;
    auto render = [&](int code) {
        const double ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - started)
                .count();
        return RunResult{code, em.render(ms)};
    };

    try {
        if (*check) {
            const AlgebraFile af = read_algebra_file(file);
            CheckReport rep;
            if (structure == "conformal") {
                ConformalAlgebra R = need_conformal(af);
                if (classical) {
                    std::vector<CVec> cols;
                    for (std::size_t i = 0; i < R.dim(); ++i)
                        cols.push_back(cgen(R.dim(), i));
                    R.set_alpha(std::move(cols));
                }
                rep = check_conformal_axioms(R);
            } else {
                SuperAlgebra A = need_finite(af);
                if (classical) {
                    auto it = A.maps.find("alpha");
                    if (it == A.maps.end())
                        A.maps.emplace("alpha", EvenMap::identity(A.dim()));
                    else
                        it->second = EvenMap::identity(A.dim());
                }
                if (structure == "hom-lie-super")
                    rep = check_hom_lie_super(A, "bracket", "alpha");
                else if (structure == "hom-novikov-super")
                    rep = check_hom_novikov_super(A, "circ", "alpha");
                else if (structure == "hom-assoc")
                    rep = check_hom_associative(A, "mul", "alpha", false);
                else if (structure == "gd")
                    rep = check_gd(A, "bracket", "circ", "alpha");
                else
                    rep = check_hom_poisson(A, "mul", "bracket", "alpha");
            }
            em.report(rep);
            em.doc["ok"] = rep.ok;
            return render(rep.ok ? 0 : 1);
        }

        if (*construct) {
            const AlgebraFile af = read_algebra_file(file);
            const SuperAlgebra& A = need_finite(af);
            const Scalar shift = shift_text.empty()
                                     ? Scalar(0)
                                     : parse_file_scalar(shift_text, A.params);
            int code = 0;
            SuperAlgebra result;
            if (kind == "supercommutator") {
                result = supercommutator_gd(A).algebra;
            } else if (kind == "yau-twist") {
                result =
                    yau_twist(A, map_name.empty() ? "alpha" : map_name);
            } else if (kind == "derivation") {
                result = derivation_construction(
                             A, "mul", map_name.empty() ? "D" : map_name,
                             "alpha", shift)
                             .algebra;
            } else if (kind == "poisson") {
                result = poisson_construction(
                             A, "mul", "bracket",
                             map_name.empty() ? "D" : map_name, "alpha", shift)
                             .algebra;
            } else {
                const StarVerdict v = star_construction(
                    A, "bracket", "alpha", map_name.empty() ? "f" : map_name,
                    prime);
                em.report(v.conditions);
                em.report(v.direct);
                result = v.structure.algebra;
                code = v.conditions_hold ? 0 : 1;
            }
            write_algebra_file(outfile, result);
            emit_table(em, serialize(result), outfile);
            return render(code);
        }

        if (*affinize) {
            if (delta == !window_text.empty())
                throw ParseError("choose exactly one of --delta or --window");
            const AlgebraFile af = read_algebra_file(file);
            const GDStructure S = gd_of(need_finite(af));
            CheckReport rep;
            if (delta) {
                rep = check_affinization_delta(S);
            } else {
                const auto [lo, hi] = parse_window(window_text);
                rep = check_affinization(S, lo, hi);
            }
            em.report(rep);
            em.doc["ok"] = rep.ok;
            return render(rep.ok ? 0 : 1);
        }

        if (*conformalize) {
            const AlgebraFile af = read_algebra_file(file);
            const ConformalAlgebra R = quadratic_from_gd(gd_of(need_finite(af)));
            write_algebra_file(outfile, R);
            emit_table(em, serialize(R), outfile);
            return render(0);
        }

        if (*gd_extract) {
            const AlgebraFile af = read_algebra_file(file);
            const GDStructure S = gd_from_quadratic(need_conformal(af));
            write_algebra_file(outfile, S.algebra);
            emit_table(em, serialize(S.algebra), outfile);
            return render(0);
        }

        if (*solve_alpha_cmd) {
            const AlgebraFile af = read_algebra_file(file);
            const ConformalAlgebra& R = need_conformal(af);
            const unsigned bound = degree_opt->count()
                                       ? degree
                                       : default_alpha_degree_bound(R);
            const AlphaSpace space = solve_alpha(R, bound);
            em.doc["degree_bound"] = bound;
            em.doc["dimension"] = space.dimension();
            em.line("degree bound: " + std::to_string(bound));
            em.line("solution dimension: " + std::to_string(space.dimension()));
            Json basis = Json::array();
            for (std::size_t k = 0; k < space.dimension(); ++k) {
                const std::vector<CVec> cols = space.materialize(R, k);
                Json columns = Json::array();
                em.line("basis[" + std::to_string(k) + "]:");
                for (std::size_t i = 0; i < R.dim(); ++i) {
                    columns.push_back(Json::array(
                        {R.basis.names[i], cvec_json(R.basis, cols[i])}));
                    em.line("  alpha(" + R.basis.names[i] +
                            ") = " + cvec_str(R.basis, cols[i]));
                }
                basis.push_back(std::move(columns));
            }
            em.doc["basis"] = std::move(basis);
            return render(0);
        }

        if (*cocycles_cmd) {
            const AlgebraFile af = read_algebra_file(file);
            const ConformalAlgebra& R = need_conformal(af);
            const CocycleSpace space = solve_cocycle_space(R, max_degree);
            em.doc["max_degree"] = max_degree;
            em.doc["dimension"] = space.dimension();
            em.line("max degree: " + std::to_string(max_degree));
            em.line("cocycle space dimension: " +
                    std::to_string(space.dimension()));
            Json basis = Json::array();
            for (std::size_t k = 0; k < space.dimension(); ++k) {
                const Cocycle f = space.basis_cocycle(k);
                Json entry = Json::object();
                Json entries = Json::array();
                em.line("cocycle[" + std::to_string(k) + "]:");
                for (std::size_t i = 0; i < f.dim; ++i)
                    for (std::size_t j = 0; j < f.dim; ++j) {
                        const FormalPoly v = f.value(i, j);
                        if (v.is_zero()) continue;
                        entries.push_back(Json::array({R.basis.names[i],
                                                       R.basis.names[j],
                                                       v.str()}));
                        em.line("  f(" + R.basis.names[i] + "," +
                                R.basis.names[j] + ") = " + v.str());
                    }
                entry["entries"] = std::move(entries);
                if (!outfile.empty()) {
                    const std::string path =
                        outfile + std::to_string(k) + ".json";
                    write_cocycle_file(path, f, R.basis);
                    entry["file"] = path;
                    em.line("  wrote " + path);
                }
                basis.push_back(std::move(entry));
            }
            em.doc["basis"] = std::move(basis);
            return render(0);
        }

        if (*extend_cmd) {
            const AlgebraFile af = read_algebra_file(file);
            const ConformalAlgebra& R = need_conformal(af);
            const Cocycle f = read_cocycle_file(cocycle_file, R.basis, R.params);
            const Scalar scale = parse_file_scalar(center_scale, R.params);
            const CentralExtension ext =
                extend_by_cocycle(R, f, center_name, scale);
            if (!outfile.empty()) write_algebra_file(outfile, ext.extended);
            emit_table(em, serialize(ext.extended), outfile);
            return render(0);
        }

        if (*verify_cmd) {
            const AlgebraFile af = read_algebra_file(file);
            const ConformalAlgebra& R = need_conformal(af);
            const GDStructure S = gd_from_quadratic(R);
            const Cocycle f = read_cocycle_file(cocycle_file, R.basis, R.params);
            const CheckReport rep = verify_degree_relations(S, f);
            em.report(rep);
            em.doc["ok"] = rep.ok;
            return render(rep.ok ? 0 : 1);
        }

        throw std::logic_error("unhandled subcommand");
    } catch (const PreconditionFailed& e) {
        em.error(e.what());
        em.report(e.report);
        return render(1);
    } catch (const HypothesisFailed& e) {
        em.error(e.what());
        em.report(e.report);
        return render(1);
    } catch (const NotACocycle& e) {
        em.error(e.what());
        em.report(e.report);
        return render(1);
    } catch (const ParseError& e) {
        em.error(e.what());
        return render(2);
    } catch (const Error& e) {
        em.error(e.what());
        return render(3);
    }
}

} // namespace halg
