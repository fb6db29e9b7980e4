#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "crmodel/catalog.hpp"
#include "crmodel/degeneracy.hpp"
#include "crmodel/flow.hpp"
#include "crmodel/levi.hpp"
#include "crmodel/parser.hpp"
#include "crmodel/stabilizer.hpp"
#include "crmodel/suites.hpp"

using json = nlohmann::ordered_json;
using namespace crmodel;
namespace cat = crmodel::catalog;

namespace {

cat::Params parse_params(const std::vector<std::string>& kvs) {
    cat::Params out;
    for (const std::string& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param", "expected name=value, got '" + kv + "'");
        std::string name = kv.substr(0, eq);
        std::string val = kv.substr(eq + 1);
        if (val == "formal") out[name] = std::nullopt;
        else out[name] = ExactScalar(parse_rational(val));
    }
    return out;
}

std::array<ExactScalar, 3> parse_point(const std::string& text) {
    std::vector<Rational> parts;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        parts.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 6)
        throw CLI::ValidationError("--point", "expected 6 comma-separated rationals x1,y1,...,y3");
    auto mk = [&](int j) { return ExactScalar(Quad(parts[2 * j]), Quad(parts[2 * j + 1])); };
    return {mk(0), mk(1), mk(2)};
}

int basis_index(const std::string& label) {
    const auto& labels = cat::algebra_labels();
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw CLI::ValidationError("basis", "unknown basis label '" + label + "' (X3,X2,X1,X1',X0)");
}

std::string span_str(const Row& coeffs) {
    const auto& labels = cat::algebra_labels();
    std::string out;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        std::string cs = coeffs[k].str();
        std::string term = cs == "1" ? labels[k]
                         : cs == "-1" ? "-" + labels[k]
                         : (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) + "*" +
                               labels[k];
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

json suite_json(const suites::SuiteReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return {{"suite", rep.name}, {"pass", rep.all_pass()}, {"checks", checks}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crmodel: exact verification kernel for the model CR-cubic in C^3"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string algebra, surface, map_name, field_text, point_text, basis_a, basis_b;
    std::vector<std::string> param_kvs;
    std::string weight_range = "-3:5";
    int degree_bound = 3;
    double t_final = 1.0, step = 1e-3;
    std::string start_text, csv_path, suite_name;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--param", param_kvs, "parameter binding name=value or name=formal");
    };

    CLI::App* c_bracket = app.add_subcommand("bracket", "bracket of two basis fields");
    c_bracket->add_option("--algebra", algebra)->required();
    c_bracket->add_option("a", basis_a, "first basis label")->required();
    c_bracket->add_option("b", basis_b, "second basis label")->required();
    add_params(c_bracket);

    CLI::App* c_closure = app.add_subcommand("closure", "full bracket table of an algebra");
    c_closure->add_option("--algebra", algebra)->required();
    add_params(c_closure);

    CLI::App* c_verify = app.add_subcommand("verify-structure",
                                            "check an algebra against the abstract relations");
    c_verify->add_option("--algebra", algebra)->required();
    add_params(c_verify);

    CLI::App* c_tan = app.add_subcommand("tangency", "tangency of fields to a hypersurface");
    c_tan->add_option("--algebra", algebra);
    c_tan->add_option("--field", field_text, "field expression over the surface coordinates");
    c_tan->add_option("--surface", surface)->required();
    add_params(c_tan);

    CLI::App* c_levi = app.add_subcommand("levi", "exact Levi signature at a rational point");
    c_levi->add_option("--surface", surface)->required();
    c_levi->add_option("--point", point_text, "x1,y1,x2,y2,x3,y3")->required();
    add_params(c_levi);

    CLI::App* c_rank = app.add_subcommand("rank", "rank of the algebra values at a point");
    c_rank->add_option("--algebra", algebra)->required();
    c_rank->add_option("--point", point_text)->required();
    add_params(c_rank);

    CLI::App* c_inv = app.add_subcommand("invariant", "relative invariance of P and Q");

    CLI::App* c_push = app.add_subcommand("pushforward", "push a field through a catalog map");
    c_push->add_option("--map", map_name)->required();
    c_push->add_option("--field", field_text)->required();
    add_params(c_push);

    CLI::App* c_stab = app.add_subcommand("stabilizer", "graded infinitesimal automorphisms");
    c_stab->add_option("--surface", surface)->required();
    c_stab->add_option("--weight-range", weight_range, "k_min:k_max (default -3:5)");
    add_params(c_stab);

    CLI::App* c_degen = app.add_subcommand("degeneracy", "holomorphic degeneracy search");
    c_degen->add_option("--surface", surface)->required();
    c_degen->add_option("--degree-bound", degree_bound);
    add_params(c_degen);

    CLI::App* c_flow = app.add_subcommand("flow", "integrate a basis flow and report drift");
    c_flow->add_option("--algebra", algebra)->required();
    c_flow->add_option("--basis", basis_a)->required();
    c_flow->add_option("--start", start_text, "x1,y1,x2,y2,x3,y3 (floating)")->required();
    c_flow->add_option("--time", t_final);
    c_flow->add_option("--step", step);
    c_flow->add_option("--csv", csv_path, "write trajectory CSV to this file");
    add_params(c_flow);

    CLI::App* c_classify = app.add_subcommand("classify", "orbit class of a rational point");
    c_classify->add_option("--point", point_text)->required();

    CLI::App* c_suite = app.add_subcommand("suite", "run a named verification suite");
    c_suite->add_option("name", suite_name, "brackets|invariants|tangency|equivalences|levi|stabilizers|flows|all")
        ->required();

    CLI::App* c_catalog = app.add_subcommand("catalog", "list catalog entries");

    CLI11_PARSE(app, argc, argv);

    try {
        cat::Params params = parse_params(param_kvs);

        if (c_bracket->parsed()) {
            auto basis = cat::make_algebra(algebra, params);
            HoloVField br = basis[basis_index(basis_a)].bracket(basis[basis_index(basis_b)]);
            auto coeffs = field_in_real_span(br, basis);
            std::string combo = coeffs ? span_str(*coeffs) : br.str();
            if (as_json)
                std::cout << json{{"algebra", algebra},
                                  {"bracket", "[" + basis_a + "," + basis_b + "]"},
                                  {"result", combo},
                                  {"field", br.str()}}
                                 .dump(2)
                          << "\n";
            else std::cout << combo << "\n";
            return 0;
        }
        if (c_closure->parsed()) {
            auto basis = cat::make_algebra(algebra, params);
            ClosureResult cl = closure_table(basis, cat::algebra_labels());
            if (!cl.closed) {
                std::cout << "not closed at [" << cl.bad_i << "," << cl.bad_j << "]\n";
                return 1;
            }
            if (as_json) {
                json rows = json::array();
                size_t n = cl.table->dim();
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = i + 1; j < n; ++j) {
                        Row r(cl.table->c[i][j]);
                        rows.push_back({{"i", cl.table->labels[i]},
                                        {"j", cl.table->labels[j]},
                                        {"coeffs", span_str(r)}});
                    }
                std::cout << json{{"algebra", algebra}, {"table", rows}}.dump(2) << "\n";
            } else {
                std::cout << cl.table->str();
            }
            return 0;
        }
        if (c_verify->parsed()) {
            auto basis = cat::make_algebra(algebra, params);
            MatchReport rep = verify_structure(basis, cat::abstract_relations(),
                                               cat::algebra_rescaling(algebra));
            if (as_json) {
                json devs = json::array();
                for (const auto& d : rep.deviations)
                    devs.push_back({{"i", d.i}, {"j", d.j}, {"k", d.k},
                                    {"got", d.got.str()}, {"want", d.want.str()}});
                std::cout << json{{"algebra", algebra}, {"match", rep.ok},
                                  {"deviations", devs}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << rep.str() << "\n";
            }
            return rep.ok ? 0 : 1;
        }
        if (c_tan->parsed()) {
            Hypersurface m = cat::make_hypersurface(surface, params);
            std::vector<std::pair<std::string, HoloVField>> fields;
            if (!algebra.empty()) {
                auto basis = cat::make_algebra(algebra, params);
                for (size_t i = 0; i < basis.size(); ++i)
                    fields.emplace_back(cat::algebra_labels()[i], basis[i]);
            }
            if (!field_text.empty())
                fields.emplace_back(field_text, parse_field(field_text, m.space.cx));
            if (fields.empty())
                throw CLI::ValidationError("tangency", "need --algebra or --field");
            bool all = true;
            json rows = json::array();
            for (const auto& [name, x] : fields) {
                bool ok = m.codim() == 2 ? tangency_chart(x, m) : tangency_divisibility(x, m);
                all = all && ok;
                rows.push_back({{"field", name}, {"tangent", ok}});
                if (!as_json)
                    std::cout << name << ": " << (ok ? "tangent" : "NOT tangent") << "\n";
            }
            if (as_json)
                std::cout << json{{"surface", surface}, {"all", all}, {"fields", rows}}.dump(2)
                          << "\n";
            return all ? 0 : 1;
        }
        if (c_levi->parsed()) {
            Hypersurface m = cat::make_hypersurface(surface, params);
            LeviReport rep = levi_at(m, parse_point(point_text));
            if (as_json) {
                json form = json::array();
                for (int a = 0; a < 2; ++a)
                    form.push_back({rep.form[a][0].str(), rep.form[a][1].str()});
                std::cout << json{{"surface", surface},
                                  {"signature",
                                   {rep.n_plus, rep.n_minus, rep.n_zero}},
                                  {"form", form},
                                  {"orientation_fixed", rep.orientation_fixed},
                                  {"orientation", rep.orientation}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << rep.str() << "\n";
            }
            return 0;
        }
        if (c_rank->parsed()) {
            auto basis = cat::make_algebra(algebra, params);
            const Space& sp = basis[0].table()->same_as(*cat::ambient_space().cx)
                                  ? cat::ambient_space()
                                  : cat::tube_space();
            int r = field_rank_at(basis, sp, parse_point(point_text));
            if (as_json) std::cout << json{{"rank", r}}.dump(2) << "\n";
            else std::cout << r << "\n";
            return 0;
        }
        if (c_inv->parsed()) {
            suites::SuiteReport rep = suites::run_suite("invariants");
            if (as_json) std::cout << suite_json(rep).dump(2) << "\n";
            else std::cout << rep.str();
            return rep.all_pass() ? 0 : 1;
        }
        if (c_push->parsed()) {
            PolyMap f = cat::make_map(map_name, params);
            HoloVField x = parse_field(field_text, f.src());
            HoloVField y = f.pushforward(x);
            if (as_json) std::cout << json{{"field", y.str()}}.dump(2) << "\n";
            else std::cout << y.str() << "\n";
            return 0;
        }
        if (c_stab->parsed()) {
            auto colon = weight_range.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("--weight-range", "expected k_min:k_max");
            int kmin = std::stoi(weight_range.substr(0, colon));
            int kmax = std::stoi(weight_range.substr(colon + 1));
            Hypersurface m = cat::make_hypersurface(surface, params);
            auto comps = graded_stabilizer(m, kmin, kmax);
            if (as_json) {
                json rows = json::array();
                for (const auto& c : comps) {
                    json fields = json::array();
                    for (const auto& f : c.basis) fields.push_back(f.str());
                    rows.push_back({{"k", c.k}, {"dim", c.dim()}, {"basis", fields}});
                }
                std::cout << json{{"surface", surface}, {"components", rows}}.dump(2) << "\n";
            } else {
                std::cout << "dims " << dims_str(comps) << "\n";
                for (const auto& c : comps)
                    for (const auto& f : c.basis)
                        std::cout << "  k=" << c.k << ": " << f.str() << "\n";
            }
            return 0;
        }
        if (c_degen->parsed()) {
            Hypersurface m = cat::make_hypersurface(surface, params);
            auto basis = holomorphic_degeneracy_search(m, degree_bound);
            if (as_json) {
                json fields = json::array();
                for (const auto& f : basis) fields.push_back(f.str());
                std::cout << json{{"surface", surface}, {"degree_bound", degree_bound},
                                  {"degenerate", !basis.empty()}, {"basis", fields}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << (basis.empty() ? "no degenerate fields" : "degenerate") << "\n";
                for (const auto& f : basis) std::cout << "  " << f.str() << "\n";
            }
            return 0;
        }
        if (c_flow->parsed()) {
            auto basis = cat::make_algebra(algebra, params);
            int bi = basis_index(basis_a);
            std::array<double, 6> start{};
            {
                std::stringstream ss(start_text);
                std::string piece;
                int i = 0;
                while (std::getline(ss, piece, ',') && i < 6) start[i++] = std::stod(piece);
                if (i != 6)
                    throw CLI::ValidationError("--start", "expected 6 comma-separated numbers");
            }
            Trajectory traj = integrate_flow(basis[bi], start, t_final, step, basis_a);
            const Space& sp = basis[0].table()->same_as(*cat::ambient_space().cx)
                                  ? cat::ambient_space()
                                  : cat::tube_space();
            DriftReport dr = invariant_drift(traj, sp, cat::invariant_P(), cat::invariant_Q());
            if (!csv_path.empty()) {
                std::ofstream os(csv_path);
                os << trajectory_csv(traj, sp, cat::invariant_P(), cat::invariant_Q());
            }
            json rep = {{"field", basis_a},
                        {"time", t_final},
                        {"step", step},
                        {"drift_P", dr.drift_p},
                        {"drift_Q", dr.drift_q},
                        {"drift_mu2", dr.drift_mu2},
                        {"P_nonzero", dr.p_nonzero}};
            if (as_json) std::cout << rep.dump(2) << "\n";
            else
                std::cout << "drift P " << dr.drift_p << ", Q " << dr.drift_q << ", mu2 "
                          << dr.drift_mu2 << "\n";
            return 0;
        }
        if (c_classify->parsed()) {
            OrbitClass c = classify_point_exact(cat::ambient_space(), cat::invariant_P(),
                                                cat::invariant_Q(), parse_point(point_text));
            json rep = {{"label", c.label},
                        {"sign_P", c.sign_p},
                        {"Q_zero", c.q_zero},
                        {"exact", c.exact}};
            if (c.mu2_exact) rep["mu2"] = c.mu2_exact->str();
            if (as_json) std::cout << rep.dump(2) << "\n";
            else {
                std::cout << c.label;
                if (c.mu2_exact) std::cout << "  mu2 = " << c.mu2_exact->str();
                std::cout << "\n";
            }
            return 0;
        }
        if (c_suite->parsed()) {
            std::vector<std::string> names;
            if (suite_name == "all") names = suites::suite_names();
            else names.push_back(suite_name);
            bool all = true;
            json reports = json::array();
            for (const std::string& n : names) {
                suites::SuiteReport rep = suites::run_suite(n);
                all = all && rep.all_pass();
                if (as_json) reports.push_back(suite_json(rep));
                else std::cout << rep.str();
            }
            if (as_json) std::cout << reports.dump(2) << "\n";
            return all ? 0 : 1;
        }
        if (c_catalog->parsed()) {
            auto entries = cat::manifest();
            if (as_json) {
                json rows = json::array();
                for (const auto& e : entries) {
                    json pars = json::array();
                    for (const auto& [n, role] : e.parameters)
                        pars.push_back({{"name", n}, {"role", role}});
                    rows.push_back({{"name", e.name}, {"kind", e.kind}, {"parameters", pars},
                                    {"note", e.note}});
                }
                std::cout << rows.dump(2) << "\n";
            } else {
                for (const auto& e : entries)
                    std::cout << e.kind << "  " << e.name << "  -- " << e.note << "\n";
            }
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
