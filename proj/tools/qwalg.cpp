// qwalg -- command-line front end: class checks, centers, theorem suites,
// statement evaluation, countermodel search, enumeration, order export.
//
// Exit codes: 0 pass/holds, 1 fail/refuted, 2 usage or input error,
// 3 budget exhausted.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwa/algebra.hpp"
#include "qwa/axioms.hpp"
#include "qwa/builtins.hpp"
#include "qwa/center.hpp"
#include "qwa/corpus.hpp"
#include "qwa/search.hpp"
#include "qwa/term.hpp"

using namespace qwa;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

FiniteAlgebra load_input(const std::string& path) {
    // builtin names resolve directly so scripts need no temp files
    if (auto b = builtin_algebra(path)) return *b;
    return load_algebra_file(path);
}

AlgClass parse_class(const std::string& tag) {
    auto c = class_from_tag(tag);
    if (!c) throw std::runtime_error("unknown class tag '" + tag + "'");
    return *c;
}

Subset parse_scope(const FiniteAlgebra& a, const std::string& scope) {
    if (scope == "all") return Subset::full(a.n);
    if (scope == "z") return wajsberg_center(a);
    if (scope == "o") return oml_center(a);
    throw std::runtime_error("unknown scope '" + scope + "' (use all, z or o)");
}

bool parse_format(const std::string& format) {
    if (format == "text") return false;
    if (format == "json") return true;
    throw std::runtime_error("unknown format '" + format + "' (use text or json)");
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json witness_json(const FiniteAlgebra& a, const Witness& w) {
    json assign = json::object();
    for (const auto& [v, e] : w.assign) assign[std::string(1, v)] = a.name(e);
    return json{{"assign", assign}, {"axiom", w.axiom}};
}

json report_json(const FiniteAlgebra& a, const ClassReport& r) {
    json j{{"class", class_tag(r.cls)}, {"pass", r.pass}};
    j["witness"] = r.witness ? witness_json(a, *r.witness) : json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json subset_json(const FiniteAlgebra& a, const Subset& s) {
    json out = json::array();
    for (Elem x : s.elements()) out.push_back(a.name(x));
    return out;
}

json center_json(const FiniteAlgebra& a, const CenterReport& rep) {
    json fails = json::array();
    for (const auto& f : rep.failures) {
        json assign = json::object();
        for (const auto& [v, e] : f.witness) assign[std::string(1, v)] = a.name(e);
        fails.push_back(json{{"tag", f.tag}, {"witness", assign}});
    }
    return json{{"elements", subset_json(a, rep.center)},
                {"closure", rep.closure_ok},
                {"structure", rep.structure_ok},
                {"failures", fails}};
}

int cmd_check(const std::string& file, const std::string& cls_tag, bool force, bool leqq_strict,
              bool as_json) {
    FiniteAlgebra a = load_input(file);
    CheckOptions opts{force, leqq_strict};
    if (cls_tag == "all") {
        bool all_pass = true;
        json arr = json::array();
        for (const auto& r : classify(a, force)) {
            if (as_json)
                arr.push_back(report_json(a, r));
            else
                std::cout << format_report(a, r) << '\n';
            all_pass = all_pass && r.pass;
        }
        if (as_json) emit(arr);
        return all_pass ? kExitPass : kExitFail;
    }
    ClassReport r = check_class(a, parse_class(cls_tag), opts);
    if (as_json)
        emit(report_json(a, r));
    else
        std::cout << format_report(a, r) << '\n';
    return r.pass ? kExitPass : kExitFail;
}

void print_center_report(const FiniteAlgebra& a, const char* prefix, const CenterReport& rep) {
    std::cout << prefix << "-CHECK closure " << (rep.closure_ok ? "PASS" : "FAIL") << '\n';
    std::cout << prefix << "-CHECK structure " << (rep.structure_ok ? "PASS" : "FAIL") << '\n';
    for (const auto& f : rep.failures)
        std::cout << prefix << "-FAIL " << format_center_failure(a, f) << '\n';
}

int cmd_centers(const std::string& file, bool as_json) {
    FiniteAlgebra a = load_input(file);
    CenterReport z = verify_wajsberg_center(a);
    CenterReport o = verify_oml_center(a);
    if (as_json) {
        emit(json{{"z", center_json(a, z)}, {"o", center_json(a, o)}});
    } else {
        std::cout << "Z = " << format_subset(a, z.center) << '\n';
        print_center_report(a, "Z", z);
        std::cout << "O = " << format_subset(a, o.center) << '\n';
        print_center_report(a, "O", o);
    }
    return z.pass() && o.pass() ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& file, const std::string& corpus_path, bool as_json) {
    FiniteAlgebra a = load_input(file);
    bool ok = true;
    json out;

    ClassReport qw = check_qw(a);
    if (as_json)
        out["qw"] = report_json(a, qw);
    else
        std::cout << format_report(a, qw) << '\n';
    ok = ok && qw.pass;

    json theorems = json::object();
    auto suite = [&](const char* name, const CenterReport& rep) {
        if (as_json) {
            theorems[name] = center_json(a, rep);
        } else {
            std::cout << "THEOREM " << name << ' ' << (rep.pass() ? "PASS" : "FAIL") << '\n';
            for (const auto& f : rep.failures)
                std::cout << "THEOREM " << name << " failure: " << format_center_failure(a, f)
                          << '\n';
        }
        ok = ok && rep.pass();
    };
    suite("wajsberg-center", verify_wajsberg_center(a));
    suite("center-lattice", verify_center_lattice(a));
    suite("kleene-center", verify_kleene_center(a));
    suite("oml-center", verify_oml_center(a));
    if (check_quasi_linear(a).pass)
        suite("quasilinear-center", verify_quasilinear_center(a));
    else if (as_json)
        theorems["quasilinear-center"] = json(nullptr);
    else
        std::cout << "THEOREM quasilinear-center SKIP (not quasilinear)\n";
    if (as_json) out["theorems"] = theorems;

    Subset o = oml_center(a);
    if (auto w = latl_distributivity_witness(a, o)) {
        auto [x, y, z] = *w;
        Elem lhs = a.supL(x, a.infL(y, z)), rhs = a.infL(a.supL(x, y), a.supL(x, z));
        if (as_json)
            out["distributivity_witness"] = json{{"x", a.name(x)},   {"y", a.name(y)},
                                                 {"z", a.name(z)},   {"lhs", a.name(lhs)},
                                                 {"rhs", a.name(rhs)}};
        else
            std::cout << "NOTE orthocenter lattice not distributive: witness x=" << a.name(x)
                      << " y=" << a.name(y) << " z=" << a.name(z) << " lhs=" << a.name(lhs)
                      << " rhs=" << a.name(rhs) << '\n';
    } else if (as_json) {
        out["distributivity_witness"] = json(nullptr);
    } else {
        std::cout << "NOTE orthocenter lattice distributive (no witness)\n";
    }

    std::vector<CorpusEntry> entries;
    if (!corpus_path.empty()) {
        std::ifstream in(corpus_path);
        if (!in) throw std::runtime_error("cannot open catalog '" + corpus_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        entries = parse_corpus(buf.str());
    }
    auto results = corpus_path.empty() ? run_corpus(a) : run_corpus(a, entries);
    int pass = 0, fail = 0, skip = 0, info = 0;
    json centries = json::array();
    for (const auto& r : results) {
        if (as_json) {
            json e{{"id", r.entry->id}};
            if (r.entry->diagnostic) {
                e["status"] = r.status == CorpusStatus::Skipped ? "skipped"
                              : r.details.holds                 ? "holds"
                                                                : "diverges";
            } else {
                e["status"] = r.status == CorpusStatus::Pass      ? "pass"
                              : r.status == CorpusStatus::Skipped ? "skip"
                                                                  : "fail";
            }
            if (!r.details.holds && r.status != CorpusStatus::Skipped) {
                json assign = json::object();
                for (const auto& [v, el] : r.details.witness) assign[v] = a.name(el);
                e["witness"] = assign;
            }
            centries.push_back(e);
        } else {
            std::cout << format_corpus_result(a, r) << '\n';
        }
        if (r.entry->diagnostic)
            ++info;
        else if (r.status == CorpusStatus::Pass)
            ++pass;
        else if (r.status == CorpusStatus::Fail)
            ++fail;
        else
            ++skip;
    }
    if (as_json) {
        out["corpus"] = json{{"pass", pass},   {"fail", fail},      {"skip", skip},
                             {"info", info},   {"entries", centries}};
        emit(out);
    } else {
        std::cout << "CORPUS summary: pass " << pass << " fail " << fail << " skip " << skip
                  << " info " << info << '\n';
    }
    ok = ok && corpus_all_pass(results);
    return ok ? kExitPass : kExitFail;
}

int cmd_eval(const std::string& file, const std::string& stmt_text, const std::string& scope,
             bool as_json) {
    FiniteAlgebra a = load_input(file);
    Statement s = parse_statement(stmt_text);
    HoldsResult r = holds(a, s, parse_scope(a, scope));
    if (as_json) {
        json j{{"holds", r.holds}};
        if (!r.holds) {
            json assign = json::object();
            for (const auto& [v, e] : r.witness) assign[v] = a.name(e);
            j["witness"] = assign;
        }
        emit(j);
    } else {
        std::cout << format_holds(a, r) << '\n';
    }
    return r.holds ? kExitPass : kExitFail;
}

int cmd_refute(const std::string& stmt_text, const std::string& cls_tag, int max_size,
               int workers, std::uint64_t node_budget, double time_budget,
               const std::string& out_path, bool as_json) {
    Statement s = parse_statement(stmt_text);
    SearchSpec limits;
    limits.workers = workers;
    limits.node_budget = node_budget;
    limits.time_budget_seconds = time_budget;
    RefuteResult res = find_countermodel(s, parse_class(cls_tag), max_size, limits);
    if (res.counter) {
        const auto& cm = *res.counter;
        std::string text = format_algebra(cm.model);
        if (!out_path.empty()) std::ofstream(out_path) << text;
        if (as_json) {
            json assign = json::object();
            for (const auto& [v, e] : cm.witness) assign[v] = cm.model.name(e);
            emit(json{{"refuted", true},
                      {"size", cm.model.n},
                      {"witness", assign},
                      {"model", text}});
        } else {
            std::cout << "REFUTED size=" << cm.model.n << " witness";
            for (const auto& [v, e] : cm.witness) std::cout << ' ' << v << '=' << cm.model.name(e);
            std::cout << '\n';
            if (out_path.empty()) std::cout << text;
        }
        return kExitFail;
    }
    if (!res.complete) {
        if (as_json)
            emit(json{{"refuted", false}, {"complete", false}, {"sizes_checked", res.sizes_checked}});
        else
            std::cout << "budget exhausted at size " << res.sizes_checked << '\n';
        return kExitBudget;
    }
    if (as_json)
        emit(json{{"refuted", false}, {"complete", true}, {"max_size", max_size}});
    else
        std::cout << "holds up to size " << max_size << '\n';
    return kExitPass;
}

int cmd_enumerate(int size, const std::string& cls_tag, bool count_only,
                  const std::string& out_dir, int workers, std::uint64_t node_budget,
                  double time_budget, bool as_json) {
    SearchSpec spec;
    spec.size = size;
    spec.cls = parse_class(cls_tag);
    spec.workers = workers;
    spec.node_budget = node_budget;
    spec.time_budget_seconds = time_budget;
    ModelStream ms = enumerate_models(spec);
    json models = json::array();
    if (!as_json)
        std::cout << "class " << cls_tag << " size " << size << " count " << ms.count() << ' '
                  << (ms.complete ? "complete" : "partial") << '\n';
    if (!count_only) {
        char idx[16];
        for (int i = 0; i < ms.count(); ++i) {
            std::snprintf(idx, sizeof idx, "%03d", i);
            std::string hash = format_hash(content_hash(ms.models[i]));
            if (as_json)
                models.push_back(json{{"index", i}, {"hash", hash}});
            else
                std::cout << "model " << idx << " hash " << hash << '\n';
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                std::string name = cls_tag + "-" + std::to_string(size) + "-" + idx + ".alg";
                std::ofstream out(std::filesystem::path(out_dir) / name);
                out << format_algebra(ms.models[i]);
            }
        }
    }
    if (as_json)
        emit(json{{"class", cls_tag},
                  {"size", size},
                  {"count", ms.count()},
                  {"complete", ms.complete},
                  {"models", models}});
    return ms.complete ? kExitPass : kExitBudget;
}

int cmd_hasse(const std::string& file, const std::string& order, const std::string& scope,
              bool as_json) {
    FiniteAlgebra a = load_input(file);
    OrderKind k;
    if (order == "leq")
        k = OrderKind::Leq;
    else if (order == "leqq")
        k = OrderKind::LeqQ;
    else
        throw std::runtime_error("unknown order '" + order + "' (use leq or leqq)");
    std::string text = hasse_export(a, k, parse_scope(a, scope));
    if (as_json) {
        json nodes = json::array(), edges = json::array();
        std::istringstream in(text);
        std::string kind, x, y;
        while (in >> kind) {
            if (kind == "node") {
                in >> x;
                nodes.push_back(x);
            } else {
                in >> x >> y;
                edges.push_back(json::array({x, y}));
            }
        }
        emit(json{{"nodes", nodes}, {"edges", edges}});
    } else {
        std::cout << text;
    }
    return kExitPass;
}

int cmd_builtin(const std::string& name, const std::string& out_path) {
    auto text = builtin_algebra_text(name);
    if (!text) {
        std::cerr << "unknown builtin '" << name << "'; available:";
        for (const auto& b : builtin_list()) std::cerr << ' ' << b;
        std::cerr << '\n';
        return kExitUsage;
    }
    if (!out_path.empty())
        std::ofstream(out_path) << *text;
    else
        std::cout << *text;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model workbench for quantum-Wajsberg algebras"};
    app.require_subcommand(1);

    std::string file, cls_tag = "qw", stmt_text, scope = "all", out_path, order = "leqq";
    std::string corpus_path, format = "text";
    bool force = false, leqq_strict = false, count_only = false;
    int size = 2, max_size = 5, workers = 1;
    std::uint64_t node_budget = SearchSpec{}.node_budget;
    double time_budget = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text | json (default text)");
    };

    auto* check = app.add_subcommand("check", "check membership in an algebra class");
    check->add_option("file", file, "algebra file or builtin name")->required();
    check->add_option("--class", cls_tag, "class tag (or 'all')")->required();
    check->add_flag("--force", force, "scan the class axioms directly, skipping containment");
    check->add_flag("--leqq-strict", leqq_strict, "quasilinear: strict <=Q reading of 'y < x'");
    add_format(check);

    auto* centers = app.add_subcommand("centers", "compute Z(X) and O(X) with their checks");
    centers->add_option("file", file)->required();
    add_format(centers);

    auto* verify = app.add_subcommand("verify", "run the full theorem and identity suites");
    verify->add_option("file", file)->required();
    verify->add_option("--corpus", corpus_path, "identity catalog file (default: built-in)");
    add_format(verify);

    auto* eval = app.add_subcommand("eval", "evaluate a statement on an algebra");
    eval->add_option("file", file)->required();
    eval->add_option("-e,--statement", stmt_text)->required();
    eval->add_option("--scope", scope, "all | z | o");
    add_format(eval);

    auto* refute = app.add_subcommand("refute", "search for a countermodel to a statement");
    refute->add_option("-e,--statement", stmt_text)->required();
    refute->add_option("--class", cls_tag)->required();
    refute->add_option("--max-size", max_size, "largest carrier size to search (default 5)");
    refute->add_option("--workers", workers);
    refute->add_option("--node-budget", node_budget);
    refute->add_option("--time-budget", time_budget, "seconds");
    refute->add_option("--out", out_path, "write the countermodel here instead of stdout");
    add_format(refute);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate models up to isomorphism");
    enumerate->add_option("--size", size)->required();
    enumerate->add_option("--class", cls_tag)->required();
    enumerate->add_flag("--count-only", count_only);
    enumerate->add_option("--out", out_path, "directory for the model files");
    enumerate->add_option("--workers", workers);
    enumerate->add_option("--node-budget", node_budget);
    enumerate->add_option("--time-budget", time_budget, "seconds");
    add_format(enumerate);

    auto* hasse = app.add_subcommand("hasse", "export the covering relation of an order");
    hasse->add_option("file", file)->required();
    hasse->add_option("--order", order, "leq | leqq (default leqq)");
    hasse->add_option("--subset", scope, "all | z | o");
    add_format(hasse);

    auto* builtin = app.add_subcommand("builtin", "write a named built-in algebra file");
    builtin->add_option("name", file)->required();
    builtin->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        bool as_json = parse_format(format);
        if (check->parsed()) return cmd_check(file, cls_tag, force, leqq_strict, as_json);
        if (centers->parsed()) return cmd_centers(file, as_json);
        if (verify->parsed()) return cmd_verify(file, corpus_path, as_json);
        if (eval->parsed()) return cmd_eval(file, stmt_text, scope, as_json);
        if (refute->parsed())
            return cmd_refute(stmt_text, cls_tag, max_size, workers, node_budget, time_budget,
                              out_path, as_json);
        if (enumerate->parsed())
            return cmd_enumerate(size, cls_tag, count_only, out_path, workers, node_budget,
                                 time_budget, as_json);
        if (hasse->parsed()) return cmd_hasse(file, order, scope, as_json);
        if (builtin->parsed()) return cmd_builtin(file, out_path);
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const AlgebraFormatError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
