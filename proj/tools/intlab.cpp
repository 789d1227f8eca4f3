#include <CLI11.hpp>
#include <json.hpp>

#include <intlab/errors.hpp>
#include <intlab/eval.hpp>
#include <intlab/modal.hpp>
#include <intlab/modelio.hpp>
#include <intlab/multisort.hpp>
#include <intlab/verify.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace intlab;
using nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;    // parse/type/spec errors
constexpr int kExitModel = 2;    // model file or consistency errors
constexpr int kExitVerdict = 3;  // disagreement or violations

struct Output {
    bool json = false;
    ordered_json doc = ordered_json::object();
    std::ostringstream text;

    void field(const std::string& key, const std::string& value) {
        doc[key] = value;
        text << key << ": " << value << "\n";
    }
    void flush() {
        if (json) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << text.str();
        }
    }
};

[[noreturn]] void fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitUsage);
}

void print_caret(const std::string& source, const SyntaxError& e) {
    std::istringstream lines(source);
    std::string line;
    for (int i = 1; std::getline(lines, line) && i <= e.line(); ++i) {
        if (i == e.line()) {
            std::cerr << "  " << line << "\n  ";
            for (int c = 1; c < e.column(); ++c) std::cerr << ' ';
            std::cerr << "^\n";
        }
    }
}

IntensionalModel load_model_or_exit(const std::string& path, std::string* hash) {
    try {
        const std::string bytes = read_file(path);
        if (hash) *hash = content_hash_hex(bytes);
        IntensionalModel m = parse_model_text(bytes);
        if (const char* cap = std::getenv("INTLAB_CAP")) {
            try {
                m.enumeration_cap = static_cast<std::size_t>(std::stoull(cap));
            } catch (const std::exception&) {
                fail_usage(std::string("INTLAB_CAP is not a number: ") + cap);
            }
        }
        return m;
    } catch (const ModelError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        std::exit(kExitModel);
    }
}

DomainValue compound_from_arg(const IntensionalModel& m, const std::string& at) {
    std::vector<std::string> labels;
    std::string cur;
    for (char c : at) {
        if (c == ',') {
            labels.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    labels.push_back(cur);
    if (labels.size() != m.sorts.size()) {
        fail_usage("--at needs " + std::to_string(m.sorts.size()) +
                   " comma-separated index labels (one per sort, declaration order)");
    }
    try {
        const DomainValue s = m.compound_of(labels);
        for (const auto& sort : m.sorts) {
            m.finite_frame(sort).world_pos(s.compound_at(sort));
        }
        return s;
    } catch (const Error& e) {
        fail_usage(e.what());
    }
}

std::string one_line(const std::string& block) {
    std::string out;
    for (char c : block) {
        if (c == '\n') {
            out += "; ";
        } else {
            out += c;
        }
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    return out;
}

// ---------------------------------------------------------------------------

int cmd_eval(const std::string& model_path, const std::string& expr_text, const std::string& at,
             const std::vector<std::string>& assigns, bool json) {
    IntensionalModel model = load_model_or_exit(model_path, nullptr);
    if (!model.all_sorts_finite()) {
        std::cerr << "model error: eval needs finite sorts\n";
        return kExitModel;
    }

    ExprPtr expr;
    std::optional<TypedExpr> typed;
    try {
        expr = parse_expr(expr_text);
        typed = typecheck(expr, model);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at " << e.line() << ":" << e.column() << ": " << e.what()
                  << "\n";
        print_caret(expr_text, e);
        return kExitUsage;
    } catch (const TypeError& e) {
        std::cerr << "type error: " << e.what() << " (expected " << e.expected() << ", found "
                  << e.found() << ")\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Assignment g;
    for (const auto& kv : assigns) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail_usage("--assign needs the form var=entity");
        const std::string var = kv.substr(0, eq);
        const std::string ent = kv.substr(eq + 1);
        if (std::find(model.entities.begin(), model.entities.end(), ent) ==
            model.entities.end()) {
            fail_usage("unknown entity '" + ent + "' in --assign");
        }
        g = variant(g, var, DomainValue::ent(ent));
    }

    try {
        const DomainValue s =
            at.empty() ? compound_index_space(model).at(0) : compound_from_arg(model, at);
        Evaluator ev(model);
        const DomainValue formal = ev.formal(*typed, g, s);
        const VecValue vec = ev.vector(*typed, g, s);
        const bool agree = embed(formal, typed->type(), model) == vec;

        Output out;
        out.json = json;
        out.field("expr", print_expr(resolve(expr, model)));
        out.field("type", typed->type().to_string());
        out.field("at", s.to_string());
        out.field("formal", formal.to_string());
        const auto back = try_unembed(vec);
        out.field("vector", back ? back->to_string() : one_line(vec.to_text()));
        out.field("verdict", agree ? "AGREE" : "DISAGREE");
        out.flush();
        return agree ? 0 : kExitVerdict;
    } catch (const UnboundVariable& e) {
        std::cerr << "error: " << e.what() << " (supply it with --assign)\n";
        return kExitUsage;
    } catch (const CombinatorialBlowup& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const ModelError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return kExitModel;
    }
}

int cmd_verify(const std::string& model_path, const std::string& suite, unsigned depth,
               std::uint64_t seed, std::size_t count, int jobs, bool reflexive,
               const std::string& fault_inject, bool json) {
    std::string hash;
    IntensionalModel model = load_model_or_exit(model_path, &hash);

    VerifyOptions opt;
    opt.depth = depth;
    opt.seed = seed;
    opt.expr_count = count;
    opt.jobs = jobs;
    opt.reflexive = reflexive;

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteResult> results;
    try {
        if (!fault_inject.empty()) {
            const EmbedCache cache = EmbedCache::build(model);
            const auto it = model.constants.find(fault_inject);
            if (it == model.constants.end()) {
                fail_usage("unknown constant '" + fault_inject + "' for --fault-inject");
            }
            if (!it->second.type.is_truth()) {
                fail_usage("--fault-inject needs a truth-typed constant");
            }
            IntensionalModel corrupted = model;
            for (auto& [key, value] : corrupted.constants.at(fault_inject).intension.table) {
                value = DomainValue::tru(1 - value.tru_bit());
            }
            results.push_back(run_hom_suite(corrupted, opt, &cache));
        } else {
            results = run_suites(model, suite, opt);
        }
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    bool ok = true;
    Output out;
    out.json = json;
    out.field("command", "verify --suite " + suite + " --depth " + std::to_string(depth) +
                             " --seed " + std::to_string(seed));
    out.field("model", model_path);
    out.field("hash", hash);
    ordered_json jsuites = ordered_json::array();
    for (const auto& r : results) {
        ok = ok && r.ok();
        ordered_json js;
        js["suite"] = r.name;
        js["checks"] = r.checks;
        js["violations"] = r.violations;
        jsuites.push_back(js);
        out.text << "suite " << r.name << ": checks=" << r.checks
                 << " violations=" << r.violations.size() << "\n";
        for (const auto& v : r.violations) out.text << "  " << v << "\n";
    }
    out.doc["suites"] = jsuites;
    out.doc["result"] = ok ? "OK" : "VIOLATIONS";
    out.text << "result: " << (ok ? "OK" : "VIOLATIONS") << "\n";
    out.doc["time_ms"] = ms;
    out.text << "time_ms: " << ms << "\n";
    out.flush();
    return ok ? 0 : kExitVerdict;
}

MeasurableProp parse_continuous_prop(const std::string& spec) {
    MeasurableProp p{IntervalSet()};
    std::istringstream words(spec);
    std::string word;
    while (words >> word) {
        const auto parse_null = [&](const std::string& body) -> NullSet {
            if (body.rfind("cantor[", 0) == 0 && body.back() == ']') {
                const std::string inner = body.substr(7, body.size() - 8);
                const auto comma = inner.find(',');
                if (comma == std::string::npos) {
                    throw SyntaxError("cantor[a,b] needs two endpoints", 1, 1);
                }
                return NullSet::cantor(parse_rational(inner.substr(0, comma)),
                                       parse_rational(inner.substr(comma + 1)),
                                       "cantor[" + inner + "]");
            }
            if (body.rfind("points:", 0) == 0) {
                std::vector<Rational> pts;
                std::string cur;
                for (char c : body.substr(7)) {
                    if (c == ',') {
                        pts.push_back(parse_rational(cur));
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                if (!cur.empty()) pts.push_back(parse_rational(cur));
                return NullSet::points(std::move(pts));
            }
            throw SyntaxError("null set must be cantor[a,b] or points:x,y,...", 1, 1);
        };
        if (word.rfind("base:", 0) == 0) {
            MeasurableProp next(parse_interval_set(word.substr(5)));
            for (const auto& exc : p.exceptions()) {
                next = next.with_exception(exc.set, exc.polarity);
            }
            p = next;
        } else if (word.rfind("remove:", 0) == 0) {
            p = p.with_exception(parse_null(word.substr(7)), Polarity::Remove);
        } else if (word.rfind("add:", 0) == 0) {
            p = p.with_exception(parse_null(word.substr(4)), Polarity::Add);
        } else {
            throw SyntaxError("proposition clause must start with base:/remove:/add:", 1, 1);
        }
    }
    return p;
}

/// box_sort/dia_sort on a loaded model: the proposition is a 0/1 string over
/// the compound index space in enumeration order.
int cmd_modal_sort(const std::string& model_path, const std::string& sort_label,
                   const std::string& prop_spec, const std::string& op, const std::string& at,
                   bool json) {
    const IntensionalModel model = load_model_or_exit(model_path, nullptr);
    const SortId sort(sort_label);
    if (!model.has_sort(sort)) fail_usage("model has no sort '" + sort_label + "'");
    const auto space = compound_index_space(model);
    if (prop_spec.size() != space.size() ||
        prop_spec.find_first_not_of("01") != std::string::npos) {
        fail_usage("--sort mode needs a 0/1 proposition string of length " +
                   std::to_string(space.size()) + " (compound indices in enumeration order)");
    }
    auto table = std::make_shared<std::map<DomainValue, int>>();
    for (std::size_t i = 0; i < space.size(); ++i) {
        table->emplace(space[i], prop_spec[i] == '1' ? 1 : 0);
    }
    const CompoundPred p = [table](const DomainValue& s) { return table->at(s); };

    Output out;
    out.json = json;
    out.field("model", model_path);
    out.field("sort", sort_label);
    out.field("prop", prop_spec);
    out.field("op", op);
    if (at.empty()) {
        std::string all;
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (i) all += ",";
            all += std::to_string(op == "box" ? box_sort(model, sort, p, space[i])
                                              : dia_sort(model, sort, p, space[i]));
        }
        out.field(op, all);
    } else {
        const DomainValue s = compound_from_arg(model, at);
        const int v =
            op == "box" ? box_sort(model, sort, p, s) : dia_sort(model, sort, p, s);
        out.field(op + " at " + s.to_string(), std::to_string(v));
    }
    out.flush();
    return 0;
}

/// Light-cone quantification: --at "t,x", --window "lo,hi", --prop gives one
/// uniform location slice (continuous prop clauses).
int cmd_modal_cone(const std::string& cone_c, const std::string& prop_spec, const std::string& op,
                   const std::string& at, const std::string& window, bool json) {
    ProductFrame pf;
    pf.sorts = {SortId("time"), SortId("loc")};
    pf.frames.emplace(SortId("time"),
                      ContinuousFrame(SortId("time"), Rational(-1), Rational(1)));
    pf.frames.emplace(SortId("loc"), ContinuousFrame(SortId("loc"), Rational(-1), Rational(1)));
    pf.dependent = LightCone{parse_rational(cone_c), SortId("time"), SortId("loc")};

    const auto comma = at.find(',');
    if (comma == std::string::npos) fail_usage("--cone needs --at t,x");
    const DomainValue s = DomainValue::compound(
        {{SortId("time"), at.substr(0, comma)}, {SortId("loc"), at.substr(comma + 1)}});

    std::optional<ConeQuery> query;
    if (!window.empty()) {
        const auto wc = window.find(',');
        if (wc == std::string::npos) fail_usage("--window needs the form lo,hi");
        query = ConeQuery{parse_rational(window.substr(0, wc)),
                          parse_rational(window.substr(wc + 1))};
    }

    PiecewiseSliceProp p;
    p.pieces.push_back(TimePiece{IntervalSet::interval(Rational(-1000000), Rational(1000000)),
                                 parse_continuous_prop(prop_spec)});

    const ConeVerdict v = light_cone_modal(pf, p, s, query);
    Output out;
    out.json = json;
    out.field("cone", "c=" + cone_c);
    out.field("from", s.to_string());
    out.field("window", window);
    out.field("region-measure", to_string(v.region_measure));
    out.field("truth-measure", to_string(v.truth_measure));
    out.field("failure-measure", to_string(v.failure_measure));
    out.field(op, std::to_string(op == "box" ? v.box : v.dia));
    out.flush();
    return 0;
}

int cmd_modal(const std::string& frame_dsl, const std::string& prop_spec, const std::string& op,
              const std::string& at, bool json) {
    if (op != "box" && op != "dia") fail_usage("--op must be box or dia");

    SortFrame frame = FiniteFrame(SortId("w"), {"w1"}, {{0}});
    try {
        frame = parse_frame_dsl(frame_dsl, SortId("w"));
    } catch (const SyntaxError& e) {
        std::cerr << "frame error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ModelError& e) {
        std::cerr << "frame error: " << e.what() << "\n";
        return kExitUsage;
    }

    Output out;
    out.json = json;
    out.field("frame", frame_dsl);
    out.field("prop", prop_spec);
    out.field("op", op);

    try {
        if (const auto* ff = std::get_if<FiniteFrame>(&frame)) {
            if (prop_spec.size() != ff->size() ||
                prop_spec.find_first_not_of("01") != std::string::npos) {
                fail_usage("finite frames need a 0/1 proposition string of length " +
                           std::to_string(ff->size()));
            }
            std::vector<int> bits;
            for (char c : prop_spec) bits.push_back(c == '1' ? 1 : 0);
            const Vec v = proposition_vec(*ff, bits);
            const Vec acc = accumulate(*ff, v);
            const Vec res = op == "box" ? box_finite(*ff, v) : dia_finite(*ff, v);

            std::string acc_s, res_s;
            const auto basis = frame_basis(*ff);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (i) {
                    acc_s += ",";
                    res_s += ",";
                }
                acc_s += to_string(acc.coeff(basis[i]));
                res_s += to_string(res.coeff(basis[i]));
            }
            out.field("accumulate", acc_s);
            out.field(op, res_s);
            if (!at.empty()) {
                const std::size_t i = ff->world_pos(at);
                out.field("at " + at, to_string(res.coeff(basis[i])));
            }
        } else if (const auto* cf = std::get_if<CountableFrame>(&frame)) {
            CountableProp p = CountableProp::finite_support({});
            if (prop_spec.rfind("support:", 0) == 0 || prop_spec.rfind("cofinite:", 0) == 0) {
                const bool cofinite = prop_spec[0] == 'c';
                std::set<long long> idx;
                const std::string body = prop_spec.substr(prop_spec.find(':') + 1);
                std::string cur;
                for (char c : body + ",") {
                    if (c == ',') {
                        if (!cur.empty()) idx.insert(std::stoll(cur));
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                p = cofinite ? CountableProp::cofinite(idx) : CountableProp::finite_support(idx);
            } else {
                fail_usage("countable frames need support:i,j,... or cofinite:i,j,...");
            }
            if (at.empty()) fail_usage("countable frames need --at INDEX");
            const long long i = std::stoll(at);
            const auto succ = cf->successors(i);
            std::string succ_s;
            long long count = 0;
            for (std::size_t k = 0; k < succ.size(); ++k) {
                if (k) succ_s += ",";
                succ_s += std::to_string(succ[k]);
                count += p.eval(succ[k]);
            }
            out.field("successors", succ_s.empty() ? "(none)" : succ_s);
            out.field("accumulate", std::to_string(count));
            out.field("out-degree", std::to_string(succ.size()));
            const int v = op == "box" ? box_countable(*cf, p, i) : dia_countable(*cf, p, i);
            out.field(op + " at " + at, std::to_string(v));
        } else {
            const auto& cont = std::get<ContinuousFrame>(frame);
            if (at.empty()) fail_usage("continuous frames need --at T");
            const Rational t = parse_rational(at);
            const MeasurableProp p = parse_continuous_prop(prop_spec);
            const IntervalSet window = accessible_window(cont, t);
            out.field("window", window.to_string());
            out.field("window-measure", to_string(window.measure()));
            out.field("truth-measure", to_string(truth_measure_at(cont, p, t)));
            const int v = op == "box" ? box_continuous(cont, p, t) : dia_continuous(cont, p, t);
            out.field(op + " at " + at, std::to_string(v));
        }
    } catch (const SyntaxError& e) {
        std::cerr << "prop error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "prop error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out.flush();
    return 0;
}

int cmd_embed_intension(const std::string& model_path, const std::string& name, bool json) {
    IntensionalModel model = load_model_or_exit(model_path, nullptr);
    try {
        const Constant& c = model.constant(name);
        const LinMap op = intension_operator(c, model);
        Output out;
        out.json = json;
        out.field("constant", name);
        out.field("type", "<s," + c.type.to_string() + ">");
        out.doc["matrix"] = op.to_text();
        out.text << "matrix:\n" << op.to_text();
        out.flush();
        return 0;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_check_model(const std::string& model_path, bool json) {
    std::string hash;
    const IntensionalModel model = load_model_or_exit(model_path, &hash);
    Output out;
    out.json = json;
    out.field("model", model_path);
    out.field("hash", hash);
    std::string sorts;
    std::size_t s_size = 1;
    for (const auto& sort : model.sorts) {
        if (!sorts.empty()) sorts += ", ";
        const auto& f = model.finite_frame(sort);
        sorts += sort.label() + "(" + std::to_string(f.size()) + ")";
        s_size *= f.size();
    }
    out.field("sorts", sorts.empty() ? "(none)" : sorts);
    out.field("compound-indices", std::to_string(s_size));
    std::string ents;
    for (const auto& e : model.entities) {
        if (!ents.empty()) ents += ", ";
        ents += e;
    }
    out.field("entities", ents.empty() ? "(none)" : ents);
    std::string consts;
    for (const auto& [cname, c] : model.constants) {
        if (!consts.empty()) consts += ", ";
        consts += cname + ": " + c.type.to_string();
    }
    out.field("constants", consts.empty() ? "(none)" : consts);
    out.field("status", "OK");
    out.flush();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intlab: evaluates typed modal lambda expressions set-theoretically and "
                 "vector-algebraically, and computes modal operators over finite, countable, "
                 "and continuous index domains"};
    app.require_subcommand(1);

    std::string model_path, expr_text, at, format = "text";
    std::vector<std::string> assigns;

    auto* eval = app.add_subcommand("eval", "evaluate an expression with both backends");
    eval->add_option("model", model_path, "model JSON file")->required();
    eval->add_option("expr", expr_text, "expression text")->required();
    eval->add_option("--at", at, "compound index (comma-separated labels, declaration order)");
    eval->add_option("--assign", assigns, "free-variable binding var=entity (repeatable)");
    eval->add_option("--format", format, "text | json");

    std::string suite = "all", fault_inject;
    unsigned depth = 4;
    std::uint64_t seed = 1;
    std::size_t count = 200;
    int jobs = 1;
    bool reflexive = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("model", model_path, "model JSON file")->required();
    verify->add_option("--suite", suite, "hom | duality | axioms | all");
    verify->add_option("--depth", depth, "expression depth for the hom suite");
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--count", count, "corpus size for the hom suite");
    verify->add_option("--jobs", jobs, "worker threads for the hom suite");
    verify->add_flag("--reflexive", reflexive, "assert reflexive frames and check T");
    verify->add_option("--fault-inject", fault_inject,
                       "flip a truth constant after building the embed cache (diagnostics)");
    verify->add_option("--format", format, "text | json");

    std::string frame_dsl, prop_spec, op, sort_label, cone_c, window;
    auto* modal = app.add_subcommand("modal", "compute a modal operator on a frame");
    modal->add_option("--frame", frame_dsl,
                      "chain | offsets:+1,+2 | window:-1,1 | edges:N:1>2,...");
    modal->add_option("--model", model_path, "model JSON file (with --sort)");
    modal->add_option("--sort", sort_label, "quantify along this sort of the model");
    modal->add_option("--cone", cone_c, "light-cone speed c over (time, loc)");
    modal->add_option("--window", window, "bounded time window lo,hi for --cone");
    modal->add_option("--prop", prop_spec, "proposition spec (see README)")->required();
    modal->add_option("--op", op, "box | dia")->required();
    modal->add_option("--at", at, "world index / time / compound labels");
    modal->add_option("--format", format, "text | json");

    std::string const_name;
    auto* emb = app.add_subcommand("embed-intension",
                                   "print a constant's intension as a linear operator");
    emb->add_option("model", model_path, "model JSON file")->required();
    emb->add_option("constant", const_name, "constant name")->required();
    emb->add_option("--format", format, "text | json");

    auto* chk = app.add_subcommand("check-model", "load, validate and summarize a model");
    chk->add_option("model", model_path, "model JSON file")->required();
    chk->add_option("--format", format, "text | json");

    CLI11_PARSE(app, argc, argv);
    if (format != "text" && format != "json") fail_usage("--format must be text or json");
    const bool json = format == "json";

    try {
        if (eval->parsed()) return cmd_eval(model_path, expr_text, at, assigns, json);
        if (verify->parsed()) {
            return cmd_verify(model_path, suite, depth, seed, count, jobs, reflexive,
                              fault_inject, json);
        }
        if (modal->parsed()) {
            if (op != "box" && op != "dia") fail_usage("--op must be box or dia");
            if (!sort_label.empty()) {
                if (model_path.empty()) fail_usage("--sort needs --model");
                return cmd_modal_sort(model_path, sort_label, prop_spec, op, at, json);
            }
            if (!cone_c.empty()) return cmd_modal_cone(cone_c, prop_spec, op, at, window, json);
            if (frame_dsl.empty()) fail_usage("modal needs --frame, --sort, or --cone");
            return cmd_modal(frame_dsl, prop_spec, op, at, json);
        }
        if (emb->parsed()) return cmd_embed_intension(model_path, const_name, json);
        if (chk->parsed()) return cmd_check_model(model_path, json);
    } catch (const ModelError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
