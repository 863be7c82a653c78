#include "mvl/data.hpp"
#include "mvl/hilbert.hpp"
#include "mvl/hyper.hpp"
#include "mvl/matrices.hpp"
#include "mvl/neutro.hpp"
#include "mvl/nsequent.hpp"
#include "mvl/padic.hpp"
#include "mvl/prob.hpp"
#include "mvl/sequent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace mvl;
using nlohmann::json;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shared flags; each subcommand reads the ones it needs.
struct Opts {
    std::string logic = "luk3";
    unsigned p = 2, K = 8, window = 8, grid = 11, depth = 8;
    unsigned long seed = 1;
    bool json = false;
    std::vector<std::string> sets;
    std::string conn, flavor = "L", family = "hl", tnorm = "luk", calculus;
    unsigned n = 10, place = 0;
    std::vector<std::string> args;
};

int emit(const Opts& o, const json& j, const std::string& text, int code = 0) {
    if (o.json) std::cout << j.dump(2) << '\n';
    else std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    return code;
}

const std::string& arg(const Opts& o, size_t i, const char* what) {
    if (i >= o.args.size()) throw Usage(std::string("missing argument: ") + what);
    return o.args[i];
}

Valuation valuation(const MatrixLogic& logic, const std::vector<std::string>& sets) {
    Valuation v;
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw Usage("--set expects name=value, got " + s);
        v[s.substr(0, eq)] = logic.parse_value(s.substr(eq + 1));
    }
    return v;
}

std::string valuation_str(const Valuation& v) {
    std::string out;
    for (const auto& [k, x] : v) out += (out.empty() ? "" : " ") + k + "=" + value_str(x);
    return out;
}

Conn conn_arg(const std::string& s) {
    auto c = conn_from_name(s);
    if (!c) throw Usage("unknown connective " + s);
    return *c;
}

int cmd_eval(const Opts& o) {
    auto logic = make_logic(o.logic);
    Formula f = parse(arg(o, 0, "formula"));
    Value r = eval(*logic, f, valuation(*logic, o.sets));
    bool des = logic->designated(r);
    return emit(o, {{"value", value_str(r)}, {"designated", des}}, value_str(r) + (des ? "  (designated)" : ""));
}

int cmd_table(const Opts& o) {
    auto logic = make_logic(o.logic);
    TruthTable t = truth_table(*logic, conn_arg(o.conn));
    return emit(o, {{"conn", conn_name(t.conn)}, {"rows", t.rows}, {"cols", t.cols}, {"cells", t.cells}}, format_table(t));
}

int cmd_taut(const Opts& o) {
    auto logic = make_logic(o.logic);
    Formula f = parse(arg(o, 0, "formula"));
    if (logic->domain.kind == DomainKind::Finite) {
        TautResult r = tautology_finite(*logic, f);
        if (r.tautology) return emit(o, {{"tautology", true}}, "tautology");
        json ce = json::object();
        std::string text = "counterexample";
        for (auto& [k, v] : r.counterexample) {
            ce[k] = v;
            text += " " + k + "=" + std::to_string(v);
        }
        text += " value=" + std::to_string(r.value);
        return emit(o, {{"tautology", false}, {"counterexample", ce}, {"value", r.value}}, text, 1);
    }
    if (logic->domain.kind != DomainKind::UnitRational) throw DomainError("taut supports finite and [0,1] logics");
    auto ce = grid_counterexample(*logic, f, unit_grid(o.grid));
    if (!ce) return emit(o, {{"tautology_on_grid", true}, {"grid", o.grid}}, "designated on the " + std::to_string(o.grid) + "-point grid");
    Value r = eval(*logic, f, *ce);
    return emit(o, {{"tautology_on_grid", false}, {"counterexample", valuation_str(*ce)}, {"value", value_str(r)}},
                "counterexample " + valuation_str(*ce) + " value=" + value_str(r), 1);
}

int report(const Opts& o, const CheckResult& r) {
    if (r.accepted) return emit(o, {{"accepted", true}}, "accept");
    return emit(o, {{"accepted", false}, {"where", r.where}, {"reason", r.reason}}, "reject at " + r.where + ": " + r.reason, 1);
}

int cmd_prove_check(const Opts& o) {
    const std::string& kind = arg(o, 0, "hilbert|sequent|hyperseq");
    std::string text = read_text(arg(o, 1, "proof file"));
    if (kind == "hilbert") {
        HilbertScript s = parse_hilbert_script(text);
        return report(o, check_hilbert(load_axiom_system(s.system), s));
    }
    if (kind != "sequent" && kind != "hyperseq") throw Usage("prove-check expects hilbert, sequent or hyperseq");
    ProofFile pf = parse_proof_file(text);
    Calculus calc = load_calculus(o.calculus.empty() ? pf.calculus : o.calculus);
    if (calc.hyper != (kind == "hyperseq")) throw Usage("calculus " + calc.id + " does not fit '" + kind + "'");
    return report(o, check_proof(calc, pf.proof));
}

int cmd_rulegen(const Opts& o) {
    auto logic = make_logic(o.logic);
    Conn c = conn_arg(o.conn);
    unsigned n = logic->domain.n;
    json rules = json::array();
    std::string text;
    bool all_ok = true;
    for (unsigned i = 1; i <= n; ++i) {
        if (o.place && i != o.place) continue;
        GeneratedRule r = generate_rules(*logic, c, i);
        bool ok = validate_rule(*logic, r);
        all_ok = all_ok && ok;
        json prem = json::array();
        for (const auto& cl : r.premises) prem.push_back(cl.places);
        rules.push_back({{"rule", r.name()}, {"place", i}, {"premises", prem}, {"valid", ok}});
        text += r.str() + (ok ? "" : "  INVALID") + "\n";
    }
    return emit(o, {{"rules", rules}}, text, all_ok ? 0 : 1);
}

int cmd_prove(const Opts& o) {
    auto logic = make_logic(o.logic);
    Formula f = parse(arg(o, 0, "formula"));
    NSequent s = designated_sequent(*logic, f);
    ProveResult r = prove_bounded(*logic, s, o.depth);
    switch (r.status) {
    case ProveStatus::Proved:
        return emit(o, {{"status", "proved"}, {"size", nproof_size(r.proof)}}, nproof_text(r.proof));
    case ProveStatus::Fail:
        return emit(o, {{"status", "fail"}}, "no proof", 1);
    default:
        return emit(o, {{"status", "resource-exceeded"}, {"depth", o.depth}}, "depth bound " + std::to_string(o.depth) + " exceeded", 1);
    }
}

PadicInt padic_arg(const Opts& o, const std::string& s) {
    if (std::count(s.begin(), s.end(), ':') == 2) {
        PadicInt x = PadicInt::parse(s);
        if (x.p() != o.p || x.K() != o.K) throw DomainError("literal " + s + " does not match --p/--K");
        return x;
    }
    Rat q = parse_rat(s);
    return PadicInt::from_rational(o.p, o.K, q.get_num(), q.get_den());
}

int cmd_padic(const Opts& o) {
    const std::string& op = arg(o, 0, "operation");
    auto x = [&](size_t i) { return padic_arg(o, arg(o, i, "operand")); };
    auto out = [&](const PadicInt& r) { return emit(o, {{"value", r.str()}, {"residue", r.residue().get_str()}}, r.str()); };
    if (op == "neg") return out(sub(PadicInt::n_max(o.p, o.K), x(1)));  // logical negation
    if (op == "minus") return out(neg(x(1)));
    if (op == "add") return out(add(x(1), x(2)));
    if (op == "sub") return out(sub(x(1), x(2)));
    if (op == "mul") return out(mul(x(1), x(2)));
    if (op == "div") return out(divide(x(1), x(2)));
    if (op == "floor-div") return out(floor_div(x(1), x(2)));
    if (op == "min") return out(pmin(x(1), x(2)));
    if (op == "max") return out(pmax(x(1), x(2)));
    if (op == "succ") return out(post_succ(x(1)));
    if (op == "from") return out(x(1));
    if (op == "inv") {
        auto r = inverse(x(1));
        if (!r) throw DomainError("not a unit");
        return out(*r);
    }
    if (op == "leq") {
        Order r = leq(x(1), x(2));
        return emit(o, {{"order", order_name(r)}}, order_name(r));
    }
    if (op == "norm") {
        PadicNorm r = norm(x(1));
        std::string s = rat_str(r.value) + (r.saturated ? " (all stored digits zero)" : "");
        return emit(o, {{"norm", rat_str(r.value)}, {"saturated", r.saturated}, {"L", r.L}}, s);
    }
    throw Usage("unknown padic operation " + op);
}

int cmd_hyper(const Opts& o) {
    const std::string& op = arg(o, 0, "operation");
    auto x = [&](size_t i) { return HyperValue::parse(arg(o, i, "operand")); };
    auto out = [&](const HyperValue& r) { return emit(o, {{"value", r.str()}}, r.str()); };
    if (op == "leq") {
        Order r = hleq(x(1), x(2));
        return emit(o, {{"order", order_name(r)}}, order_name(r));
    }
    if (op == "min") return out(hmin(x(1), x(2)));
    if (op == "max") return out(hmax(x(1), x(2)));
    if (op == "neg") return out(hyper_arith(HOp::OneMinus, x(1)));
    static const std::map<std::string, HOp> bin{{"add", HOp::Add}, {"mul", HOp::Mul}, {"imp", HOp::ImpL},
                                                 {"div", HOp::DivClip}, {"monus", HOp::Monus}};
    if (auto it = bin.find(op); it != bin.end()) return out(hyper_arith(it->second, x(1), x(2)));
    if (op == "measure") {
        std::set<unsigned> a;
        for (size_t i = 2; i < o.args.size(); ++i) a.insert(std::stoul(o.args[i]));
        Measure m = hyper_measure(o.window, a, std::stoul(arg(o, 1, "tau")));
        return emit(o, {{"measure", measure_name(m)}}, measure_name(m));
    }
    throw Usage("unknown hyper operation " + op);
}

int cmd_dsm(const Opts& o) {
    unsigned n = std::stoul(arg(o, 0, "n"));
    if (n > 4) throw DomainError("dsm supports n <= 4");
    HyperPowerSet d = hyperpower_set(n);
    std::string text = "|D| = " + std::to_string(d.cardinality()) + "\n";
    for (const auto& e : d.exprs) text += e + "\n";
    return emit(o, {{"n", n}, {"cardinality", d.cardinality()}, {"elements", d.exprs}}, text);
}

Flavor flavor(const std::string& s) {
    if (s == "L" || s == "luk") return Flavor::L;
    if (s == "G" || s == "godel") return Flavor::G;
    if (s == "Pi" || s == "product") return Flavor::Pi;
    throw Usage("unknown flavor " + s);
}

int cmd_neutro(const Opts& o) {
    const std::string& sub_cmd = arg(o, 0, "apply|classify");
    if (sub_cmd == "classify") {
        std::string label = classify_interval_neutro(parse_neutro(arg(o, 1, "value")));
        return emit(o, {{"label", label}}, label);
    }
    if (sub_cmd != "apply") throw Usage("neutro expects apply or classify");
    const std::string& op = arg(o, 1, "complement|implication|intersection");
    Flavor fl = flavor(o.flavor);
    NeutroInterval a = parse_neutro(arg(o, 2, "value"));
    NeutroInterval r = [&] {
        if (op == "complement") return neutro_complement(fl, a);
        NeutroInterval b = parse_neutro(arg(o, 3, "value"));
        if (op == "implication") return neutro_implication(fl, a, b);
        if (op == "intersection") return neutro_intersection(fl, a, b);
        throw Usage("unknown neutro operation " + op);
    }();
    return emit(o, {{"value", neutro_str(r)}}, neutro_str(r));
}

const Event& event(const EnsembleFile& e, const std::string& name) {
    auto it = e.events.find(name);
    if (it == e.events.end()) throw Usage("no event named " + name);
    return it->second;
}

int prob_out(const Opts& o, const EventProb& r) {
    json j{{"num", r.num.str()}, {"den", r.den.str()}, {"defined", r.value.has_value()}};
    if (r.value) j["value"] = r.value->str();
    return emit(o, j, r.str());
}

int cmd_prob(const Opts& o) {
    const std::string& kind = arg(o, 0, "event|bayes|formula");
    if (kind == "formula") {
        auto logic = make_logic(o.logic);
        PadicInt r = formula_prob(*logic, parse(arg(o, 1, "formula")), valuation(*logic, o.sets));
        return emit(o, {{"value", r.str()}}, r.str());
    }
    EnsembleFile e = parse_ensemble(read_text(arg(o, 1, "ensemble file")));
    if (kind == "event") return prob_out(o, event_prob(e.ensemble, event(e, arg(o, 2, "event"))));
    if (kind == "bayes") return prob_out(o, bayes(e.ensemble, event(e, arg(o, 2, "event A")), event(e, arg(o, 3, "event B"))));
    throw Usage("prob expects event, bayes or formula");
}

int cmd_converge(const Opts& o) {
    Family fam = o.family == "hl" ? Family::HL : o.family == "hg" ? Family::HG : o.family == "pq" ? Family::Pquasi
                                                                                                      : throw Usage("family is hl, hg or pq");
    Convergence c = converge_check(fam, o.n, o.grid);
    json ops = json::object();
    std::string text;
    for (auto& [name, d] : c.per_op) {
        ops[name] = rat_str(d);
        text += name + "\t" + rat_str(d) + "\n";
    }
    text += "max\t" + rat_str(c.max_dev);
    return emit(o, {{"per_op", ops}, {"max_dev", rat_str(c.max_dev)}}, text);
}

int cmd_laws(const Opts& o) {
    const std::string& kind = arg(o, 0, "tnorm|bl");
    TNorm t = o.tnorm == "luk" ? TNorm::Luk : o.tnorm == "godel" ? TNorm::Godel : o.tnorm == "product" ? TNorm::Product
                                                                                                         : throw Usage("tnorm is luk, godel or product");
    auto grid = unit_grid(o.grid);
    std::vector<LawCheck> laws;
    if (kind == "tnorm") laws = tnorm_laws(t, grid);
    else if (kind == "bl") laws = bl_laws(t, grid);
    else throw Usage("laws expects tnorm or bl");
    bool all = true;
    json arr = json::array();
    std::string text;
    for (const auto& l : laws) {
        all = all && l.holds;
        arr.push_back({{"name", l.name}, {"holds", l.holds}, {"witness", l.witness}, {"checked", l.checked}});
        text += (l.holds ? "ok    " : "FAILS ") + l.name + (l.holds ? "" : "  " + l.witness) + "\n";
    }
    return emit(o, {{"laws", arr}}, text, all ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"many-valued logic toolkit"};
    app.require_subcommand(1);
    Opts o;
    app.add_option("--logic", o.logic, "matrix logic id (luk3, luk:n, godel, padic-luk:p:K, ...)");
    app.add_option("--p", o.p, "prime for p-adic values");
    app.add_option("--K", o.K, "p-adic precision");
    app.add_option("--window", o.window, "hyper window width");
    app.add_option("--grid", o.grid, "grid points on [0,1]");
    app.add_option("--depth", o.depth, "proof search depth");
    app.add_option("--seed", o.seed, "random seed");
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--set", o.sets, "valuation entry name=value")->allow_extra_args(false);
    app.add_option("--conn", o.conn, "connective tag or token");
    app.add_option("--place", o.place, "sequent place (1-based)");
    app.add_option("--flavor", o.flavor, "L, G or Pi");
    app.add_option("--family", o.family, "hl, hg or pq");
    app.add_option("--n", o.n, "family parameter");
    app.add_option("--tnorm", o.tnorm, "luk, godel or product");
    app.add_option("--calculus", o.calculus, "override the calculus named in a proof file");
    app.fallthrough();

    std::map<std::string, std::function<int(const Opts&)>> cmds{
        {"eval", cmd_eval}, {"table", cmd_table}, {"taut", cmd_taut}, {"prove-check", cmd_prove_check},
        {"rulegen", cmd_rulegen}, {"prove", cmd_prove}, {"padic", cmd_padic}, {"hyper", cmd_hyper},
        {"dsm", cmd_dsm}, {"neutro", cmd_neutro}, {"prob", cmd_prob}, {"converge", cmd_converge},
        {"laws", cmd_laws}};
    const std::map<std::string, std::string> help{
        {"eval", "evaluate a formula under --set valuations"},
        {"table", "truth table of --conn in a finite logic"},
        {"taut", "tautology check, exhaustive or on a --grid"},
        {"prove-check", "check a proof file: hilbert|sequent|hyperseq FILE"},
        {"rulegen", "n-sequent introduction rule for --conn at --place"},
        {"prove", "bounded n-sequent proof search"},
        {"padic", "p-adic calculator: OP X [Y]"},
        {"hyper", "hyper value calculator: OP X [Y], or measure"},
        {"dsm", "hyper-power set of N atoms"},
        {"neutro", "apply OP A [B] or classify A"},
        {"prob", "event, bayes or formula probability"},
        {"converge", "deviation of a nonlinear family from its limit"},
        {"laws", "t-norm or BL law check on a grid"}};
    for (auto& [name, fn] : cmds) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("args", o.args)->allow_extra_args();
        sub->positionals_at_end(false);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        for (auto* sub : app.get_subcommands()) return cmds.at(sub->get_name())(o);
    } catch (const Usage& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
