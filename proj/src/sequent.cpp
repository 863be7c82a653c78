#include "mvl/sequent.hpp"

#include "mvl/common.hpp"
#include "mvl/data.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace mvl {

using nlohmann::json;

// ---- multisets ----

Multiset make_multiset(std::vector<Formula> fs) {
    std::sort(fs.begin(), fs.end(), FormulaLess{});
    return fs;
}

bool multiset_equal(const Multiset& a, const Multiset& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const Formula& x, const Formula& y) { return equal(x, y); });
}

std::optional<Multiset> multiset_minus(const Multiset& a, const Multiset& b) {
    Multiset out;
    size_t j = 0;
    for (const auto& x : a) {
        if (j < b.size() && equal(x, b[j])) {
            ++j;
            continue;
        }
        if (j < b.size() && compare(b[j], x) < 0) return std::nullopt;
        out.push_back(x);
    }
    if (j != b.size()) return std::nullopt;
    return out;
}

Multiset multiset_union(const Multiset& a, const Multiset& b) {
    Multiset out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), FormulaLess{});
    return out;
}

namespace {

int compare_ms(const Multiset& a, const Multiset& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (int c = compare(a[i], b[i])) return c;
    return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

}  // namespace

int compare(const Sequent& a, const Sequent& b) {
    if (int c = compare_ms(a.ant, b.ant)) return c;
    return compare_ms(a.suc, b.suc);
}

bool operator==(const Sequent& a, const Sequent& b) { return compare(a, b) == 0; }

Hypersequent make_hypersequent(std::vector<Sequent> cs) {
    std::sort(cs.begin(), cs.end(), [](const Sequent& a, const Sequent& b) { return compare(a, b) < 0; });
    return cs;
}

std::string print(const Sequent& s) {
    auto side = [](const Multiset& m) {
        std::string out;
        for (const auto& f : m) {
            if (!out.empty()) out += ", ";
            out += print(f);
        }
        return out;
    };
    std::string a = side(s.ant), c = side(s.suc);
    return (a.empty() ? "" : a + " ") + "=>" + (c.empty() ? "" : " " + c);
}

std::string print(const Hypersequent& h) {
    std::string out;
    for (const auto& s : h) {
        if (!out.empty()) out += " | ";
        out += print(s);
    }
    return out;
}

// ---- text splitting shared by patterns and concrete sequents ----

namespace {

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\n\r"), b = s.find_last_not_of(" \t\n\r");
    return a == std::string_view::npos ? std::string() : std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_top(std::string_view s, std::string_view sep) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (depth == 0 && s.substr(i, sep.size()) == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + sep.size();
            i += sep.size() - 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

std::pair<std::string, std::string> sides(std::string_view comp) {
    auto parts = split_top(comp, "=>");
    if (parts.size() != 2) throw DomainError("component '" + std::string(comp) + "' needs exactly one '=>'");
    return {parts[0], parts[1]};
}

std::vector<std::string> items(const std::string& side) {
    if (side.empty()) return {};
    auto out = split_top(side, ",");
    for (const auto& s : out)
        if (s.empty()) throw DomainError("empty formula in '" + side + "'");
    return out;
}

}  // namespace

Sequent parse_sequent(std::string_view text) {
    auto [a, s] = sides(text);
    Sequent out;
    for (const auto& f : items(a)) out.ant.push_back(parse(f));
    for (const auto& f : items(s)) out.suc.push_back(parse(f));
    out.ant = make_multiset(out.ant);
    out.suc = make_multiset(out.suc);
    return out;
}

Hypersequent parse_hypersequent(std::string_view text) {
    std::vector<Sequent> cs;
    for (const auto& c : split_top(text, "|")) cs.push_back(parse_sequent(c));
    return make_hypersequent(std::move(cs));
}

HyperPattern parse_pattern(std::string_view text) {
    HyperPattern hp;
    for (const auto& comp : split_top(text, "|")) {
        if (!comp.empty() && comp[0] == '@') {
            if (!hp.context.empty()) throw DomainError("pattern has two hypersequent contexts");
            hp.context = comp;
            continue;
        }
        auto [a, s] = sides(comp);
        SequentPattern sp;
        auto fill = [](const std::string& side, SidePattern& out) {
            for (const auto& it : items(side)) {
                if (it[0] == '$') {
                    if (std::find(out.contexts.begin(), out.contexts.end(), it) != out.contexts.end())
                        throw DomainError("context " + it + " repeated on one side");
                    out.contexts.push_back(it);
                } else {
                    out.formulas.push_back(parse_schema(it));
                }
            }
        };
        fill(a, sp.ant);
        fill(s, sp.suc);
        hp.components.push_back(std::move(sp));
    }
    return hp;
}

// ---- matching ----

namespace {

struct Binding {
    Assignment meta;
    std::map<std::string, Multiset> ctx;
    std::map<std::string, Hypersequent> hctx;
};

struct Goal {
    const HyperPattern* hp = nullptr;
    const Hypersequent* h = nullptr;
    const SidePattern* sp = nullptr;
    Multiset m;  // owned copy for side goals
};

size_t unbound_contexts(const Goal& g, const Binding& b) {
    size_t n = 0;
    for (const auto& c : g.sp->contexts) n += b.ctx.count(c) == 0;
    return n;
}

bool solve(std::vector<Goal> goals, Binding b);

bool solve_contexts(std::vector<Goal>& rest, const Binding& b, const SidePattern& sp, Multiset remainder) {
    std::vector<std::string> unbound;
    for (const auto& c : sp.contexts) {
        auto it = b.ctx.find(c);
        if (it == b.ctx.end()) {
            unbound.push_back(c);
            continue;
        }
        auto r = multiset_minus(remainder, it->second);
        if (!r) return false;
        remainder = std::move(*r);
    }
    if (unbound.empty()) return remainder.empty() && solve(rest, b);
    if (unbound.size() == 1) {
        Binding nb = b;
        nb.ctx[unbound[0]] = remainder;
        return solve(rest, nb);
    }
    // Several fresh contexts: try every distribution of the remainder.
    const size_t k = unbound.size();
    std::vector<size_t> choice(remainder.size(), 0);
    while (true) {
        Binding nb = b;
        std::vector<std::vector<Formula>> parts(k);
        for (size_t i = 0; i < remainder.size(); ++i) parts[choice[i]].push_back(remainder[i]);
        for (size_t c = 0; c < k; ++c) nb.ctx[unbound[c]] = make_multiset(parts[c]);
        if (solve(rest, nb)) return true;
        size_t i = 0;
        while (i < choice.size() && ++choice[i] == k) choice[i++] = 0;
        if (i == choice.size()) return false;
    }
}

bool solve_formulas(std::vector<Goal>& rest, const Binding& b, const SidePattern& sp, size_t idx, const Multiset& m,
                    std::vector<bool>& used) {
    if (idx == sp.formulas.size()) {
        Multiset remainder;
        for (size_t i = 0; i < m.size(); ++i)
            if (!used[i]) remainder.push_back(m[i]);
        return solve_contexts(rest, b, sp, std::move(remainder));
    }
    for (size_t i = 0; i < m.size(); ++i) {
        if (used[i]) continue;
        // equal neighbours give the same branch
        if (i > 0 && !used[i - 1] && equal(m[i - 1], m[i])) continue;
        Binding nb = b;
        if (!match_into(sp.formulas[idx], m[i], nb.meta)) continue;
        used[i] = true;
        bool ok = solve_formulas(rest, nb, sp, idx + 1, m, used);
        used[i] = false;
        if (ok) return true;
    }
    return false;
}

bool solve_hyper(std::vector<Goal>& rest, const Binding& b, const HyperPattern& hp, const Hypersequent& h) {
    const size_t k = hp.components.size();
    if (k > h.size()) return false;
    if (hp.context.empty() && k != h.size()) return false;
    std::vector<size_t> pick;
    std::vector<bool> used(h.size(), false);
    std::function<bool()> rec = [&]() -> bool {
        if (pick.size() == k) {
            Binding nb = b;
            std::vector<Sequent> leftover;
            for (size_t i = 0; i < h.size(); ++i)
                if (!used[i]) leftover.push_back(h[i]);
            if (!hp.context.empty()) {
                auto it = nb.hctx.find(hp.context);
                if (it != nb.hctx.end()) {
                    if (it->second != leftover) return false;
                } else {
                    nb.hctx[hp.context] = leftover;
                }
            }
            std::vector<Goal> goals = rest;
            for (size_t c = 0; c < k; ++c) {
                goals.push_back({nullptr, nullptr, &hp.components[c].ant, h[pick[c]].ant});
                goals.push_back({nullptr, nullptr, &hp.components[c].suc, h[pick[c]].suc});
            }
            return solve(goals, nb);
        }
        for (size_t i = 0; i < h.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            pick.push_back(i);
            bool ok = rec();
            pick.pop_back();
            used[i] = false;
            if (ok) return true;
        }
        return false;
    };
    return rec();
}

bool solve(std::vector<Goal> goals, Binding b) {
    if (goals.empty()) return true;
    size_t best = goals.size();
    for (size_t i = 0; i < goals.size(); ++i)
        if (goals[i].hp) {
            best = i;
            break;
        }
    if (best == goals.size()) {
        size_t best_free = SIZE_MAX;
        for (size_t i = 0; i < goals.size(); ++i) {
            size_t f = unbound_contexts(goals[i], b);
            if (f < best_free) {
                best_free = f;
                best = i;
            }
        }
    }
    Goal g = goals[best];
    goals.erase(goals.begin() + best);
    if (g.hp) return solve_hyper(goals, b, *g.hp, *g.h);
    std::vector<bool> used(g.m.size(), false);
    return solve_formulas(goals, b, *g.sp, 0, g.m, used);
}

bool n_contraction(const Hypersequent& p, const Hypersequent& c) {
    if (p.size() != 1 || c.size() != 1) return false;
    const Sequent &ps = p[0], &cs = c[0];
    size_t base = cs.ant.size() + cs.suc.size();
    size_t total = ps.ant.size() + ps.suc.size();
    if (base == 0) return total == 0;
    if (total % base != 0 || total == 0) return false;
    size_t n = total / base;
    auto times = [n](const Multiset& m) {
        Multiset out;
        for (size_t i = 0; i < n; ++i) out = multiset_union(out, m);
        return out;
    };
    return multiset_equal(ps.ant, times(cs.ant)) && multiset_equal(ps.suc, times(cs.suc));
}

// Premises G | P1 and G | P2, conclusion G | C1 | C2 | C3 where the
// formulas of P1 and P2 together are exactly those of C1, C2, C3.
bool mix3(const std::vector<Hypersequent>& ps, const Hypersequent& c) {
    if (ps.size() != 2 || c.size() < 3) return false;
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Hypersequent g;
                for (size_t x = 0; x < n; ++x)
                    if (x != i && x != j && x != k) g.push_back(c[x]);
                Multiset ant = multiset_union(multiset_union(c[i].ant, c[j].ant), c[k].ant);
                Multiset suc = multiset_union(multiset_union(c[i].suc, c[j].suc), c[k].suc);
                // find the extra component in each premise
                std::vector<Sequent> extra;
                bool ok = true;
                for (const auto& p : ps) {
                    if (p.size() != g.size() + 1) {
                        ok = false;
                        break;
                    }
                    bool found = false;
                    for (size_t e = 0; e < p.size() && !found; ++e) {
                        Hypersequent rest;
                        for (size_t x = 0; x < p.size(); ++x)
                            if (x != e) rest.push_back(p[x]);
                        if (rest == g) {
                            extra.push_back(p[e]);
                            found = true;
                        }
                    }
                    ok = ok && found;
                }
                if (!ok) continue;
                if (multiset_equal(multiset_union(extra[0].ant, extra[1].ant), ant) &&
                    multiset_equal(multiset_union(extra[0].suc, extra[1].suc), suc))
                    return true;
            }
    return false;
}

}  // namespace

bool rule_applies(const Rule& r, const std::vector<Hypersequent>& premises, const Hypersequent& conclusion) {
    if (r.special == "exchange") return premises.size() == 1 && premises[0] == conclusion;
    if (r.special == "n-contraction") return premises.size() == 1 && n_contraction(premises[0], conclusion);
    if (r.special == "mix3") return mix3(premises, conclusion);
    if (!r.special.empty()) throw DomainError("unknown special rule kind " + r.special);
    if (premises.size() != r.premises.size()) return false;
    std::vector<Goal> goals;
    goals.push_back({&r.conclusion, &conclusion, nullptr, {}});
    for (size_t i = 0; i < premises.size(); ++i) goals.push_back({&r.premises[i], &premises[i], nullptr, {}});
    return solve(goals, Binding{});
}

// ---- calculi and proof trees ----

const Rule* Calculus::rule(const std::string& name) const {
    for (const auto& r : rules)
        if (r.name == name) return &r;
    return nullptr;
}

Calculus parse_calculus(std::string_view json_text) {
    json j = json::parse(json_text);
    Calculus c;
    c.id = j.at("calculus").get<std::string>();
    c.hyper = j.value("kind", "sequent") == "hypersequent";
    c.note = j.value("orientation", "");
    for (const auto& r : j.at("rules")) {
        Rule rule;
        rule.name = r.at("name").get<std::string>();
        if (c.rule(rule.name)) throw DomainError("duplicate rule " + rule.name + " in " + c.id);
        rule.special = r.value("special", "");
        for (const auto& p : r.value("premises", json::array())) rule.premises.push_back(parse_pattern(p.get<std::string>()));
        rule.conclusion = parse_pattern(r.at("conclusion").get<std::string>());
        c.rules.push_back(std::move(rule));
    }
    return c;
}

Calculus load_calculus(const std::string& id) { return parse_calculus(read_text(data_dir() / "calculi" / (id + ".json"))); }

namespace {

ProofTree tree_from_json(const json& j) {
    auto n = std::make_shared<ProofNode>();
    n->rule = j.at("rule").get<std::string>();
    n->conclusion = parse_hypersequent(j.at("conclusion").get<std::string>());
    for (const auto& c : j.value("children", json::array())) n->children.push_back(tree_from_json(c));
    return n;
}

json tree_to_json(const ProofTree& t) {
    json j{{"rule", t->rule}, {"conclusion", print(t->conclusion)}};
    json kids = json::array();
    for (const auto& c : t->children) kids.push_back(tree_to_json(c));
    j["children"] = kids;
    return j;
}

CheckResult check_node(const Calculus& calc, const ProofTree& t, const std::string& path) {
    const Rule* r = calc.rule(t->rule);
    if (!r) return {false, path, "unknown rule " + t->rule};
    std::vector<Hypersequent> premises;
    for (const auto& c : t->children) premises.push_back(c->conclusion);
    if (!calc.hyper)
        for (const auto& h : premises)
            if (h.size() != 1) return {false, path, "hypersequent in a sequent calculus"};
    if (!rule_applies(*r, premises, t->conclusion)) return {false, path, "does not match rule " + t->rule};
    for (size_t i = 0; i < t->children.size(); ++i) {
        CheckResult c = check_node(calc, t->children[i], path + "." + std::to_string(i));
        if (!c.accepted) return c;
    }
    return {};
}

}  // namespace

ProofTree parse_proof_tree(std::string_view json_text) { return tree_from_json(json::parse(json_text)); }

ProofFile parse_proof_file(std::string_view json_text) {
    json j = json::parse(json_text);
    return {j.at("calculus").get<std::string>(), tree_from_json(j.at("proof"))};
}

std::string proof_tree_json(const ProofTree& t) { return tree_to_json(t).dump(2); }

size_t proof_size(const ProofTree& t) {
    size_t n = 1;
    for (const auto& c : t->children) n += proof_size(c);
    return n;
}

CheckResult check_proof(const Calculus& calc, const ProofTree& proof) {
    if (!calc.hyper && proof->conclusion.size() != 1) return {false, "root", "hypersequent in a sequent calculus"};
    return check_node(calc, proof, "root");
}

// ---- semantics ----

namespace {

Rat unit_value(const Formula& f, const Valuation& v) {
    static const LogicPtr luk = luk_inf();
    return as<Rat>(eval(*luk, f, v));
}

}  // namespace

bool hyperseq_semantics(const Hypersequent& h, const Valuation& v) {
    Valuation lifted;
    for (const auto& [name, val] : v) {
        Rat q = as<Rat>(val);
        if (q < -1 || q > 0) throw DomainError("shifted valuation must lie in [-1,0]");
        lifted[name] = Rat(q + 1);
    }
    for (const auto& s : h) {
        Rat a = 0, c = 0;
        for (const auto& f : s.ant) a += unit_value(f, lifted) - 1;
        for (const auto& f : s.suc) c += unit_value(f, lifted) - 1;
        if (a <= c) return true;
    }
    return false;
}

bool godel_sequent_true(const Sequent& s, const Valuation& v) {
    static const LogicPtr g = godel();
    Rat lo = 1, hi = 0;
    for (const auto& f : s.ant) lo = std::min(lo, as<Rat>(eval(*g, f, v)));
    for (const auto& f : s.suc) hi = std::max(hi, as<Rat>(eval(*g, f, v)));
    return lo <= hi;
}

bool product_sequent_true(const Sequent& s, const Valuation& v) {
    static const LogicPtr pi = product();
    Rat a = 1, c = 1;
    for (const auto& f : s.ant) a *= as<Rat>(eval(*pi, f, v));
    for (const auto& f : s.suc) c *= as<Rat>(eval(*pi, f, v));
    return a <= c;
}

}  // namespace mvl
