#include "mvl/nsequent.hpp"

#include "mvl/common.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace mvl {

bool NSequent::operator==(const NSequent& o) const {
    if (places.size() != o.places.size()) return false;
    for (size_t i = 0; i < places.size(); ++i)
        if (!multiset_equal(places[i], o.places[i])) return false;
    return true;
}

NSequent empty_nsequent(unsigned n) { return NSequent{std::vector<Multiset>(n)}; }

NSequent at_places(unsigned n, const std::vector<unsigned>& places, const Formula& psi) {
    NSequent s = empty_nsequent(n);
    for (unsigned i : places) {
        if (i < 1 || i > n) throw DomainError("place " + std::to_string(i) + " out of range");
        s.places[i - 1] = make_multiset({psi});
    }
    return s;
}

namespace {

unsigned finite_n(const MatrixLogic& logic) {
    if (logic.domain.kind != DomainKind::Finite) throw DomainError(logic.id + " is not a finite logic");
    return logic.domain.n;
}

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\n\r"), b = s.find_last_not_of(" \t\n\r");
    return a == std::string_view::npos ? std::string() : std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (depth == 0 && s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

Level level_of(const MatrixLogic& logic, const Formula& f, const Valuation& v) { return as<Level>(eval(logic, f, v)); }

}  // namespace

NSequent designated_sequent(const MatrixLogic& logic, const Formula& psi) {
    unsigned n = finite_n(logic);
    std::vector<unsigned> places;
    for (unsigned v = 0; v < n; ++v)
        if (logic.designated(Value(Level(v)))) places.push_back(v + 1);
    return at_places(n, places, psi);
}

std::string print(const NSequent& s) {
    std::string out;
    for (size_t i = 0; i < s.places.size(); ++i) {
        if (i) out += " | ";
        for (size_t j = 0; j < s.places[i].size(); ++j) out += (j ? ", " : "") + print(s.places[i][j]);
    }
    return out;
}

NSequent parse_nsequent(std::string_view text, unsigned n) {
    auto parts = split_top(text, '|');
    if (parts.size() != n) throw DomainError("expected " + std::to_string(n) + " places, got " + std::to_string(parts.size()));
    NSequent s = empty_nsequent(n);
    for (unsigned i = 0; i < n; ++i) {
        if (parts[i].empty()) continue;
        std::vector<Formula> fs;
        for (const auto& f : split_top(parts[i], ',')) fs.push_back(parse(f));
        s.places[i] = make_multiset(fs);
    }
    return s;
}

bool psat(const MatrixLogic& logic, const NSequent& s, const Valuation& v) {
    for (size_t i = 0; i < s.places.size(); ++i)
        for (const auto& f : s.places[i])
            if (level_of(logic, f, v) == i) return true;
    return false;
}

bool nsat(const MatrixLogic& logic, const NSequent& s, const Valuation& v) {
    for (size_t i = 0; i < s.places.size(); ++i)
        for (const auto& f : s.places[i])
            if (level_of(logic, f, v) != i) return true;
    return false;
}

PValidity pvalid(const MatrixLogic& logic, const NSequent& s, unsigned max_vars) {
    unsigned n = finite_n(logic);
    std::set<std::string> names;
    for (const auto& pl : s.places)
        for (const auto& f : pl)
            for (auto& x : variables(f)) names.insert(x);
    if (names.size() > max_vars) throw DomainError("too many variables for exhaustive check");
    std::vector<std::string> vars(names.begin(), names.end());
    std::vector<Level> val(vars.size(), 0);
    while (true) {
        Valuation v;
        for (size_t i = 0; i < vars.size(); ++i) v[vars[i]] = Value(val[i]);
        if (!psat(logic, s, v)) return {false, v};
        size_t i = 0;
        while (i < val.size() && ++val[i] == n) val[i++] = 0;
        if (i == val.size()) return {};
    }
}

// ---- rule generation ----

std::string Clause::str() const {
    std::string out = "{";
    bool first = true;
    for (size_t k = 0; k < places.size(); ++k)
        for (unsigned p : places[k]) {
            out += (first ? "" : ", ") + std::string(k == 0 ? "A" : "B") + "@" + std::to_string(p);
            first = false;
        }
    return out + "}";
}

std::string GeneratedRule::name() const { return std::string(conn_name(conn)) + ":" + std::to_string(place - 1); }

std::string GeneratedRule::str() const {
    std::string out = name() + "  ";
    if (premises.empty()) return out + "(no premises)";
    for (size_t i = 0; i < premises.size(); ++i) out += (i ? " " : "") + premises[i].str();
    return out;
}

namespace {

using Tuple = std::vector<Level>;

std::vector<Tuple> all_tuples(unsigned n, int k) {
    std::vector<Tuple> out;
    Tuple t(k, 0);
    while (true) {
        out.push_back(t);
        int i = 0;
        while (i < k && ++t[i] == n) t[i++] = 0;
        if (i == k) return out;
    }
}

bool pred(const MatrixLogic& logic, Conn c, unsigned place, const Tuple& x) {
    std::vector<Value> args(x.begin(), x.end());
    return as<Level>(logic.apply(c, args)) == place - 1;
}

// A box is one value mask per argument.
using Box = std::vector<unsigned>;

bool in_box(const Box& b, const Tuple& x) {
    for (size_t j = 0; j < x.size(); ++j)
        if (!(b[j] >> x[j] & 1u)) return false;
    return true;
}

bool sub_box(const Box& a, const Box& b) {
    for (size_t j = 0; j < a.size(); ++j)
        if ((a[j] & ~b[j]) != 0) return false;
    return true;
}

}  // namespace

GeneratedRule generate_rules(const MatrixLogic& logic, Conn conn, unsigned place) {
    unsigned n = finite_n(logic);
    int k = arity(conn);
    if (k < 1 || k > 2) throw DomainError("arity unsupported for rule generation");
    if (!logic.interprets(conn)) throw DomainError(std::string(conn_name(conn)) + " is not a connective of " + logic.id);
    if (place < 1 || place > n) throw DomainError("place out of range");
    auto tuples = all_tuples(n, k);
    std::vector<Tuple> falsifying;
    for (const auto& t : tuples)
        if (!pred(logic, conn, place, t)) falsifying.push_back(t);

    // Boxes inside the falsifying set, then the maximal ones.
    const unsigned full = (1u << n) - 1;
    std::vector<Box> inside;
    Box b(k, 1);
    while (true) {
        bool ok = true;
        for (const auto& t : tuples)
            if (in_box(b, t) && pred(logic, conn, place, t)) {
                ok = false;
                break;
            }
        if (ok) inside.push_back(b);
        int i = 0;
        while (i < k && ++b[i] > full) b[i++] = 1;
        if (i == k) break;
    }
    std::vector<Box> maximal;
    for (const auto& x : inside) {
        bool dominated = false;
        for (const auto& y : inside)
            if (x != y && sub_box(x, y)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(x);
    }

    // Exact minimum cover by iterative deepening, lowest uncovered point first.
    std::vector<size_t> chosen, best;
    std::function<bool(size_t)> cover = [&](size_t budget) -> bool {
        const Tuple* open = nullptr;
        for (const auto& t : falsifying) {
            bool hit = false;
            for (size_t c : chosen) hit = hit || in_box(maximal[c], t);
            if (!hit) {
                open = &t;
                break;
            }
        }
        if (!open) {
            best = chosen;
            return true;
        }
        if (budget == 0) return false;
        for (size_t i = 0; i < maximal.size(); ++i) {
            if (!in_box(maximal[i], *open)) continue;
            chosen.push_back(i);
            bool ok = cover(budget - 1);
            chosen.pop_back();
            if (ok) return true;
        }
        return false;
    };
    for (size_t budget = 0; !cover(budget); ++budget) {}

    GeneratedRule r{conn, place, {}};
    for (size_t c : best) {
        Clause cl;
        cl.places.resize(k);
        for (int j = 0; j < k; ++j)
            for (unsigned v = 0; v < n; ++v)
                if (!(maximal[c][j] >> v & 1u)) cl.places[j].push_back(v + 1);
        r.premises.push_back(std::move(cl));
    }
    return r;
}

bool validate_rule(const MatrixLogic& logic, const GeneratedRule& r) {
    unsigned n = finite_n(logic);
    for (const auto& t : all_tuples(n, arity(r.conn))) {
        bool all = true;
        for (const auto& cl : r.premises) {
            bool hit = false;
            for (size_t j = 0; j < t.size(); ++j)
                for (unsigned p : cl.places[j]) hit = hit || p == t[j] + 1u;
            all = all && hit;
        }
        if (all != pred(logic, r.conn, r.place, t)) return false;
    }
    return true;
}

// ---- bounded prover ----

namespace {

bool axiom(const MatrixLogic& logic, const NSequent& s) {
    const auto& first = s.places[0];
    for (const auto& f : first) {
        bool everywhere = true;
        for (size_t i = 1; i < s.places.size() && everywhere; ++i)
            everywhere = std::any_of(s.places[i].begin(), s.places[i].end(), [&](const Formula& g) { return equal(f, g); });
        if (everywhere) return true;
    }
    // a constant sitting at its own value
    for (size_t i = 0; i < s.places.size(); ++i)
        for (const auto& f : s.places[i])
            if (f->kind == Kind::Falsum || f->kind == Kind::Verum || f->kind == Kind::Graded)
                if (as<Level>(logic.constant(*f)) == i) return true;
    return false;
}

NSequent premise_of(const NSequent& s, unsigned place, const Formula& principal, const Clause& cl) {
    NSequent out = s;
    auto& pl = out.places[place - 1];
    auto it = std::find_if(pl.begin(), pl.end(), [&](const Formula& f) { return equal(f, principal); });
    pl.erase(it);
    for (size_t j = 0; j < cl.places.size(); ++j)
        for (unsigned p : cl.places[j]) {
            out.places[p - 1].push_back(principal->args[j]);
            out.places[p - 1] = make_multiset(out.places[p - 1]);
        }
    return out;
}

class Prover {
public:
    explicit Prover(const MatrixLogic& logic) : logic_(logic) {}

    const GeneratedRule& rule(Conn c, unsigned place) {
        auto key = std::make_pair(c, place);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, generate_rules(logic_, c, place)).first;
        return it->second;
    }

    ProveResult prove(const NSequent& s, unsigned depth) {
        auto node = std::make_shared<NProofNode>();
        node->conclusion = s;
        if (axiom(logic_, s)) {
            node->rule = "ax";
            return {ProveStatus::Proved, node};
        }
        for (unsigned i = 0; i < s.places.size(); ++i)
            for (const auto& f : s.places[i]) {
                if (f->kind != Kind::Apply) continue;
                // Rules are invertible, so decomposing any compound formula is
                // complete and a failing branch is conclusive.
                if (depth == 0) return {ProveStatus::ResourceExceeded, nullptr};
                const GeneratedRule& r = rule(f->conn, i + 1);
                node->rule = r.name();
                node->principal = f;
                bool exceeded = false;
                for (const auto& cl : r.premises) {
                    ProveResult sub = prove(premise_of(s, i + 1, f, cl), depth - 1);
                    if (sub.status == ProveStatus::Fail) return {ProveStatus::Fail, nullptr};
                    if (sub.status == ProveStatus::ResourceExceeded) exceeded = true;
                    node->children.push_back(sub.proof);
                }
                if (exceeded) return {ProveStatus::ResourceExceeded, nullptr};
                return {ProveStatus::Proved, node};
            }
        return {ProveStatus::Fail, nullptr};
    }

private:
    const MatrixLogic& logic_;
    std::map<std::pair<Conn, unsigned>, GeneratedRule> cache_;
};

CheckResult check_node(Prover& pv, const MatrixLogic& logic, const NProof& p, const std::string& path) {
    if (p->rule == "ax") {
        if (!p->children.empty()) return {false, path, "axiom with premises"};
        if (!axiom(logic, p->conclusion)) return {false, path, "not an axiom"};
        return {};
    }
    if (!p->principal || p->principal->kind != Kind::Apply) return {false, path, "missing principal formula"};
    auto colon = p->rule.find(':');
    auto c = conn_from_name(p->rule.substr(0, colon));
    if (colon == std::string::npos || !c || *c != p->principal->conn) return {false, path, "unknown rule " + p->rule};
    unsigned place = std::stoul(p->rule.substr(colon + 1)) + 1;
    if (place > p->conclusion.places.size()) return {false, path, "place out of range"};
    const auto& pl = p->conclusion.places[place - 1];
    if (std::none_of(pl.begin(), pl.end(), [&](const Formula& f) { return equal(f, p->principal); }))
        return {false, path, "principal formula not at place " + std::to_string(place)};
    const GeneratedRule& r = pv.rule(*c, place);
    if (r.premises.size() != p->children.size()) return {false, path, "wrong number of premises"};
    for (size_t i = 0; i < r.premises.size(); ++i) {
        if (!(premise_of(p->conclusion, place, p->principal, r.premises[i]) == p->children[i]->conclusion))
            return {false, path + "." + std::to_string(i), "premise does not match rule " + p->rule};
        CheckResult sub = check_node(pv, logic, p->children[i], path + "." + std::to_string(i));
        if (!sub.accepted) return sub;
    }
    return {};
}

}  // namespace

ProveResult prove_bounded(const MatrixLogic& logic, const NSequent& s, unsigned depth) {
    if (s.places.size() != finite_n(logic)) throw DomainError("sequent has the wrong number of places");
    Prover pv(logic);
    return pv.prove(s, depth);
}

CheckResult check_nproof(const MatrixLogic& logic, const NProof& proof) {
    Prover pv(logic);
    return check_node(pv, logic, proof, "root");
}

size_t nproof_size(const NProof& p) {
    size_t n = 1;
    for (const auto& c : p->children) n += nproof_size(c);
    return n;
}

std::string nproof_text(const NProof& p) {
    std::string out;
    std::function<void(const NProof&, int)> rec = [&](const NProof& q, int indent) {
        out += std::string(2 * indent, ' ') + q->rule + "  " + print(q->conclusion) + "\n";
        for (const auto& c : q->children) rec(c, indent + 1);
    };
    rec(p, 0);
    return out;
}

}  // namespace mvl
