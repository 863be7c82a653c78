// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance [--seed N]

#include "mvl/data.hpp"
#include "mvl/hilbert.hpp"
#include "mvl/hyper.hpp"
#include "mvl/matrices.hpp"
#include "mvl/neutro.hpp"
#include "mvl/nsequent.hpp"
#include "mvl/padic.hpp"
#include "mvl/prob.hpp"
#include "mvl/sequent.hpp"
#include "prop.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace mvl;

namespace {

struct Report {
    bool ok = true;
    std::string first_failure;
    std::vector<std::string> notes;

    void check(bool cond, const std::string& what) {
        if (!cond && ok) first_failure = what;
        ok = ok && cond;
    }
    void note(const std::string& s) { notes.push_back(s); }
};

template <class... Ts>
std::string cat(const Ts&... xs) {
    std::ostringstream o;
    (o << ... << xs);
    return o.str();
}

Rat R(long a, long b) {
    Rat q(a, b);
    q.canonicalize();
    return q;
}

Rat rmin(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rmax(const Rat& a, const Rat& b) { return a < b ? b : a; }

Formula instance(const Formula& schema) {
    Assignment sigma;
    for (const auto& m : metavariables(schema)) sigma[m] = var("v" + m);
    return substitute(schema, sigma);
}

// Ł_n written out from the arithmetic definitions; top = n-1.
struct LukOracle {
    unsigned top;
    unsigned neg(unsigned x) const { return top - x; }
    unsigned imp(unsigned x, unsigned y) const { return std::min(top, top - x + y); }
    unsigned iter(unsigned x, unsigned y, unsigned k) const {
        unsigned r = y;
        for (unsigned i = 0; i < k; ++i) r = imp(x, r);
        return r;
    }
    unsigned apply(Conn c, unsigned x, unsigned y) const {
        switch (c) {
        case Conn::NegL: return neg(x);
        case Conn::ImpL: return imp(x, y);
        case Conn::Join: return std::max(x, y);
        case Conn::Meet: return std::min(x, y);
        default: throw std::logic_error("oracle lacks connective");
        }
    }
    unsigned eval(const Formula& f, unsigned p, unsigned q) const {
        if (f->kind == Kind::Var) return f->name == "p" ? p : q;
        unsigned a = eval(f->args[0], p, q);
        return apply(f->conn, a, f->args.size() > 1 ? eval(f->args[1], p, q) : 0);
    }
};

bool trial_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned brute_totient(unsigned n) {
    unsigned c = 0;
    for (unsigned k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

// ---------------------------------------------------------------- 1

Report c1_tables() {
    Report r;
    auto l = luk(3);
    using Cells = std::vector<std::vector<Level>>;
    const std::vector<Level> desc{2, 1, 0};
    TruthTable neg = truth_table(*l, Conn::NegL);
    r.check(neg.rows == desc && neg.cells == Cells{{0}, {1}, {2}}, "negation table");
    struct Want {
        Conn c;
        Cells cells;
        const char* name;
    };
    for (const Want& w : {Want{Conn::ImpL, {{2, 1, 0}, {2, 2, 1}, {2, 2, 2}}, "implication"},
                          Want{Conn::Join, {{2, 2, 2}, {2, 1, 1}, {2, 1, 0}}, "disjunction"},
                          Want{Conn::Meet, {{2, 1, 0}, {1, 1, 0}, {0, 0, 0}}, "conjunction"}}) {
        TruthTable t = truth_table(*l, w.c);
        r.check(t.rows == desc && t.cols == desc && t.cells == w.cells, cat(w.name, " table"));
    }

    Formula f2 = parse("(p ->L (p ->L q)) ->L (p ->L q)");
    Formula f3 = parse("(p ->L (p ->L (p ->L q))) ->L (p ->L (p ->L q))");
    for (Level x = 0; x < 3; ++x)
        for (Level y = 0; y < 3; ++y) {
            Valuation v{{"p", x}, {"q", y}};
            Level want2 = (x == 1 && y == 0) ? 1 : 2;
            r.check(as<Level>(eval(*l, f2, v)) == want2, cat("2-fold table at p=", x, " q=", y));
            r.check(as<Level>(eval(*l, f3, v)) == 2, cat("3-fold table at p=", x, " q=", y));
        }
    TautResult t2 = tautology_finite(*l, f2);
    using CE = std::vector<std::pair<std::string, Level>>;
    r.check(!t2.tautology && t2.value == 1 && t2.counterexample == CE{{"p", 1}, {"q", 0}}, "counterexample p=1 q=0");
    r.check(tautology_finite(*l, f3).tautology, "3-fold verdict");
    return r;
}

// ---------------------------------------------------------------- 2

Report c2_tuziak() {
    Report r;
    Formula p = var("p"), q = var("q");
    for (unsigned n = 3; n <= 6; ++n) {
        auto l = luk(n);
        LukOracle o{n - 1};
        for (unsigned k = 2; k <= n + 2; ++k) {
            Formula f = bin(Conn::ImpL, iterate_imp(Conn::ImpL, p, q, k), iterate_imp(Conn::ImpL, p, q, k - 1));
            bool oracle = true;
            for (unsigned x = 0; x < n; ++x)
                for (unsigned y = 0; y < n; ++y) oracle = oracle && o.imp(o.iter(x, y, k), o.iter(x, y, k - 1)) == o.top;
            bool lib = tautology_finite(*l, f).tautology;
            r.check(lib == (k >= n) && oracle == lib, cat("n=", n, " k=", k));
        }
    }
    return r;
}

// ---------------------------------------------------------------- 3

Report c3_euler() {
    Report r;
    std::vector<EulerChain> chains;
    auto t0 = std::chrono::steady_clock::now();
    for (unsigned n = 2; n <= 200; ++n) chains.push_back(euler_chain(n));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (unsigned n = 2; n <= 200; ++n) {
        const EulerChain& e = chains[n - 2];
        const auto& c = e.chain;
        r.check(!c.empty() && c.front() == n && c.back() == e.prime && trial_prime(e.prime), cat("n=", n, " ends at a prime"));
        if (trial_prime(n)) r.check(c.size() == 1, cat("prime ", n, " is not fixed"));
        for (size_t i = 0; i + 1 < c.size(); ++i) {
            r.check(c[i + 1] == brute_totient(c[i]) + 1, cat("n=", n, " step ", i));
            if (i >= 1) r.check(c[i + 1] < c[i], cat("n=", n, " not decreasing at ", i));
        }
    }
    r.check(secs < 1.0, cat("took ", secs, " s"));
    r.note(cat("199 chains in ", secs, " s"));
    return r;
}

// ---------------------------------------------------------------- 4

ProofTree deep_copy(const ProofTree& t) {
    auto n = std::make_shared<ProofNode>(*t);
    for (auto& c : n->children) c = deep_copy(c);
    return n;
}

void leaves(const ProofTree& t, std::vector<ProofNode*>& out) {
    if (t->children.empty()) out.push_back(t.get());
    for (const auto& c : t->children) leaves(c, out);
}

Formula rename_var(const Formula& f, const std::string& from, const std::string& to) {
    if (f->kind == Kind::Var) return f->name == from ? var(to) : f;
    if (f->kind != Kind::Apply) return f;
    std::vector<Formula> args;
    for (const auto& a : f->args) args.push_back(rename_var(a, from, to));
    return apply(f->conn, args);
}

void add_to_ant(ProofNode* n, const Formula& f) {
    n->conclusion[0].ant.push_back(f);
    n->conclusion[0].ant = make_multiset(n->conclusion[0].ant);
    n->conclusion = make_hypersequent(n->conclusion);
}

std::vector<std::pair<std::string, ProofTree>> tree_mutations(const ProofTree& proof, const std::string& other_rule) {
    std::vector<std::pair<std::string, ProofTree>> out;
    auto mutate = [&](const std::string& name, const std::function<void(ProofTree&)>& edit) {
        ProofTree t = deep_copy(proof);
        edit(t);
        out.emplace_back(name, t);
    };
    mutate("unknown rule at root", [](ProofTree& t) { t->rule = "frobnicate"; });
    mutate("unknown rule at a leaf", [](ProofTree& t) {
        std::vector<ProofNode*> ls;
        leaves(t, ls);
        ls.back()->rule = "frobnicate";
    });
    mutate("wrong rule at root", [&](ProofTree& t) { t->rule = other_rule; });
    mutate("extra formula in first child", [](ProofTree& t) { add_to_ant(t->children[0].get(), var("zz")); });
    mutate("extra formula in a leaf", [](ProofTree& t) {
        std::vector<ProofNode*> ls;
        leaves(t, ls);
        add_to_ant(ls.back(), var("zz"));
    });
    mutate("dropped child", [](ProofTree& t) { t->children.pop_back(); });
    mutate("duplicated child", [](ProofTree& t) { t->children.push_back(deep_copy(t->children[0])); });
    mutate("renamed variable in root", [](ProofTree& t) {
        std::vector<Sequent> cs;
        for (const auto& s : t->conclusion) {
            Sequent m;
            for (const auto& f : s.ant) m.ant.push_back(rename_var(f, "psi", "zz"));
            for (const auto& f : s.suc) m.suc.push_back(rename_var(f, "psi", "zz"));
            m.ant = make_multiset(m.ant);
            m.suc = make_multiset(m.suc);
            cs.push_back(m);
        }
        t->conclusion = make_hypersequent(cs);
    });
    mutate("formula removed from a leaf", [](ProofTree& t) {
        std::vector<ProofNode*> ls;
        leaves(t, ls);
        for (ProofNode* n : ls)
            if (!n->conclusion.empty() && !n->conclusion[0].ant.empty()) {
                n->conclusion[0].ant.erase(n->conclusion[0].ant.begin());
                n->conclusion = make_hypersequent(n->conclusion);
                return;
            }
    });
    mutate("extra component at root", [](ProofTree& t) {
        auto cs = t->conclusion;
        cs.push_back(Sequent{{var("zz")}, {}});
        t->conclusion = make_hypersequent(cs);
    });
    return out;
}

void tree_fixture(Report& r, const char* rel, const std::string& other_rule) {
    ProofFile pf = parse_proof_file(read_text(data_path(rel)));
    Calculus calc = load_calculus(pf.calculus);
    CheckResult base = check_proof(calc, pf.proof);
    r.check(base.accepted, cat(rel, " rejected at ", base.where, ": ", base.reason));
    size_t rejected = 0;
    auto muts = tree_mutations(pf.proof, other_rule);
    for (const auto& [name, t] : muts) {
        bool acc = check_proof(calc, t).accepted;
        r.check(!acc, cat(rel, ": mutation '", name, "' accepted"));
        rejected += !acc;
    }
    r.note(cat(rel, " ", rejected, "/", muts.size(), " mutations rejected"));
}

Report c4_proofs() {
    Report r;
    HilbertScript s = parse_hilbert_script(read_text(data_path("proofs/psi_imp_psi.json")));
    AxiomSystem sys = load_axiom_system(s.system);
    CheckResult base = check_hilbert(sys, s);
    r.check(base.accepted, cat("psi_imp_psi rejected at ", base.where, ": ", base.reason));

    std::vector<std::pair<std::string, std::function<void(HilbertScript&)>>> edits = {
        {"MP swapped on line 4", [](HilbertScript& h) { std::swap(h.lines[3].just.minor, h.lines[3].just.major); }},
        {"MP swapped on line 5", [](HilbertScript& h) { std::swap(h.lines[4].just.minor, h.lines[4].just.major); }},
        {"other axiom cited", [](HilbertScript& h) { h.lines[0].just.axiom = "A3"; }},
        {"unknown axiom cited", [](HilbertScript& h) { h.lines[2].just.axiom = "A9"; }},
        {"formula altered", [](HilbertScript& h) { h.lines[2].formula = parse("p ->L (q ->L q)"); }},
        {"forward citation", [](HilbertScript& h) { h.lines[3].just.major = 5; }},
        {"missing premise cited", [](HilbertScript& h) { h.lines[2].just = {Justification::Premise, "", {}, 0}; }},
        {"line deleted", [](HilbertScript& h) { h.lines.erase(h.lines.begin() + 2); }},
        {"conflicting substitution", [](HilbertScript& h) { h.lines[0].just.sigma["A"] = var("q"); }},
        {"goal changed", [](HilbertScript& h) { h.goal = parse("q ->L q"); }},
    };
    size_t rejected = 0;
    for (const auto& [name, edit] : edits) {
        HilbertScript m = s;
        edit(m);
        bool acc = check_hilbert(sys, m).accepted;
        r.check(!acc, cat("Hilbert mutation '", name, "' accepted"));
        rejected += !acc;
    }
    r.note(cat("psi_imp_psi ", rejected, "/", edits.size(), " mutations rejected"));

    tree_fixture(r, "proofs/lk_distributivity.json", "impl");
    tree_fixture(r, "proofs/mog_six_step.json", "impl");
    return r;
}

// ---------------------------------------------------------------- 5

// The rule equivalence read directly: value(c(args)) = place-1 iff every clause has an
// argument k whose value sits at one of that clause's places for k.
bool rule_oracle(const MatrixLogic& l, const GeneratedRule& g) {
    const unsigned n = l.domain.n;
    const int ar = arity(g.conn);
    for (Level x = 0; x < n; ++x)
        for (Level y = 0; y < (ar == 2 ? n : 1); ++y) {
            std::vector<Value> args{Value(x)};
            if (ar == 2) args.push_back(Value(y));
            bool at_place = as<Level>(l.apply(g.conn, args)) + 1 == g.place;
            bool hit_all = true;
            for (const auto& cl : g.premises) {
                bool hit = false;
                for (int k = 0; k < ar; ++k) {
                    Level v = k == 0 ? x : y;
                    for (unsigned pl : cl.places[k]) hit = hit || pl == v + 1;
                }
                hit_all = hit_all && hit;
            }
            if (at_place != hit_all) return false;
        }
    return true;
}

Report c5_rules() {
    Report r;
    auto l3 = luk(3);
    const char* printed[] = {"{A@3}", "{A@2}", "{A@1}"};
    for (unsigned place = 1; place <= 3; ++place) {
        GeneratedRule g = generate_rules(*l3, Conn::NegL, place);
        std::vector<std::string> got;
        for (const auto& c : g.premises) got.push_back(c.str());
        r.check(got == std::vector<std::string>{printed[place - 1]}, cat("negation at place ", place, ": ", g.str()));
    }
    size_t checked = 0;
    for (unsigned n : {3u, 4u}) {
        auto l = luk(n);
        for (Conn c : all_conns) {
            if (!l->interprets(c)) continue;
            for (unsigned place = 1; place <= n; ++place) {
                GeneratedRule g = generate_rules(*l, c, place);
                r.check(validate_rule(*l, g), cat("validate_rule ", g.name(), " in Ł", n));
                r.check(rule_oracle(*l, g), cat("oracle disagrees on ", g.name(), " in Ł", n));
                ++checked;
            }
        }
    }
    r.note(cat(checked, " connective/place pairs"));
    return r;
}

// ---------------------------------------------------------------- 6

// Formulas on {p,q} with exactly c connectives from cs.
std::vector<Formula> formulas_of_size(unsigned c, const std::vector<Conn>& cs, std::vector<std::vector<Formula>>& memo) {
    if (c < memo.size()) return memo[c];
    std::vector<Formula> out;
    if (c == 0) {
        out = {var("p"), var("q")};
    } else {
        for (Conn k : cs) {
            if (arity(k) == 1) {
                for (const auto& a : formulas_of_size(c - 1, cs, memo)) out.push_back(un(k, a));
            } else {
                for (unsigned i = 0; i + 1 <= c; ++i)
                    for (const auto& a : formulas_of_size(i, cs, memo))
                        for (const auto& b : formulas_of_size(c - 1 - i, cs, memo)) out.push_back(bin(k, a, b));
            }
        }
    }
    if (memo.size() == c) memo.push_back(out);
    return out;
}

Report c6_prover() {
    Report r;
    auto l = luk(3);
    LukOracle o{2};
    std::vector<Conn> cs = {Conn::NegL, Conn::ImpL, Conn::Join, Conn::Meet};
    std::vector<std::vector<Formula>> memo;
    size_t total = 0, agree = 0, tauts = 0;
    for (unsigned c = 0; c <= 3; ++c)
        for (const auto& f : formulas_of_size(c, cs, memo)) {
            bool taut = true;
            for (unsigned x = 0; x < 3; ++x)
                for (unsigned y = 0; y < 3; ++y) taut = taut && o.eval(f, x, y) == 2;
            bool lib = tautology_finite(*l, f).tautology;
            ProveResult pr = prove_bounded(*l, designated_sequent(*l, f), 8);
            bool proved = pr.status == ProveStatus::Proved;
            bool ok = lib == taut && proved == taut;
            if (proved) ok = ok && check_nproof(*l, pr.proof).accepted;
            r.check(ok, cat("disagreement on ", print(f)));
            ++total;
            agree += ok;
            tauts += taut;
        }
    r.note(cat(agree, "/", total, " formulas agree, ", tauts, " tautologies"));
    return r;
}

// ---------------------------------------------------------------- 7

Report c7_shift() {
    Report r;
    auto grid = unit_grid(21);
    LawCheck lc = shift_homomorphism(grid);
    r.check(lc.holds, cat("library: ", lc.witness));
    size_t pairs = 0;
    for (const auto& x : grid)
        for (const auto& y : grid) {
            Rat sx = x - 1, sy = y - 1;
            r.check(unit::luk_imp(x, y) - 1 == rmin(0, sy - sx), cat("imp at ", rat_str(x), ",", rat_str(y)));
            r.check(unit::luk_conj(x, y) - 1 == rmax(-1, sx + sy), cat("conj at ", rat_str(x), ",", rat_str(y)));
            ++pairs;
        }
    r.check(pairs == 441, "grid size");
    r.note(cat(pairs, " pairs"));
    return r;
}

// ---------------------------------------------------------------- 8

Rat dev_oracle(Family fam, unsigned n, const std::vector<Rat>& grid) {
    Rat m = 0;
    auto upd = [&](const Rat& a, const Rat& b) { m = rmax(m, abs(Rat(a - b))); };
    for (const auto& x : grid) {
        Rat lneg = 1 - x, gneg = x == 0 ? Rat(1) : Rat(0);
        if (fam == Family::HL) upd(unit::hl_neg(n, x), lneg);
        if (fam == Family::Pquasi) upd(unit::pq_neg(n, x), lneg);
        if (fam == Family::HG) upd(unit::hg_neg(n, x), gneg);
        for (const auto& y : grid) {
            Rat limp = rmin(1, 1 - x + y), gimp = x <= y ? Rat(1) : y;
            if (fam == Family::HL) {
                upd(unit::hl_imp(n, x, y), limp);
                upd(unit::hl_or(n, x, y), rmax(x, y));
                upd(unit::hl_and(n, x, y), rmin(x, y));
            } else if (fam == Family::Pquasi) {
                upd(unit::pq_imp(n, x, y), limp);
                upd(unit::pq_or(n, x, y), rmax(x, y));
                upd(unit::pq_and(n, x, y), rmin(x, y));
            } else {
                upd(unit::hg_imp(n, x, y), gimp);
            }
        }
    }
    return m;
}

Report c8_convergence() {
    Report r;
    auto grid = unit_grid(101);
    for (auto [fam, name] : {std::pair{Family::HL, "HL"}, std::pair{Family::Pquasi, "PQ"}}) {
        std::vector<Rat> devs;
        for (unsigned n : {10u, 100u, 1000u}) {
            Rat d = converge_check(fam, n, 101).max_dev;
            r.check(d == dev_oracle(fam, n, grid), cat(name, " n=", n, " library and oracle differ"));
            r.check(d <= Rat(1, n), cat(name, " dev(", n, ") = ", rat_str(d)));
            devs.push_back(d);
        }
        r.check(devs[2] < devs[0], cat(name, " dev(1000) not below dev(10)"));
        r.note(cat(name, " dev(10)~", devs[0].get_d(), " dev(100)~", devs[1].get_d(), " dev(1000)~", devs[2].get_d()));
    }
    Rat prev = -1;
    for (unsigned n : {1u, 2u, 5u, 10u, 100u, 1000u}) {
        Rat d = converge_check(Family::HG, n, 101).max_dev;
        r.check(d == dev_oracle(Family::HG, n, grid), cat("HG n=", n, " library and oracle differ"));
        if (prev >= 0) r.check(d <= prev, cat("HG deviation grows at n=", n));
        prev = d;
    }
    return r;
}

// ---------------------------------------------------------------- 9

BigInt modulus(unsigned p, unsigned K) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, K);
    return m;
}

BigInt value_of(const PadicInt& x) {
    BigInt v = 0;
    for (unsigned i = x.K(); i-- > 0;) v = v * x.p() + x.digit(i);
    return v;
}

std::vector<PadicInt::Digit> digits_of(BigInt n, unsigned p, unsigned K) {
    BigInt m = modulus(p, K);
    n %= m;
    if (n < 0) n += m;
    std::vector<PadicInt::Digit> d;
    for (unsigned i = 0; i < K; ++i) {
        BigInt rem = n % p;
        d.push_back(static_cast<PadicInt::Digit>(rem.get_ui()));
        n /= p;
    }
    return d;
}

Report c9_padic() {
    Report r;
    prop::Gen g(900);
    {
        auto l = padic_luk(2, 32);
        const PadicInt top = PadicInt::n_max(2, 32);
        for (int i = 0; i < 10000; ++i) {
            PadicInt x = g.padic(2, 32);
            PadicInt nx = as<PadicInt>(eval(*l, parse("~L p"), {{"p", Value(x)}}));
            r.check(nx == sub(top, x), "negation is N_max - x");
            r.check(pmax(x, nx) == top && pmin(x, nx).is_zero(), cat("Boolean law at ", x.str()));
        }
    }
    {
        PadicInt one = PadicInt::one(3, 8), n1 = sub(PadicInt::n_max(3, 8), one);
        bool broken = pmax(one, n1) != PadicInt::n_max(3, 8) || !pmin(one, n1).is_zero();
        r.check(broken, "p=3 witness x=1 satisfies the Boolean laws");
    }
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned K : {8u, 32u}) {
            const PadicInt top = PadicInt::n_max(p, K);
            for (int i = 0; i < 200; ++i) {
                PadicInt x = g.padic(p, K), y = g.padic(p, K), z = g.padic(p, K);
                BigInt a = value_of(x), b = value_of(y);
                std::string at = cat(" p=", p, " K=", K);
                // ring against integers mod p^K
                r.check(add(x, y).digits() == digits_of(a + b, p, K), "add" + at);
                r.check(sub(x, y).digits() == digits_of(a - b, p, K), "sub" + at);
                r.check(mul(x, y).digits() == digits_of(a * b, p, K), "mul" + at);
                r.check(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)), "distributivity" + at);
                r.check(add(x, neg(x)).is_zero(), "additive inverse" + at);
                if (auto inv = inverse(x)) r.check(mul(x, *inv) == PadicInt::one(p, K), "unit inverse" + at);
                else r.check(x.digit(0) == 0, "inverse missing for a unit" + at);
                // lattice
                r.check(pmin(x, pmax(x, y)) == x && pmax(x, pmin(x, y)) == x, "absorption" + at);
                r.check(pmin(x, y) == pmin(y, x) && pmax(x, y) == pmax(y, x), "commutativity" + at);
                r.check(pmin(pmin(x, y), z) == pmin(x, pmin(y, z)), "associativity" + at);
                r.check(pmin(x, top) == x && pmax(x, top) == top, "N_max is top" + at);
                bool le = true, ge = true;
                for (unsigned k = 0; k < K; ++k) {
                    le = le && x.digit(k) <= y.digit(k);
                    ge = ge && x.digit(k) >= y.digit(k);
                }
                Order want = le && ge ? Order::EQ : le ? Order::LE : ge ? Order::GE : Order::Incomparable;
                r.check(leq(x, y) == want, "digitwise order" + at);
                // norm: |x| = p^-v(x), ultrametric, multiplicative when the product is visible
                auto val = [&](const PadicInt& v) {
                    BigInt m = value_of(v);
                    unsigned L = 0;
                    while (L < K && m % p == 0) {
                        m /= p;
                        ++L;
                    }
                    return L;
                };
                PadicNorm nx = norm(x), ny = norm(y);
                r.check(nx.L == val(x), "valuation" + at);
                r.check(norm(add(x, y)).value <= rmax(nx.value, ny.value), "ultrametric" + at);
                if (!nx.saturated && !ny.saturated && nx.L + ny.L < K)
                    r.check(norm(mul(x, y)).value == nx.value * ny.value, "multiplicative norm" + at);
            }
        }
    return r;
}

// ---------------------------------------------------------------- 10

Report c10_order() {
    Report r;
    for (unsigned K : {6u, 16u}) {
        PadicInt a = PadicInt::from_rational(2, K, -1, 3), b = PadicInt::from_rational(2, K, -2, 3);
        // -1/3 = ...0101 01 and -2/3 = ...1010 10 in base 2
        for (unsigned k = 0; k < K; ++k) r.check(a.digit(k) == (k % 2 == 0) && b.digit(k) == (k % 2 == 1), cat("digits K=", K));
        r.check(leq(a, b) == Order::Incomparable, cat("comparable at K=", K));
        r.check(pmin(a, b).is_zero(), cat("pmin K=", K));
        r.check(pmax(a, b) == PadicInt::n_max(2, K), cat("pmax K=", K));
    }
    return r;
}

// ---------------------------------------------------------------- 11

std::vector<std::string> ids_of(const Ensemble& s, size_t n) {
    std::vector<std::string> out;
    for (unsigned j = 0; j < s.floors().size() && out.size() < n; ++j) {
        BigInt pop = s.floor_population(j);
        for (unsigned long i = 0; pop > i && out.size() < n; ++i) out.push_back(std::to_string(j) + "." + std::to_string(i));
    }
    return out;
}

Event finite(const std::vector<std::string>& ids) { return Event{{ids.begin(), ids.end()}, false}; }

Report c11_probability() {
    Report r;
    prop::Gen g(1100);
    // subensembles of S_{-1} have probability -N
    for (unsigned p : {2u, 3u, 5u}) {
        const unsigned K = 10;
        Ensemble s = Ensemble::largest(p, K);
        r.check(s.volume() == PadicInt::n_max(p, K), "largest volume");
        for (long n = 1; n <= 20; ++n) {
            EventProb e = event_prob(s, finite(ids_of(s, n)));
            r.check(e.value && *e.value == PadicInt::from_integer(p, K, -n), cat("P(S_", n, ") at p=", p));
        }
    }
    // event identities on random towers
    for (unsigned p : {2u, 3u, 5u}) {
        const unsigned K = 8;
        for (int tower = 0; tower < 5; ++tower) {
            std::vector<BigInt> floors;
            for (unsigned j = 0; j < 3; ++j) floors.push_back(BigInt(g.below(p)));
            floors[0] = 1 + g.below(p - 1);  // unit volume
            Ensemble s(p, K, floors);
            auto all = ids_of(s, 1000);
            BigInt size = static_cast<unsigned long>(all.size());
            r.check(s.volume() == PadicInt::from_integer(p, K, size), "volume counts elements");
            for (int k = 0; k < 100; ++k) {
                std::vector<std::string> a1, a2;
                for (const auto& id : all) {
                    unsigned c = g.below(3);
                    if (c == 1) a1.push_back(id);
                    if (c == 2) a2.push_back(id);
                }
                auto both = a1;
                both.insert(both.end(), a2.begin(), a2.end());
                EventProb p1 = event_prob(s, finite(a1)), p2 = event_prob(s, finite(a2)), pu = event_prob(s, finite(both));
                if (!p1.value || !p2.value || !pu.value) {
                    r.check(false, "undefined probability on a unit-volume tower");
                    continue;
                }
                // P(A) = |A| / |S|
                r.check(mul(*p1.value, s.volume()) == PadicInt::from_integer(p, K, static_cast<long>(a1.size())), "finite event value");
                EventProb pc = event_prob(s, Event{{a1.begin(), a1.end()}, true});
                r.check(pc.value && *pc.value == sub(PadicInt::one(p, K), *p1.value), "complement");
                r.check(*pu.value == add(*p1.value, *p2.value), "additivity");
                // Bayes: P_A(B) P(A) = P(B) when n(A) is a unit
                EventProb cond = bayes(s, finite(both), finite(a1));
                if (cond.value) r.check(mul(*cond.value, *pu.value) == *p1.value, "Bayes");
                else r.check(event_volume(s, finite(both)).digit(0) == 0, "Bayes undefined on a unit volume");
            }
        }
    }
    // p = 2: conditioning on two elements of S_{-1} divides by -2
    {
        Ensemble s2 = Ensemble::largest(2, 8);
        auto ids = ids_of(s2, 2);
        EventProb e = bayes(s2, finite(ids), finite({ids[0]}));
        r.check(!e.value.has_value(), cat("p=2 Bayes resolved to ", e.str()));
    }
    // formula probability axioms on random valuations
    size_t add_cases = 0, min_fail = 0;
    std::string min_witness;
    for (unsigned p : {2u, 3u}) {
        const unsigned K = 8;
        auto l = padic_luk(p, K);
        const PadicInt top = PadicInt::n_max(p, K);
        for (int k = 0; k < 500; ++k) {
            PadicInt x = g.padic(p, K), y = g.padic(p, K);
            if (g.coin()) {
                auto d = y.digits();
                for (unsigned i = 0; i < K; ++i)
                    if (x.digit(i) != 0) d[i] = 0;
                y = PadicInt(p, K, d);
            }
            Valuation v{{"p", Value(x)}, {"q", Value(y)}};
            PadicInt pp = formula_prob(*l, parse("p"), v), pq = formula_prob(*l, parse("q"), v);
            // axiom 1: P(phi) * N_max = val(phi)
            r.check(mul(pp, top) == x, "P(phi) N_max = val(phi)");
            if (as<PadicInt>(eval(*l, parse("p /\\ q"), v)).is_zero()) {
                ++add_cases;
                r.check(formula_prob(*l, parse("p \\/ q"), v) == add(pp, pq), "formula additivity");
            }
            PadicInt conj = formula_prob(*l, parse("p /\\ q"), v);
            if (conj != pmin(pp, pq)) {
                if (!min_fail) min_witness = cat("p=", p, " x=", value_of(x).get_str(), " y=", value_of(y).get_str());
                ++min_fail;
            }
        }
    }
    // fixed witness for the min axiom
    {
        auto l = padic_luk(2, 4);
        Valuation w{{"p", Value(PadicInt::from_integer(2, 4, 1))}, {"q", Value(PadicInt::from_integer(2, 4, 2))}};
        PadicInt conj = formula_prob(*l, parse("p /\\ q"), w);
        PadicInt mn = pmin(formula_prob(*l, parse("p"), w), formula_prob(*l, parse("q"), w));
        if (conj != mn) ++min_fail, min_witness = min_witness.empty() ? "p=2 x=1 y=2" : min_witness;
    }
    r.check(min_fail == 0, cat("min-conjunction fails on ", min_fail, " valuations, e.g. ", min_witness));
    r.note(cat(add_cases, " additivity cases"));
    return r;
}

// ---------------------------------------------------------------- 12

Report c12_laws() {
    Report r;
    auto grid = unit_grid(21);
    for (TNorm t : {TNorm::Luk, TNorm::Godel, TNorm::Product}) {
        for (const auto& lc : tnorm_laws(t, grid)) r.check(lc.holds, cat("t-norm law ", lc.name, ": ", lc.witness));
        for (const auto& lc : bl_laws(t, grid)) r.check(lc.holds, cat("BL law ", lc.name, ": ", lc.witness));
        // residuation from the definition, independent of the law tables
        for (const auto& x : grid)
            for (const auto& y : grid)
                for (const auto& z : grid)
                    r.check((z <= residuum(t, x, y)) == (tnorm(t, x, z) <= y),
                            cat("residuation at ", rat_str(x), ",", rat_str(y), ",", rat_str(z)));
    }
    auto coarse = unit_grid(11);
    size_t axioms = 0;
    for (const char* id : {"luk-inf", "godel", "product", "bl-luk", "bl-godel", "bl-product"}) {
        AxiomSystem sys = load_axiom_system(id);
        auto logic = make_logic(sys.logic);
        for (const auto& [name, ax] : sys.axioms) {
            Formula f = instance(ax);
            // four or more variables on the full grid is slow; use 11 points there
            const auto& gr = variables(f).size() <= 3 ? grid : coarse;
            auto ce = grid_counterexample(*logic, f, gr);
            r.check(!ce, cat(id, " axiom ", name, " not designated"));
            ++axioms;
        }
    }
    r.note(cat(axioms, " Hilbert axioms checked"));
    return r;
}

// ---------------------------------------------------------------- 13

size_t closure_size(unsigned n) {
    const unsigned regions = (1u << n) - 1;
    std::set<std::uint64_t> sets{0};
    for (unsigned k = 0; k < n; ++k) {
        std::uint64_t s = 0;
        for (unsigned reg = 1; reg <= regions; ++reg)
            if (reg >> k & 1u) s |= std::uint64_t(1) << reg;
        sets.insert(s);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> cur(sets.begin(), sets.end());
        for (auto a : cur)
            for (auto b : cur) grew |= sets.insert(a | b).second | sets.insert(a & b).second;
    }
    return sets.size();
}

Report c13_hyper() {
    Report r;
    prop::Gen g(1300);
    const unsigned w = 4;
    for (int i = 0; i < 10000; ++i) {
        HyperValue a = g.hyper(w), b = g.hyper(w);
        Order o = hleq(a, b);
        std::string at = " at " + a.str() + ", " + b.str();
        if (a.is_standard() && b.is_standard()) {
            Order want = a.standard_value() == b.standard_value() ? Order::EQ
                         : a.standard_value() < b.standard_value() ? Order::LE
                                                                    : Order::GE;
            r.check(o == want, "standard order" + at);
        }
        if (a.is_standard() && !b.is_standard() && a.standard_value() > 0) r.check(o == Order::GE, "standard dominance" + at);
        HyperValue lo = hmin(a, b), hi = hmax(a, b);
        r.check(lo.is_standard() || lo.width() == w, "min width" + at);
        if (o == Order::LE || o == Order::EQ) r.check(lo == a && hi == b, "min/max on LE" + at);
        if (o == Order::GE) r.check(lo == b && hi == a, "min/max on GE" + at);
        r.check(hmin(a, b) == hmin(b, a) && hmax(a, b) == hmax(b, a), "commutativity" + at);
        r.check(hmin(a, a) == a && hmax(a, a) == a, "idempotence" + at);
        Order back = hleq(b, a);
        r.check(back == (o == Order::LE ? Order::GE : o == Order::GE ? Order::LE : o), "antisymmetry" + at);
    }
    r.check(hleq(HyperValue::window({0, 1}), HyperValue::window({1, 0})) == Order::Incomparable, "incomparable windows");
    const size_t want[] = {2, 5, 19};
    for (unsigned n = 1; n <= 3; ++n) {
        size_t c = hyperpower_set(n).cardinality();
        r.check(c == want[n - 1], cat("|D| for n=", n, " is ", c));
        if (n == 3) r.check(c == closure_size(3), "closure oracle for n=3");
    }
    return r;
}

// ---------------------------------------------------------------- 14

HyperTriple HT(const Rat& t, const Rat& i, const Rat& f) {
    return {HyperValue::standard(t), HyperValue::standard(i), HyperValue::standard(f)};
}

Report c14_inl() {
    Report r;
    prop::Gen g(1400);
    auto comp = [&](bool high) {
        if (g.below(3) == 0) return HyperValue::standard(high ? 1 : 0);
        return g.hyper(3, 4);
    };
    auto mp_holds = [](const HyperTriple& a, const HyperTriple& b) {
        return !(inl_designated(a) && inl_designated(inl_apply(InlConn::Imp, a, b))) || inl_designated(b);
    };
    size_t fired = 0;
    for (int k = 0; k < 10000; ++k) {
        HyperTriple a{comp(true), comp(false), comp(false)}, b{comp(true), comp(false), comp(false)};
        fired += inl_designated(a) && inl_designated(inl_apply(InlConn::Imp, a, b));
        r.check(mp_holds(a, b), "modus ponens on random triples");
        r.check(inl_apply(InlConn::Neg, inl_apply(InlConn::Neg, a)) == a, "negation involution");
    }
    // boundary: standard corners and midpoints plus infinitesimal windows
    std::vector<HyperValue> edge = {HyperValue::standard(0), HyperValue::standard(R(1, 2)), HyperValue::standard(1),
                                    HyperValue::window({R(1, 2), R(1, 3), R(1, 4)}),
                                    HyperValue::window({1, R(2, 3), R(3, 4)})};
    std::vector<HyperTriple> corners;
    for (const auto& t : edge)
        for (const auto& i : edge)
            for (const auto& f : edge) corners.push_back({t, i, f});
    for (const auto& a : corners)
        for (const auto& b : corners) r.check(mp_holds(a, b), "modus ponens on boundary triples");
    r.note(cat(fired, " random premises fired"));

    // axioms: exhaustive over {0,1/2,1} per component, then sampled from the 11-point grid
    AxiomSystem sys = load_axiom_system("inl");
    auto logic = make_logic(sys.logic);
    auto grid = unit_grid(11);
    std::vector<Rat> small = {0, R(1, 2), 1};
    std::vector<std::string> failing;
    for (const auto& [name, ax] : sys.axioms) {
        Formula f = instance(ax);
        auto vars = variables(f);
        std::string witness;
        std::vector<HyperTriple> pool;
        for (const auto& t : small)
            for (const auto& i : small)
                for (const auto& fv : small) pool.push_back(HT(t, i, fv));
        std::vector<size_t> idx(vars.size(), 0);
        auto test = [&](const Valuation& v) {
            if (!witness.empty()) return;
            if (!logic->designated(eval(*logic, f, v))) {
                for (const auto& [x, val] : v) witness += x + "=" + value_str(val) + " ";
            }
        };
        while (true) {
            Valuation v;
            for (size_t k = 0; k < vars.size(); ++k) v[vars[k]] = pool[idx[k]];
            test(v);
            size_t k = 0;
            while (k < idx.size() && ++idx[k] == pool.size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
        for (int s = 0; s < 5000 && witness.empty(); ++s) {
            Valuation v;
            for (const auto& x : vars) v[x] = HT(grid[g.below(11)], grid[g.below(11)], grid[g.below(11)]);
            test(v);
        }
        if (!witness.empty()) failing.push_back(name + " (" + witness.substr(0, witness.size() - 1) + ")");
    }
    if (!failing.empty()) {
        std::string all;
        for (const auto& f : failing) all += (all.empty() ? "" : "; ") + f;
        r.check(false, "axioms not designated: " + all);
    }

    auto Pt = [](const Rat& q) { return Interval::point(q); };
    auto Iv = [](const Rat& a, const Rat& b) { return Interval{a, b}; };
    struct Fix {
        NeutroInterval a;
        const char* label;
    };
    std::vector<Fix> fixtures = {
        {NeutroInterval::make(Pt(1), std::nullopt, Pt(0)), "classical"},
        {NeutroInterval::make(Pt(R(3, 5)), std::nullopt, Pt(R(2, 5))), "fuzzy"},
        {NeutroInterval::make(Pt(R(1, 5)), std::nullopt, Pt(R(2, 5))), "intuitionistic"},
        {NeutroInterval::make(Pt(R(3, 10)), std::nullopt, Pt(R(8, 10))), "paraconsistent"},
        {NeutroInterval::make(Iv(R(1, 5), R(2, 5)), std::nullopt, Iv(R(3, 5), R(4, 5))), "interval-fuzzy"},
        {NeutroInterval::make(Iv(R(1, 5), R(2, 5)), std::nullopt, Iv(R(1, 5), R(3, 5))), "interval-intuitionistic"},
        {NeutroInterval::make(Iv(R(3, 5), R(4, 5)), std::nullopt, Iv(R(3, 5), R(4, 5))), "interval-paraconsistent"},
        {NeutroInterval::make(Pt(1), Pt(0), Pt(0)), "general"},
    };
    for (const auto& fx : fixtures) {
        std::string got = classify_interval_neutro(fx.a);
        r.check(got == fx.label, cat(neutro_str(fx.a), " classified ", got, ", want ", fx.label));
    }
    return r;
}

// ---------------------------------------------------------------- 15

Report c15_clone() {
    Report r;
    auto l3 = luk(3);
    auto clone = clone_closure(*l3, {Conn::NegL, Conn::ImpL}, 2, 6);
    for (const auto& f : clone) {
        bool keeps = true;
        for (Level x : {0u, 2u})
            for (Level y : {0u, 2u}) {
                Level v = f.table[x * 3 + y];
                keeps = keeps && (v == 0 || v == 2);
            }
        r.check(keeps && preserves_extremes(f), "closure member leaves {0,2}");
    }
    // unary behaviours on {0,2}: identity, swap, constant 0, constant 2
    std::set<std::pair<Level, Level>> seen;
    for (const auto& f : clone)
        if (!f.depends_on_second()) seen.insert({f.table[0], f.table[2 * 3]});
    for (auto b : {std::pair<Level, Level>{0, 2}, {2, 0}, {0, 0}, {2, 2}})
        r.check(seen.count(b) == 1, cat("unary behaviour ", b.first, b.second, " on {0,2} missing"));
    // 2^4 choices on {0,2}^2 times 3^5 elsewhere
    const double total = 16.0 * 243.0;
    r.note(cat(clone.size(), " functions, coverage ", clone.size() / total, " of the 3888 binary {0,2}-preserving ones"));
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) prop::seed() = std::stoul(argv[i] + 7);
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) prop::seed() = std::stoul(argv[++i]);
        else {
            std::fprintf(stderr, "usage: acceptance [--seed N]\n");
            return 2;
        }
    }
    std::printf("seed %lu\n", prop::seed());

    struct Criterion {
        int id;
        const char* name;
        Report (*run)();
    };
    const Criterion all[] = {
        {1, "Ł3 truth tables and formula tables", c1_tables},
        {2, "generalized Tuziak schema", c2_tuziak},
        {3, "Euler chains", c3_euler},
        {4, "proof fixtures and mutations", c4_proofs},
        {5, "n-sequent rule generation", c5_rules},
        {6, "bounded prover vs tautology check", c6_prover},
        {7, "shift homomorphism", c7_shift},
        {8, "nonlinear convergence", c8_convergence},
        {9, "p-adic algebra", c9_padic},
        {10, "p-adic order fixture", c10_order},
        {11, "p-adic probability", c11_probability},
        {12, "t-norm, BL laws and Hilbert axioms", c12_laws},
        {13, "hyper structure", c13_hyper},
        {14, "neutrosophic and INL", c14_inl},
        {15, "clone closure", c15_clone},
    };
    int failed = 0;
    for (const auto& c : all) {
        Report rep;
        auto t0 = std::chrono::steady_clock::now();
        try {
            rep = c.run();
        } catch (const std::exception& e) {
            rep.ok = false;
            rep.first_failure = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %s (%.2fs)", rep.ok ? "PASS" : "FAIL", c.id, c.name, secs);
        if (!rep.ok) std::printf(": %s", rep.first_failure.c_str());
        std::printf("\n");
        for (const auto& n : rep.notes) std::printf("        %s\n", n.c_str());
        std::fflush(stdout);
        failed += !rep.ok;
    }
    std::printf("%d of 15 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
