#pragma once

#include "mvl/hilbert.hpp"
#include "mvl/matrices.hpp"
#include "mvl/syntax.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

// Multisets are kept sorted by compare().
using Multiset = std::vector<Formula>;

Multiset make_multiset(std::vector<Formula> fs);
bool multiset_equal(const Multiset& a, const Multiset& b);
// a - b when b is contained in a.
std::optional<Multiset> multiset_minus(const Multiset& a, const Multiset& b);
Multiset multiset_union(const Multiset& a, const Multiset& b);

struct Sequent {
    Multiset ant, suc;
};

int compare(const Sequent& a, const Sequent& b);
bool operator==(const Sequent& a, const Sequent& b);

// Components sorted; a plain sequent is a one-component hypersequent.
using Hypersequent = std::vector<Sequent>;

Hypersequent make_hypersequent(std::vector<Sequent> cs);
std::string print(const Sequent& s);
std::string print(const Hypersequent& h);
// "A, B => C" and "A => B | => C"
Sequent parse_sequent(std::string_view text);
Hypersequent parse_hypersequent(std::string_view text);

// Rule patterns: context variables are written $G, hypersequent
// contexts @G, formula metavariables start with an uppercase letter.
struct SidePattern {
    std::vector<Formula> formulas;
    std::vector<std::string> contexts;
};

struct SequentPattern {
    SidePattern ant, suc;
};

struct HyperPattern {
    std::string context;  // empty when absent
    std::vector<SequentPattern> components;
};

HyperPattern parse_pattern(std::string_view text);

struct Rule {
    std::string name;
    std::vector<HyperPattern> premises;
    HyperPattern conclusion;
    // "", "exchange" (premise equals conclusion), "n-contraction",
    // "mix3" (three-component mix, most permissive partition).
    std::string special;
};

struct Calculus {
    std::string id;
    bool hyper = false;
    std::string note;
    std::vector<Rule> rules;
    const Rule* rule(const std::string& name) const;
};

Calculus parse_calculus(std::string_view json_text);
// File under data/calculi.
Calculus load_calculus(const std::string& id);

struct ProofNode {
    std::string rule;
    Hypersequent conclusion;
    std::vector<std::shared_ptr<ProofNode>> children;
};
using ProofTree = std::shared_ptr<ProofNode>;

ProofTree parse_proof_tree(std::string_view json_text);
// {"calculus": id, "proof": tree}
struct ProofFile {
    std::string calculus;
    ProofTree proof;
};
ProofFile parse_proof_file(std::string_view json_text);
std::string proof_tree_json(const ProofTree& t);
size_t proof_size(const ProofTree& t);

// Does one rule application match? Exposed for tests.
bool rule_applies(const Rule& r, const std::vector<Hypersequent>& premises, const Hypersequent& conclusion);

CheckResult check_proof(const Calculus& calc, const ProofTree& proof);

// Łukasiewicz semantics shifted to [-1,0]: some component has
// sum over antecedent <= sum over succedent (empty sum 0).
bool hyperseq_semantics(const Hypersequent& h, const Valuation& v);

// Component orientation used by the sequent calculi of G and Π:
// G reads min(ant) <= max(suc) with empty min 1 and empty max 0;
// Π reads prod(ant) <= prod(suc) with empty products 1.
bool godel_sequent_true(const Sequent& s, const Valuation& v);
bool product_sequent_true(const Sequent& s, const Valuation& v);

}  // namespace mvl
