#pragma once

#include "mvl/matrices.hpp"
#include "mvl/sequent.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mvl {

// Place i (1-based) stands for truth value i-1.
struct NSequent {
    std::vector<Multiset> places;
    bool operator==(const NSequent& o) const;
};

NSequent empty_nsequent(unsigned n);
// [S:psi]: psi at each listed place
NSequent at_places(unsigned n, const std::vector<unsigned>& places, const Formula& psi);
// psi at every place whose value is designated
NSequent designated_sequent(const MatrixLogic& logic, const Formula& psi);
std::string print(const NSequent& s);
// "p | p \/ q | " with exactly n places
NSequent parse_nsequent(std::string_view text, unsigned n);

bool psat(const MatrixLogic& logic, const NSequent& s, const Valuation& v);
bool nsat(const MatrixLogic& logic, const NSequent& s, const Valuation& v);

struct PValidity {
    bool valid = true;
    Valuation countermodel;
};
PValidity pvalid(const MatrixLogic& logic, const NSequent& s, unsigned max_vars = 6);

// One premise per clause: argument k goes to each place in places[k].
struct Clause {
    std::vector<std::vector<unsigned>> places;  // indexed by argument
    std::string str() const;
};

struct GeneratedRule {
    Conn conn;
    unsigned place = 1;
    std::vector<Clause> premises;
    std::string name() const;  // e.g. "ImpL:1" for place 2
    std::string str() const;
};

GeneratedRule generate_rules(const MatrixLogic& logic, Conn conn, unsigned place);
// Pred(x) <=> every premise clause is hit, over all argument tuples.
bool validate_rule(const MatrixLogic& logic, const GeneratedRule& r);

struct NProofNode {
    std::string rule;  // "ax" or a generated rule name
    NSequent conclusion;
    Formula principal;  // null for ax
    std::vector<std::shared_ptr<NProofNode>> children;
};
using NProof = std::shared_ptr<NProofNode>;

enum class ProveStatus { Proved, Fail, ResourceExceeded };
struct ProveResult {
    ProveStatus status = ProveStatus::Fail;
    NProof proof;
};

// Depth counts introduction steps along a branch. Axioms may carry
// arbitrary extra formulas (weakening folded in).
ProveResult prove_bounded(const MatrixLogic& logic, const NSequent& s, unsigned depth);
CheckResult check_nproof(const MatrixLogic& logic, const NProof& proof);
size_t nproof_size(const NProof& p);
std::string nproof_text(const NProof& p);

}  // namespace mvl
