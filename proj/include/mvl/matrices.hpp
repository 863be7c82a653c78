#pragma once

#include "mvl/syntax.hpp"
#include "mvl/value.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mvl {

enum class DomainKind { Finite, UnitRational, Padic, Hyper, InlHyper, InlPadic };

struct Domain {
    DomainKind kind = DomainKind::Finite;
    unsigned n = 0;  // Finite: number of values 0..n-1
    unsigned p = 0, K = 0;  // Padic, InlPadic
    unsigned W = 0;  // Hyper, InlHyper: window size
};

using TruthFn = std::function<Value(const std::vector<Value>&)>;

struct MatrixLogic {
    std::string id;
    Domain domain;
    std::map<Conn, TruthFn> interp;
    std::function<bool(const Value&)> designated;
    Value bottom, top;

    bool interprets(Conn c) const { return interp.count(c) != 0; }
    Value apply(Conn c, const std::vector<Value>& args) const;
    // bot, top and #k (finite logics only)
    Value constant(const Node& n) const;
    std::vector<Value> finite_values() const;
    Value parse_value(std::string_view text) const;
};

using LogicPtr = std::shared_ptr<const MatrixLogic>;

// Logic ids: luk3, luk:n, post:n, luk-inf, godel, product, hl:n, hg:n,
// par:n, pq:n, padic-{luk,godel,post,product}:p:K, hyper-{luk,godel,product}:W,
// inl-hyper:W, inl-padic:p:K.
LogicPtr make_logic(std::string_view id);

LogicPtr luk(unsigned n);
LogicPtr post(unsigned n);
LogicPtr luk_inf();
LogicPtr godel();
LogicPtr product();
LogicPtr hyperbolic_luk(unsigned n);
LogicPtr hyperbolic_godel(unsigned n);
LogicPtr parabolic(unsigned n);
LogicPtr quasiparabolic(unsigned n);
LogicPtr padic_luk(unsigned p, unsigned K);
LogicPtr padic_godel(unsigned p, unsigned K);
LogicPtr padic_post(unsigned p, unsigned K);
LogicPtr padic_product(unsigned p, unsigned K);
LogicPtr hyper_luk(unsigned W);
LogicPtr hyper_godel(unsigned W);
LogicPtr hyper_product(unsigned W);
LogicPtr inl_hyper(unsigned W);
LogicPtr inl_padic(unsigned p, unsigned K);

using Valuation = std::map<std::string, Value>;

Value eval(const MatrixLogic& logic, const Formula& f, const Valuation& v);

// Scalar truth functions on [0,1], shared with the convergence and law checks.
namespace unit {
Rat luk_neg(const Rat& x);
Rat luk_imp(const Rat& x, const Rat& y);
Rat luk_conj(const Rat& x, const Rat& y);
Rat godel_imp(const Rat& x, const Rat& y);
Rat godel_neg(const Rat& x);
Rat prod_imp(const Rat& x, const Rat& y);
Rat hl_neg(unsigned n, const Rat& x);
Rat hl_imp(unsigned n, const Rat& x, const Rat& y);
Rat hl_or(unsigned n, const Rat& x, const Rat& y);
Rat hl_and(unsigned n, const Rat& x, const Rat& y);
Rat hg_neg(unsigned n, const Rat& x);
Rat hg_imp(unsigned n, const Rat& x, const Rat& y);
Rat par_neg(unsigned n, const Rat& x);
Rat par_imp(unsigned n, const Rat& x, const Rat& y);
Rat pq_neg(unsigned n, const Rat& x);
Rat pq_imp(unsigned n, const Rat& x, const Rat& y);
Rat pq_or(unsigned n, const Rat& x, const Rat& y);
Rat pq_and(unsigned n, const Rat& x, const Rat& y);
}  // namespace unit

// ---- finite logics ----

struct TruthTable {
    Conn conn;
    std::vector<Level> rows;  // first argument, descending
    std::vector<Level> cols;  // second argument, descending; empty for unary
    std::vector<std::vector<Level>> cells;
};

TruthTable truth_table(const MatrixLogic& logic, Conn c);
std::string format_table(const TruthTable& t);

struct TautResult {
    bool tautology = true;
    std::vector<std::pair<std::string, Level>> counterexample;
    Level value = 0;
};

TautResult tautology_finite(const MatrixLogic& logic, const Formula& f, unsigned max_vars = 6);

BigInt count_logics(unsigned n, const std::vector<unsigned>& arities);

unsigned totient(unsigned n);
struct EulerChain {
    unsigned prime = 0;
    std::vector<unsigned> chain;
};
EulerChain euler_chain(unsigned n);

// ---- nonlinear families ----

enum class Family { HL, HG, Pquasi };

struct Convergence {
    std::vector<std::pair<std::string, Rat>> per_op;
    Rat max_dev;
};

std::vector<Rat> unit_grid(unsigned points);
Convergence converge_check(Family fam, unsigned n, unsigned grid_points);

// ---- clones over finite logics ----

// Binary table over values 0..n-1, entry [x*n + y]. Unary functions ignore y.
struct FnTable {
    unsigned n = 0;
    std::vector<Level> table;
    bool operator<(const FnTable& o) const { return table < o.table; }
    bool operator==(const FnTable& o) const { return table == o.table; }
    bool depends_on_second() const;
    bool depends_on_first() const;
};

FnTable fn_from_conn(const MatrixLogic& logic, Conn c);
bool preserves_extremes(const FnTable& f);
std::vector<FnTable> clone_closure(const MatrixLogic& logic, const std::vector<Conn>& generators,
                                   unsigned max_arity, unsigned depth);

// ---- grid checks on [0,1] logics ----

// First valuation of the formula's variables over the grid that is not
// designated, if any.
std::optional<Valuation> grid_counterexample(const MatrixLogic& logic, const Formula& f,
                                             const std::vector<Rat>& grid);

enum class TNorm { Luk, Godel, Product };

Rat tnorm(TNorm t, const Rat& x, const Rat& y);
Rat residuum(TNorm t, const Rat& x, const Rat& y);

struct LawCheck {
    std::string name;
    bool holds = true;
    std::string witness;
    size_t checked = 0;
};

std::vector<LawCheck> tnorm_laws(TNorm t, const std::vector<Rat>& grid);
std::vector<LawCheck> bl_laws(TNorm t, const std::vector<Rat>& grid);
// s(t) = t - 1 carries ->L and &L on [0,1] to min(0, y-x) and max(-1, x+y) on [-1,0].
LawCheck shift_homomorphism(const std::vector<Rat>& grid);

}  // namespace mvl
