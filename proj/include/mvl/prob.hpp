#pragma once

#include "mvl/hyper.hpp"
#include "mvl/matrices.hpp"
#include "mvl/padic.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace mvl {

// Tower of floors; floor j holds l_j * p^j elements named "j.i".
class Ensemble {
public:
    Ensemble(unsigned p, unsigned K, std::vector<BigInt> floors);
    // S_{-1}: l_j = p-1 on every floor below K, so the volume is N_max.
    static Ensemble largest(unsigned p, unsigned K);

    unsigned p() const { return p_; }
    unsigned K() const { return K_; }
    const std::vector<BigInt>& floors() const { return l_; }
    BigInt floor_population(unsigned j) const;
    PadicInt volume() const;
    bool contains(const std::string& id) const;

private:
    unsigned p_, K_;
    std::vector<BigInt> l_;
};

// A finite set of element ids, or the complement of one.
struct Event {
    std::set<std::string> ids;
    bool complement = false;
};

struct EventProb {
    PadicInt num, den;
    std::optional<PadicInt> value;  // set when den is a unit
    std::string str() const;
};

// p-adic volume n(A) of an event.
PadicInt event_volume(const Ensemble& s, const Event& a);
EventProb event_prob(const Ensemble& s, const Event& a);
bool subset_of(const Event& b, const Event& a);
// P_A(B) = n(B) / n(A); needs B inside A.
EventProb bayes(const Ensemble& s, const Event& a, const Event& b);

// val/N_max = -val in the p-adic Łukasiewicz matrix.
PadicInt formula_prob(const MatrixLogic& logic, const Formula& f, const Valuation& v);

enum class Measure { Zero, One, Undecided };
const char* measure_name(Measure m);
// Window model of the Frechet filter: sets missing at most tau indices
// count as large, sets with at most tau indices as small. Needs W > 3 tau.
Measure hyper_measure(unsigned W, const std::set<unsigned>& a, unsigned tau);

enum class FuzzyOp { Meet, Join, Sum, Neg };
FuzzyOp fuzzy_op_from_name(std::string_view name);
HyperValue fuzzy_op(FuzzyOp op, const HyperValue& a, const HyperValue& b);
PadicInt fuzzy_op(FuzzyOp op, const PadicInt& a, const PadicInt& b);

bool crisp(const HyperValue& mu);
bool crisp(const PadicInt& mu);

// Ensemble file: "p: 2", "K: 8", "floor j: l_j", "event NAME: id, id, ..."
// with an optional leading "not" for complements.
struct EnsembleFile {
    Ensemble ensemble;
    std::map<std::string, Event> events;
};
EnsembleFile parse_ensemble(std::string_view text);

}  // namespace mvl
