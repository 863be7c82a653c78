#pragma once

#include "mvl/syntax.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mvl {

struct AxiomSystem {
    std::string id;
    std::string logic;  // matrix logic the axioms are meant for
    Conn imp = Conn::ImpL;
    std::vector<std::pair<std::string, Formula>> axioms;

    const Formula* axiom(const std::string& name) const;
};

// Tuziak's axioms for the n-valued Łukasiewicz calculus.
AxiomSystem tuziak_system(unsigned n);
AxiomSystem parse_axiom_system(std::string_view json_text);
// "tuziak:n" or a file under data/hilbert.
AxiomSystem load_axiom_system(const std::string& id);

struct Justification {
    enum Kind { Axiom, Premise, MP } kind = Axiom;
    std::string axiom;
    Assignment sigma;  // may be partial; the rest is found by matching
    int premise = 0;  // 0-based
    int minor = 0, major = 0;  // 1-based line numbers
};

struct HilbertLine {
    Formula formula;
    Justification just;
};

struct HilbertScript {
    std::string system;
    std::vector<Formula> premises;
    std::vector<HilbertLine> lines;
    Formula goal;  // optional
};

HilbertScript parse_hilbert_script(std::string_view json_text);

struct CheckResult {
    bool accepted = true;
    std::string where;  // line number or tree path of the first failure
    std::string reason;
};

CheckResult check_hilbert(const AxiomSystem& sys, const HilbertScript& proof);

}  // namespace mvl
