#include "mvl/hilbert.hpp"

#include "mvl/common.hpp"
#include "mvl/data.hpp"

#include <json.hpp>

namespace mvl {

using nlohmann::json;

const Formula* AxiomSystem::axiom(const std::string& name) const {
    for (const auto& [n, f] : axioms)
        if (n == name) return &f;
    return nullptr;
}

AxiomSystem tuziak_system(unsigned n) {
    if (n < 2) throw DomainError("Tuziak system needs n >= 2");
    AxiomSystem s;
    s.id = "tuziak:" + std::to_string(n);
    s.logic = "luk:" + std::to_string(n);
    s.imp = Conn::ImpL;
    auto ax = [&](std::string name, std::string_view text) { s.axioms.emplace_back(std::move(name), parse_schema(text)); };
    ax("T1", "(P ->L Q) ->L ((Q ->L R) ->L (P ->L R))");
    ax("T2", "P ->L (Q ->L P)");
    ax("T3", "((P ->L Q) ->L Q) ->L ((Q ->L P) ->L P)");
    Formula p = meta("P"), q = meta("Q");
    s.axioms.emplace_back("T4", bin(Conn::ImpL, iterate_imp(Conn::ImpL, p, q, n), iterate_imp(Conn::ImpL, p, q, n - 1)));
    ax("T5", "P /\\ Q ->L P");
    ax("T6", "P /\\ Q ->L Q");
    ax("T7", "(P ->L Q) ->L ((P ->L R) ->L (P ->L Q /\\ R))");
    ax("T8", "P ->L P \\/ Q");
    ax("T9", "Q ->L P \\/ Q");
    ax("T10", "(P ->L R) ->L ((Q ->L R) ->L (P \\/ Q ->L R))");
    ax("T11", "(~L P ->L ~L Q) ->L (Q ->L P)");
    for (unsigned k = 1; k + 1 <= n - 1; ++k) {
        if ((n - 1) % k == 0) continue;
        Formula inner = bin(Conn::Iff, p, iterate_imp(Conn::ImpL, p, un(Conn::NegL, p), k - 1));
        s.axioms.emplace_back("T12." + std::to_string(k), iterate_imp(Conn::ImpL, inner, p, n - 1));
    }
    return s;
}

AxiomSystem parse_axiom_system(std::string_view json_text) {
    json j = json::parse(json_text);
    AxiomSystem s;
    s.id = j.at("id").get<std::string>();
    s.logic = j.value("logic", "");
    auto c = conn_from_name(j.value("implication", "ImpL"));
    if (!c || arity(*c) != 2) throw DomainError("bad implication tag in system " + s.id);
    s.imp = *c;
    for (const auto& a : j.at("axioms")) {
        std::string name = a.at("name").get<std::string>();
        if (s.axiom(name)) throw DomainError("duplicate axiom name " + name);
        s.axioms.emplace_back(name, parse_schema(a.at("schema").get<std::string>()));
    }
    return s;
}

AxiomSystem load_axiom_system(const std::string& id) {
    if (id.rfind("tuziak:", 0) == 0) return tuziak_system(std::stoul(id.substr(7)));
    return parse_axiom_system(read_text(data_dir() / "hilbert" / (id + ".json")));
}

HilbertScript parse_hilbert_script(std::string_view json_text) {
    json j = json::parse(json_text);
    HilbertScript s;
    s.system = j.at("system").get<std::string>();
    for (const auto& p : j.value("premises", json::array())) s.premises.push_back(parse(p.get<std::string>()));
    if (j.contains("goal")) s.goal = parse(j["goal"].get<std::string>());
    for (const auto& l : j.at("lines")) {
        HilbertLine line;
        line.formula = parse(l.at("formula").get<std::string>());
        const json& just = l.at("just");
        std::string kind = just.at(0).get<std::string>();
        if (kind == "axiom") {
            line.just.kind = Justification::Axiom;
            line.just.axiom = just.at(1).get<std::string>();
            if (just.size() > 2)
                for (auto& [k, v] : just[2].items()) line.just.sigma[k] = parse(v.get<std::string>());
        } else if (kind == "premise") {
            line.just.kind = Justification::Premise;
            line.just.premise = just.at(1).get<int>();
        } else if (kind == "mp") {
            line.just.kind = Justification::MP;
            line.just.minor = just.at(1).get<int>();
            line.just.major = just.at(2).get<int>();
        } else {
            throw DomainError("unknown justification '" + kind + "'");
        }
        s.lines.push_back(std::move(line));
    }
    return s;
}

CheckResult check_hilbert(const AxiomSystem& sys, const HilbertScript& proof) {
    auto reject = [](size_t line, std::string why) { return CheckResult{false, "line " + std::to_string(line), std::move(why)}; };
    if (proof.lines.empty()) return {false, "proof", "empty proof"};
    for (size_t k = 0; k < proof.lines.size(); ++k) {
        const HilbertLine& l = proof.lines[k];
        const size_t no = k + 1;
        switch (l.just.kind) {
        case Justification::Axiom: {
            const Formula* schema = sys.axiom(l.just.axiom);
            if (!schema) return reject(no, "unknown axiom " + l.just.axiom + " in " + sys.id);
            Assignment sigma = l.just.sigma;
            if (!match_into(*schema, l.formula, sigma))
                return reject(no, "not an instance of " + l.just.axiom + " under the given substitution");
            break;
        }
        case Justification::Premise:
            if (l.just.premise < 0 || static_cast<size_t>(l.just.premise) >= proof.premises.size())
                return reject(no, "no premise " + std::to_string(l.just.premise));
            if (!equal(proof.premises[l.just.premise], l.formula)) return reject(no, "line differs from the cited premise");
            break;
        case Justification::MP: {
            int i = l.just.minor, j = l.just.major;
            if (i < 1 || j < 1 || static_cast<size_t>(i) >= no || static_cast<size_t>(j) >= no)
                return reject(no, "modus ponens cites a line that is not earlier");
            const Formula& maj = proof.lines[j - 1].formula;
            const Formula& min = proof.lines[i - 1].formula;
            if (maj->kind != Kind::Apply || maj->conn != sys.imp || !equal(maj->args[0], min) || !equal(maj->args[1], l.formula))
                return reject(no, "major premise shape");
            break;
        }
        }
    }
    if (proof.goal && !equal(proof.goal, proof.lines.back().formula))
        return reject(proof.lines.size(), "last line is not the goal");
    return {};
}

}  // namespace mvl
