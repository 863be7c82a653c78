#include "mvl/prob.hpp"

#include <algorithm>
#include <sstream>

namespace mvl {

Ensemble::Ensemble(unsigned p, unsigned K, std::vector<BigInt> floors) : p_(p), K_(K), l_(std::move(floors)) {
    if (!is_prime(p)) throw DomainError("ensemble needs a prime p");
    if (K == 0) throw DomainError("ensemble needs K >= 1");
    if (l_.size() > K) throw DomainError("tower has more than K floors");
    BigInt cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), p, K);
    for (unsigned j = 0; j < l_.size(); ++j) {
        if (l_[j] < 0) throw DomainError("negative floor count");
        if (floor_population(j) >= cap)
            throw DomainError("floor " + std::to_string(j) + " overflows precision p^K");
    }
}

Ensemble Ensemble::largest(unsigned p, unsigned K) { return Ensemble(p, K, std::vector<BigInt>(K, BigInt(p - 1))); }

BigInt Ensemble::floor_population(unsigned j) const {
    BigInt pj;
    mpz_ui_pow_ui(pj.get_mpz_t(), p_, j);
    return l_.at(j) * pj;
}

PadicInt Ensemble::volume() const {
    BigInt n = 0;
    for (unsigned j = 0; j < l_.size(); ++j) n += floor_population(j);
    return PadicInt::from_integer(p_, K_, n);
}

bool Ensemble::contains(const std::string& id) const {
    auto dot = id.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == id.size()) return false;
    auto digits = [](std::string_view s) { return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }); };
    std::string js = id.substr(0, dot), is = id.substr(dot + 1);
    if (!digits(js) || !digits(is) || js.size() > 9) return false;
    unsigned j = std::stoul(js);
    if (j >= l_.size()) return false;
    return BigInt(is) < floor_population(j);
}

std::string EventProb::str() const {
    if (value) return value->str();
    return "undefined at precision K=" + std::to_string(den.K()) + " (" + num.str() + " / " + den.str() + ")";
}

namespace {

void check_members(const Ensemble& s, const Event& a) {
    for (const auto& id : a.ids)
        if (!s.contains(id)) throw DomainError("element " + id + " is not in the ensemble");
}

EventProb ratio(const PadicInt& num, const PadicInt& den) {
    EventProb r{num, den, std::nullopt};
    if (den.invertible()) r.value = divide(num, den);
    return r;
}

}  // namespace

PadicInt event_volume(const Ensemble& s, const Event& a) {
    check_members(s, a);
    PadicInt n = PadicInt::from_integer(s.p(), s.K(), BigInt(static_cast<unsigned long>(a.ids.size())));
    return a.complement ? sub(s.volume(), n) : n;
}

EventProb event_prob(const Ensemble& s, const Event& a) { return ratio(event_volume(s, a), s.volume()); }

bool subset_of(const Event& b, const Event& a) {
    auto includes = [](const std::set<std::string>& big, const std::set<std::string>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    if (!a.complement) return !b.complement && includes(a.ids, b.ids);
    if (b.complement) return includes(b.ids, a.ids);
    return std::none_of(b.ids.begin(), b.ids.end(), [&](const std::string& id) { return a.ids.count(id) != 0; });
}

EventProb bayes(const Ensemble& s, const Event& a, const Event& b) {
    if (!subset_of(b, a)) throw DomainError("conditioning needs B inside A");
    return ratio(event_volume(s, b), event_volume(s, a));
}

PadicInt formula_prob(const MatrixLogic& logic, const Formula& f, const Valuation& v) {
    if (logic.domain.kind != DomainKind::Padic || logic.id.rfind("padic-luk", 0) != 0)
        throw DomainError("formula probability needs the p-adic Łukasiewicz matrix");
    return neg(as<PadicInt>(eval(logic, f, v)));
}

const char* measure_name(Measure m) {
    switch (m) {
    case Measure::Zero: return "0";
    case Measure::One: return "1";
    case Measure::Undecided: return "undecided";
    }
    return "?";
}

Measure hyper_measure(unsigned W, const std::set<unsigned>& a, unsigned tau) {
    if (W <= 3 * tau) throw DomainError("window must exceed 3*tau");
    for (unsigned i : a)
        if (i >= W) throw DomainError("index " + std::to_string(i) + " outside the window");
    if (W - a.size() <= tau) return Measure::One;
    if (a.size() <= tau) return Measure::Zero;
    return Measure::Undecided;
}

FuzzyOp fuzzy_op_from_name(std::string_view name) {
    if (name == "and" || name == "meet" || name == "cap") return FuzzyOp::Meet;
    if (name == "or" || name == "join" || name == "cup") return FuzzyOp::Join;
    if (name == "sum" || name == "plus" || name == "+") return FuzzyOp::Sum;
    if (name == "neg" || name == "not") return FuzzyOp::Neg;
    throw DomainError("unknown fuzzy op '" + std::string(name) + "'");
}

HyperValue fuzzy_op(FuzzyOp op, const HyperValue& a, const HyperValue& b) {
    switch (op) {
    case FuzzyOp::Meet: return hmin(a, b);
    case FuzzyOp::Join: return hmax(a, b);
    case FuzzyOp::Sum: return pointwise(a, b, [](const Rat& x, const Rat& y) { return Rat(x + y - x * y); });
    case FuzzyOp::Neg: return hyper_arith(HOp::OneMinus, a);
    }
    throw DomainError("unknown fuzzy op");
}

PadicInt fuzzy_op(FuzzyOp op, const PadicInt& a, const PadicInt& b) {
    switch (op) {
    case FuzzyOp::Meet: return pmin(a, b);
    case FuzzyOp::Join: return pmax(a, b);
    case FuzzyOp::Sum: return sub(add(a, b), pmin(a, b));
    case FuzzyOp::Neg: return sub(PadicInt::n_max(a.p(), a.K()), a);
    }
    throw DomainError("unknown fuzzy op");
}

bool crisp(const HyperValue& mu) {
    return mu.is_standard() && (mu.standard_value() == 0 || mu.standard_value() == 1);
}

bool crisp(const PadicInt& mu) {
    Rat n = norm(mu).value;
    return n == 0 || n == 1;
}

EnsembleFile parse_ensemble(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    unsigned p = 0, K = 0, lineno = 0;
    bool largest = false;
    std::map<unsigned, BigInt> floors;
    std::map<std::string, Event> events;
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw DomainError("ensemble line " + std::to_string(lineno) + ": " + why);
        };
        if (line == "largest") {
            largest = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("expected 'key: value'");
        std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
        try {
            if (key == "p") p = std::stoul(val);
            else if (key == "K") K = std::stoul(val);
            else if (key.rfind("floor ", 0) == 0) floors[std::stoul(key.substr(6))] = BigInt(val);
            else if (key.rfind("event ", 0) == 0) {
                Event e;
                if (val.rfind("not", 0) == 0) {
                    e.complement = true;
                    val = trim(val.substr(3));
                }
                std::istringstream ids(val);
                std::string id;
                while (std::getline(ids, id, ','))
                    if (!trim(id).empty()) e.ids.insert(trim(id));
                events[trim(key.substr(6))] = std::move(e);
            } else fail("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            fail("bad number in '" + line + "'");
        }
    }
    if (!p || !K) throw DomainError("ensemble file needs p and K");
    std::vector<BigInt> l;
    if (largest) {
        if (!floors.empty()) throw DomainError("'largest' cannot be combined with floor lines");
        return {Ensemble::largest(p, K), std::move(events)};
    }
    for (auto& [j, n] : floors) {
        if (j >= K) throw DomainError("floor index beyond K");
        if (l.size() <= j) l.resize(j + 1, 0);
        l[j] = n;
    }
    EnsembleFile out{Ensemble(p, K, std::move(l)), std::move(events)};
    for (auto& [name, e] : out.events) check_members(out.ensemble, e);
    return out;
}

}  // namespace mvl
