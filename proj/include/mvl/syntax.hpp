#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

enum class Conn {
    NegL, NegG, NegPi, NegPost,
    ImpL, ImpG, ImpPi,
    ConjL, ConjPi, Meet, Join, Oplus, Ominus, Iff,
    Delta
};

inline constexpr Conn all_conns[] = {
    Conn::NegL, Conn::NegG, Conn::NegPi, Conn::NegPost, Conn::ImpL, Conn::ImpG, Conn::ImpPi,
    Conn::ConjL, Conn::ConjPi, Conn::Meet, Conn::Join, Conn::Oplus, Conn::Ominus, Conn::Iff,
    Conn::Delta};

int arity(Conn c);
const char* conn_name(Conn c);   // tag, e.g. "ImpL"
const char* conn_token(Conn c);  // surface syntax, e.g. "->L"
// Accepts the tag ("ImpL"), lowercase-initial tag ("impL") or the token ("->L").
std::optional<Conn> conn_from_name(std::string_view s);

enum class Kind { Var, Meta, Falsum, Verum, Graded, Apply };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    std::string name;  // Var, Meta
    unsigned level = 0;  // Graded
    Conn conn = Conn::NegL;  // Apply
    std::vector<Formula> args;
};

Formula var(std::string name);
Formula meta(std::string name);
Formula falsum();
Formula verum();
Formula graded(unsigned k);
Formula apply(Conn c, std::vector<Formula> args);
Formula un(Conn c, Formula a);
Formula bin(Conn c, Formula a, Formula b);

// a ->^k b, i.e. a -> (a -> ... (a -> b)); k = 0 gives b.
Formula iterate_imp(Conn imp, const Formula& a, const Formula& b, unsigned k);

int compare(const Formula& a, const Formula& b);
bool equal(const Formula& a, const Formula& b);
struct FormulaLess {
    bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};

std::string print(const Formula& f);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t offset);
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

Formula parse(std::string_view text);
// Identifiers starting with an uppercase letter become metavariables.
Formula parse_schema(std::string_view text);

using Assignment = std::map<std::string, Formula>;

std::optional<Assignment> match_schema(const Formula& s, const Formula& f);
// Extends sigma; on failure sigma may hold partial bindings.
bool match_into(const Formula& s, const Formula& f, Assignment& sigma);
Formula substitute(const Formula& s, const Assignment& sigma);

std::vector<std::string> variables(const Formula& f);
std::vector<std::string> metavariables(const Formula& f);
size_t connective_count(const Formula& f);
bool contains_meta(const Formula& f);

}  // namespace mvl
