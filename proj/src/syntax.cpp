#include "mvl/syntax.hpp"

#include <cctype>
#include <set>

namespace mvl {

namespace {

struct ConnInfo {
    Conn c;
    const char* name;
    const char* token;
    int arity;
};

constexpr ConnInfo conn_table[] = {
    {Conn::NegL, "NegL", "~L", 1},     {Conn::NegG, "NegG", "~G", 1},
    {Conn::NegPi, "NegPi", "~Pi", 1},  {Conn::NegPost, "NegPost", "~Post", 1},
    {Conn::ImpL, "ImpL", "->L", 2},    {Conn::ImpG, "ImpG", "->G", 2},
    {Conn::ImpPi, "ImpPi", "->P", 2},  {Conn::ConjL, "ConjL", "&L", 2},
    {Conn::ConjPi, "ConjPi", "&P", 2}, {Conn::Meet, "Meet", "/\\", 2},
    {Conn::Join, "Join", "\\/", 2},    {Conn::Oplus, "Oplus", "(+)", 2},
    {Conn::Ominus, "Ominus", "(-)", 2}, {Conn::Iff, "Iff", "<->", 2},
    {Conn::Delta, "Delta", "Delta", 1},
};

const ConnInfo& info(Conn c) { return conn_table[static_cast<int>(c)]; }

// precedence levels used by the parser and the printer
enum Prec { PIff = 1, PImp = 2, POr = 3, PAnd = 4, PUnary = 5, PAtom = 6 };

int prec_of(Conn c) {
    switch (c) {
    case Conn::Iff: return PIff;
    case Conn::ImpL: case Conn::ImpG: case Conn::ImpPi: return PImp;
    case Conn::Join: case Conn::Oplus: return POr;
    case Conn::Meet: case Conn::ConjL: case Conn::ConjPi: case Conn::Ominus: return PAnd;
    default: return PUnary;
    }
}

int prec_of(const Formula& f) { return f->kind == Kind::Apply ? prec_of(f->conn) : PAtom; }

Formula make(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

int arity(Conn c) { return info(c).arity; }
const char* conn_name(Conn c) { return info(c).name; }
const char* conn_token(Conn c) { return info(c).token; }

std::optional<Conn> conn_from_name(std::string_view s) {
    for (const auto& ci : conn_table) {
        std::string_view name = ci.name;
        if (s == name || s == ci.token) return ci.c;
        if (s.size() == name.size() && std::tolower(static_cast<unsigned char>(name[0])) == s[0] &&
            s.substr(1) == name.substr(1))
            return ci.c;
    }
    return std::nullopt;
}

Formula var(std::string name) { return make({Kind::Var, std::move(name), 0, Conn::NegL, {}}); }
Formula meta(std::string name) { return make({Kind::Meta, std::move(name), 0, Conn::NegL, {}}); }
Formula falsum() {
    static const Formula f = make({Kind::Falsum, "", 0, Conn::NegL, {}});
    return f;
}
Formula verum() {
    static const Formula f = make({Kind::Verum, "", 0, Conn::NegL, {}});
    return f;
}
Formula graded(unsigned k) { return make({Kind::Graded, "", k, Conn::NegL, {}}); }

Formula apply(Conn c, std::vector<Formula> args) {
    if (static_cast<int>(args.size()) != arity(c))
        throw std::invalid_argument(std::string("wrong arity for ") + conn_name(c));
    Node n{Kind::Apply, "", 0, c, std::move(args)};
    return make(std::move(n));
}

Formula un(Conn c, Formula a) { return apply(c, {std::move(a)}); }
Formula bin(Conn c, Formula a, Formula b) { return apply(c, {std::move(a), std::move(b)}); }

Formula iterate_imp(Conn imp, const Formula& a, const Formula& b, unsigned k) {
    Formula r = b;
    for (unsigned i = 0; i < k; ++i) r = bin(imp, a, r);
    return r;
}

int compare(const Formula& a, const Formula& b) {
    if (a == b) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    switch (a->kind) {
    case Kind::Var:
    case Kind::Meta: return a->name.compare(b->name) < 0 ? -1 : (a->name == b->name ? 0 : 1);
    case Kind::Falsum:
    case Kind::Verum: return 0;
    case Kind::Graded: return a->level == b->level ? 0 : (a->level < b->level ? -1 : 1);
    case Kind::Apply:
        if (a->conn != b->conn) return a->conn < b->conn ? -1 : 1;
        for (size_t i = 0; i < a->args.size(); ++i)
            if (int c = compare(a->args[i], b->args[i])) return c;
        return 0;
    }
    return 0;
}

bool equal(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

// ---- printing ----

namespace {

void print_to(const Formula& f, std::string& out);

void print_child(const Formula& f, bool paren, std::string& out) {
    if (paren) out += '(';
    print_to(f, out);
    if (paren) out += ')';
}

void print_to(const Formula& f, std::string& out) {
    switch (f->kind) {
    case Kind::Var:
    case Kind::Meta: out += f->name; return;
    case Kind::Falsum: out += "bot"; return;
    case Kind::Verum: out += "top"; return;
    case Kind::Graded: out += '#' + std::to_string(f->level); return;
    case Kind::Apply: break;
    }
    int p = prec_of(f->conn);
    if (f->args.size() == 1) {
        out += conn_token(f->conn);
        out += ' ';
        print_child(f->args[0], prec_of(f->args[0]) < PUnary, out);
        return;
    }
    int lp = prec_of(f->args[0]), rp = prec_of(f->args[1]);
    // implication is right-associative, the other binary levels left-associative
    bool right_assoc = p == PImp;
    print_child(f->args[0], lp < p || (right_assoc && lp == p), out);
    out += ' ';
    out += conn_token(f->conn);
    out += ' ';
    print_child(f->args[1], rp < p || (!right_assoc && rp == p), out);
}

}  // namespace

std::string print(const Formula& f) {
    std::string out;
    print_to(f, out);
    return out;
}

// ---- parsing ----

ParseError::ParseError(const std::string& what, size_t offset)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

namespace {

enum class Tok { Ident, Bot, Top, Graded, LParen, RParen, Op, End };

struct Token {
    Tok kind;
    size_t offset;
    std::string text;
    Conn conn = Conn::NegL;
    unsigned level = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    auto starts = [&](std::string_view t) { return s.substr(i, t.size()) == t; };
    auto op = [&](Conn c, size_t len) {
        out.push_back({Tok::Op, i, std::string(s.substr(i, len)), c});
        i += len;
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (starts("<->")) op(Conn::Iff, 3);
        else if (starts("->")) {
            char k = i + 2 < s.size() ? s[i + 2] : '\0';
            if (k == 'L') op(Conn::ImpL, 3);
            else if (k == 'G') op(Conn::ImpG, 3);
            else if (k == 'P') op(Conn::ImpPi, 3);
            else throw ParseError("unknown connective", i);
        } else if (starts("\\/")) op(Conn::Join, 2);
        else if (starts("/\\")) op(Conn::Meet, 2);
        else if (starts("(+)")) op(Conn::Oplus, 3);
        else if (starts("(-)")) op(Conn::Ominus, 3);
        else if (c == '(') out.push_back({Tok::LParen, i++, "("});
        else if (c == ')') out.push_back({Tok::RParen, i++, ")"});
        else if (starts("&L")) op(Conn::ConjL, 2);
        else if (starts("&P")) op(Conn::ConjPi, 2);
        else if (c == '&') throw ParseError("unknown connective", i);
        else if (starts("~Post")) op(Conn::NegPost, 5);
        else if (starts("~Pi")) op(Conn::NegPi, 3);
        else if (starts("~L")) op(Conn::NegL, 2);
        else if (starts("~G")) op(Conn::NegG, 2);
        else if (c == '~') throw ParseError("unknown connective", i);
        else if (c == '#') {
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) throw ParseError("expected digits after '#'", i);
            Token t{Tok::Graded, i, std::string(s.substr(i, j - i))};
            t.level = static_cast<unsigned>(std::stoul(std::string(s.substr(i + 1, j - i - 1))));
            out.push_back(t);
            i = j;
        } else if (ident_start(c)) {
            size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            std::string w(s.substr(i, j - i));
            if (w == "Delta") op(Conn::Delta, 5);
            else {
                Tok k = w == "bot" ? Tok::Bot : w == "top" ? Tok::Top : Tok::Ident;
                out.push_back({k, i, w});
                i = j;
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Tok::End, s.size(), ""});
    return out;
}

class Parser {
public:
    Parser(std::string_view s, bool schema) : toks_(lex(s)), schema_(schema) {}

    Formula run() {
        Formula f = iff();
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
        return f;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    bool schema_;

    const Token& peek() const { return toks_[pos_]; }
    bool peek_op(int level) const {
        return peek().kind == Tok::Op && arity(peek().conn) == 2 && prec_of(peek().conn) == level;
    }

    Formula iff() {
        Formula f = imp();
        while (peek_op(PIff)) {
            ++pos_;
            f = bin(Conn::Iff, f, imp());
        }
        return f;
    }

    Formula imp() {
        Formula f = disj();
        if (peek_op(PImp)) {
            Conn c = toks_[pos_++].conn;
            return bin(c, f, imp());
        }
        return f;
    }

    Formula disj() {
        Formula f = conj();
        while (peek_op(POr)) {
            Conn c = toks_[pos_++].conn;
            f = bin(c, f, conj());
        }
        return f;
    }

    Formula conj() {
        Formula f = unary();
        while (peek_op(PAnd)) {
            Conn c = toks_[pos_++].conn;
            f = bin(c, f, unary());
        }
        return f;
    }

    Formula unary() {
        if (peek().kind == Tok::Op && arity(peek().conn) == 1) {
            Conn c = toks_[pos_++].conn;
            return un(c, unary());
        }
        return atom();
    }

    Formula atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Ident:
            ++pos_;
            if (schema_ && std::isupper(static_cast<unsigned char>(t.text[0]))) return meta(t.text);
            return var(t.text);
        case Tok::Bot: ++pos_; return falsum();
        case Tok::Top: ++pos_; return verum();
        case Tok::Graded: ++pos_; return graded(t.level);
        case Tok::LParen: {
            ++pos_;
            Formula f = iff();
            if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().offset);
            ++pos_;
            return f;
        }
        case Tok::End: throw ParseError("unexpected end of input", t.offset);
        default: throw ParseError("unexpected '" + t.text + "'", t.offset);
        }
    }
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text, false).run(); }
Formula parse_schema(std::string_view text) { return Parser(text, true).run(); }

// ---- schemata ----

bool match_into(const Formula& s, const Formula& f, Assignment& sigma) {
    if (s->kind == Kind::Meta) {
        auto [it, fresh] = sigma.emplace(s->name, f);
        return fresh || equal(it->second, f);
    }
    if (s->kind != f->kind) return false;
    switch (s->kind) {
    case Kind::Var: return s->name == f->name;
    case Kind::Graded: return s->level == f->level;
    case Kind::Apply:
        if (s->conn != f->conn) return false;
        for (size_t i = 0; i < s->args.size(); ++i)
            if (!match_into(s->args[i], f->args[i], sigma)) return false;
        return true;
    default: return true;
    }
}

std::optional<Assignment> match_schema(const Formula& s, const Formula& f) {
    Assignment sigma;
    if (!match_into(s, f, sigma)) return std::nullopt;
    return sigma;
}

Formula substitute(const Formula& s, const Assignment& sigma) {
    switch (s->kind) {
    case Kind::Meta: {
        auto it = sigma.find(s->name);
        if (it == sigma.end()) throw std::invalid_argument("missing binding for metavariable " + s->name);
        return it->second;
    }
    case Kind::Apply: {
        std::vector<Formula> args;
        bool same = true;
        for (const auto& a : s->args) {
            args.push_back(substitute(a, sigma));
            same = same && args.back() == a;
        }
        return same ? s : apply(s->conn, std::move(args));
    }
    default: return s;
    }
}

namespace {

void collect(const Formula& f, Kind k, std::set<std::string>& out) {
    if (f->kind == k) out.insert(f->name);
    for (const auto& a : f->args) collect(a, k, out);
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
    std::set<std::string> s;
    collect(f, Kind::Var, s);
    return {s.begin(), s.end()};
}

std::vector<std::string> metavariables(const Formula& f) {
    std::set<std::string> s;
    collect(f, Kind::Meta, s);
    return {s.begin(), s.end()};
}

size_t connective_count(const Formula& f) {
    size_t n = f->kind == Kind::Apply ? 1 : 0;
    for (const auto& a : f->args) n += connective_count(a);
    return n;
}

bool contains_meta(const Formula& f) {
    if (f->kind == Kind::Meta) return true;
    for (const auto& a : f->args)
        if (contains_meta(a)) return true;
    return false;
}

}  // namespace mvl
