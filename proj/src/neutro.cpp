#include "mvl/neutro.hpp"

#include <array>

namespace mvl {

namespace {

Rat rmin(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rmax(const Rat& a, const Rat& b) { return a < b ? b : a; }

bool in_unit(const Rat& q) { return q >= 0 && q <= 1; }

Interval empty_as_zero(const std::optional<Interval>& i) { return i ? *i : Interval::point(0); }

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string_view::npos ? std::string() : std::string(s.substr(a, b - a + 1));
}

std::string strip_angle(std::string_view text) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '<' || s.back() != '>')
        throw DomainError("expected <...> triple, got '" + std::string(text) + "'");
    return s.substr(1, s.size() - 2);
}

// Splits on sep outside of brackets.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) out.emplace_back();
        else out.back() += c;
    }
    for (auto& p : out) p = trim(p);
    return out;
}

}  // namespace

// ---- vague sets ----

VagueValue VagueValue::make(const Rat& t, const Rat& f) {
    if (!in_unit(t) || !in_unit(f) || t + f > 1)
        throw DomainError("vague value needs t, f in [0,1] with t + f <= 1");
    VagueValue v{t, f};
    v.t.canonicalize();
    v.f.canonicalize();
    return v;
}

VagueValue vague_op(VagueOp op, const VagueValue& x, const VagueValue& y) {
    switch (op) {
    case VagueOp::Neg: return {x.f, x.t};
    case VagueOp::And: return {rmin(x.t, y.t), rmax(x.f, y.f)};
    case VagueOp::Or: return {rmax(x.t, y.t), rmin(x.f, y.f)};
    }
    throw DomainError("unknown vague op");
}

VagueValue vague_op(VagueOp op, const VagueValue& x) {
    if (op != VagueOp::Neg) throw DomainError("binary vague op needs two arguments");
    return vague_op(op, x, x);
}

// ---- interval arithmetic ----

Interval interval_combine(IntervalOp op, const Interval& a, const Interval& b) {
    switch (op) {
    case IntervalOp::Add: return {a.lo + b.lo, a.hi + b.hi};
    case IntervalOp::Sub: return {a.lo - b.hi, a.hi - b.lo};
    case IntervalOp::Mul: {
        std::array<Rat, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        Interval r{p[0], p[0]};
        for (const auto& q : p) {
            r.lo = rmin(r.lo, q);
            r.hi = rmax(r.hi, q);
        }
        return r;
    }
    case IntervalOp::Min: return {rmin(a.lo, b.lo), rmin(a.hi, b.hi)};
    case IntervalOp::Max: return {rmax(a.lo, b.lo), rmax(a.hi, b.hi)};
    case IntervalOp::ScalarAdd:
        if (!a.degenerate()) throw DomainError("scalar+ needs a degenerate left operand");
        return {a.lo + b.lo, a.lo + b.hi};
    }
    throw DomainError("unknown interval op");
}

Interval one_minus(const Interval& a) { return {1 - a.hi, 1 - a.lo}; }

Interval clip_unit(const Interval& a) {
    Interval r{rmax(a.lo, 0), rmin(a.hi, 1)};
    if (r.lo > r.hi) r = r.hi < 0 ? Interval::point(0) : Interval::point(1);
    return r;
}

NeutroInterval NeutroInterval::make(Interval t, std::optional<Interval> i, Interval f) {
    auto check = [](const Interval& x, const char* name) {
        if (x.lo > x.hi || !in_unit(x.lo) || !in_unit(x.hi))
            throw DomainError(std::string(name) + " must be an interval inside [0,1]");
    };
    check(t, "t");
    if (i) check(*i, "i");
    check(f, "f");
    for (Interval* x : {&t, &f}) {
        x->lo.canonicalize();
        x->hi.canonicalize();
    }
    if (i) {
        i->lo.canonicalize();
        i->hi.canonicalize();
    }
    return {std::move(t), std::move(i), std::move(f)};
}

NeutroInterval parse_neutro(std::string_view text) {
    auto parts = split_top(strip_angle(text), '|');
    if (parts.size() != 3) throw DomainError("neutrosophic triple needs three components");
    auto interval = [](const std::string& s) {
        auto ends = split_top(s, ',');
        if (ends.size() == 1) return Interval::point(parse_rat(ends[0]));
        if (ends.size() != 2) throw DomainError("bad interval '" + s + "'");
        return Interval{parse_rat(ends[0]), parse_rat(ends[1])};
    };
    std::optional<Interval> i;
    if (parts[1] != "empty" && parts[1] != "∅" && !parts[1].empty()) i = interval(parts[1]);
    return NeutroInterval::make(interval(parts[0]), i, interval(parts[2]));
}

std::string neutro_str(const NeutroInterval& a) {
    auto iv = [](const Interval& x) { return x.lo.get_str() + "," + x.hi.get_str(); };
    return "<" + iv(a.t) + " | " + (a.i ? iv(*a.i) : std::string("empty")) + " | " + iv(a.f) + ">";
}

// ---- set-level Ł/G/Π operations ----

namespace {

// Hull of {x ->G y : x in a, y in b}.
Interval godel_imp_hull(const Interval& a, const Interval& b) {
    bool has_one = a.lo <= b.hi;
    bool has_lower = a.hi > b.lo;
    Rat lo = has_lower ? b.lo : Rat(1);
    Rat hi = has_one ? Rat(1) : rmin(b.hi, a.hi);
    return {lo, hi};
}

// Hull of {x ->Π y : x in a, y in b}.
Interval prod_imp_hull(const Interval& a, const Interval& b) {
    if (a.lo <= 0) throw DomainError("product implication needs the antecedent interval bounded away from 0");
    bool has_one = a.lo <= b.hi;
    bool has_lower = a.hi > b.lo;
    Rat lo = has_lower ? Rat(b.lo / a.hi) : Rat(1);
    Rat hi = has_one ? Rat(1) : Rat(b.hi / a.lo);
    return {lo, hi};
}

// Image of x -> (x == 0 ? 1 : 0), shared by the G and Π negations.
Interval zero_test_hull(const Interval& a) {
    if (a.lo == 0 && a.hi == 0) return Interval::point(1);
    if (a.lo == 0) return {0, 1};
    return Interval::point(0);
}

Interval luk_imp_interval(const Interval& a, const Interval& b) {
    Interval one = Interval::point(1);
    Interval m = interval_combine(IntervalOp::Max, a, b);
    return clip_unit(interval_combine(IntervalOp::Add, interval_combine(IntervalOp::Sub, one, m), b));
}

Interval luk_conj_interval(const Interval& a, const Interval& b) {
    Interval one = Interval::point(1);
    Interval m = interval_combine(IntervalOp::Max, a, one_minus(b));
    return clip_unit(interval_combine(IntervalOp::Sub, interval_combine(IntervalOp::Add, m, b), one));
}

template <class F>
NeutroInterval per_component(const NeutroInterval& a, const NeutroInterval& b, F f) {
    return NeutroInterval::make(f(a.t, b.t), f(empty_as_zero(a.i), empty_as_zero(b.i)), f(a.f, b.f));
}

}  // namespace

NeutroInterval neutro_complement(Flavor fl, const NeutroInterval& a) {
    auto f = [fl](const Interval& x) { return fl == Flavor::L ? one_minus(x) : zero_test_hull(x); };
    return NeutroInterval::make(f(a.t), f(empty_as_zero(a.i)), f(a.f));
}

NeutroInterval neutro_implication(Flavor fl, const NeutroInterval& a, const NeutroInterval& b) {
    switch (fl) {
    case Flavor::L: return per_component(a, b, luk_imp_interval);
    case Flavor::G: return per_component(a, b, godel_imp_hull);
    case Flavor::Pi: return per_component(a, b, prod_imp_hull);
    }
    throw DomainError("unknown flavor");
}

NeutroInterval neutro_intersection(Flavor fl, const NeutroInterval& a, const NeutroInterval& b) {
    switch (fl) {
    case Flavor::L: return per_component(a, b, luk_conj_interval);
    case Flavor::G:
        return per_component(a, b, [](const Interval& x, const Interval& y) { return interval_combine(IntervalOp::Min, x, y); });
    case Flavor::Pi:
        return per_component(a, b, [](const Interval& x, const Interval& y) { return interval_combine(IntervalOp::Mul, x, y); });
    }
    throw DomainError("unknown flavor");
}

// ---- p-adic point variants ----

namespace {

PadicInt top_of(const PadicInt& x) { return PadicInt::n_max(x.p(), x.K()); }

PadicInt padic_zero_test(const PadicInt& x) { return x.is_zero() ? top_of(x) : PadicInt::zero(x.p(), x.K()); }

PadicInt padic_godel_imp(const PadicInt& x, const PadicInt& y) {
    switch (leq(x, y)) {
    case Order::LE:
    case Order::EQ: return top_of(x);
    case Order::GE: return y;
    default: throw DomainError("Gödel implication undefined on incomparable p-adic values");
    }
}

PadicInt padic_prod_imp(const PadicInt& x, const PadicInt& y) {
    Order o = leq(x, y);
    if (o == Order::LE || o == Order::EQ) return top_of(x);
    return floor_div(y, x);
}

template <class F>
PadicTriple per_component(const PadicTriple& a, const PadicTriple& b, F f) {
    return {f(a.t, b.t), f(a.i, b.i), f(a.f, b.f)};
}

}  // namespace

PadicTriple neutro_complement(Flavor fl, const PadicTriple& a) {
    auto f = [fl](const PadicInt& x) { return fl == Flavor::L ? sub(top_of(x), x) : padic_zero_test(x); };
    return {f(a.t), f(a.i), f(a.f)};
}

PadicTriple neutro_implication(Flavor fl, const PadicTriple& a, const PadicTriple& b) {
    switch (fl) {
    case Flavor::L:
        return per_component(a, b, [](const PadicInt& x, const PadicInt& y) { return add(sub(top_of(x), pmax(x, y)), y); });
    case Flavor::G: return per_component(a, b, padic_godel_imp);
    case Flavor::Pi: return per_component(a, b, padic_prod_imp);
    }
    throw DomainError("unknown flavor");
}

PadicTriple neutro_intersection(Flavor fl, const PadicTriple& a, const PadicTriple& b) {
    switch (fl) {
    case Flavor::L:
        return per_component(a, b, [](const PadicInt& x, const PadicInt& y) {
            PadicInt top = top_of(x);
            return sub(add(pmax(x, sub(top, y)), y), top);
        });
    case Flavor::G: return per_component(a, b, pmin);
    case Flavor::Pi: return per_component(a, b, mul);
    }
    throw DomainError("unknown flavor");
}

// ---- classification ----

// First match in the printed order; every special case needs i = ∅.
std::string classify_interval_neutro(const NeutroInterval& a) {
    if (a.i) return "general";
    const Interval &t = a.t, &f = a.f;
    bool points = t.degenerate() && f.degenerate();
    auto crisp = [](const Rat& q) { return q == 0 || q == 1; };
    if (points && crisp(t.lo) && crisp(f.lo) && t.hi + f.hi == 1) return "classical";
    if (points && t.hi + f.hi == 1) return "fuzzy";
    if (t.hi + f.lo == 1 && t.lo + f.hi == 1) return "interval-fuzzy";
    if (points && t.hi + f.hi <= 1) return "intuitionistic";
    if (t.hi + f.lo <= 1) return "interval-intuitionistic";
    if (points && t.hi + f.hi > 1) return "paraconsistent";
    if (t.hi + f.lo > 1) return "interval-paraconsistent";
    return "general";
}

// ---- INL ----

HyperTriple inl_apply(InlConn c, const HyperTriple& a, const HyperTriple& b) {
    switch (c) {
    case InlConn::Neg: return {a.f, hyper_arith(HOp::OneMinus, a.i), a.t};
    case InlConn::Imp:
        return {hyper_arith(HOp::ImpL, a.t, b.t), hyper_arith(HOp::Monus, b.i, a.i), hyper_arith(HOp::Monus, b.f, a.f)};
    case InlConn::And: return {hmin(a.t, b.t), hmax(a.i, b.i), hmax(a.f, b.f)};
    case InlConn::Or: return {hmax(a.t, b.t), hmin(a.i, b.i), hmin(a.f, b.f)};
    }
    throw DomainError("unknown INL connective");
}

HyperTriple inl_apply(InlConn c, const HyperTriple& a) {
    if (c != InlConn::Neg) throw DomainError("binary INL connective needs two arguments");
    return inl_apply(c, a, a);
}

// 1 - i is read as N_max - i, like every other p-adic constant 1.
PadicTriple inl_apply(InlConn c, const PadicTriple& a, const PadicTriple& b) {
    const PadicInt top = top_of(a.t);
    switch (c) {
    case InlConn::Neg: return {a.f, sub(top, a.i), a.t};
    case InlConn::Imp: {
        PadicInt zero = PadicInt::zero(top.p(), top.K());
        return {add(sub(top, pmax(a.t, b.t)), b.t), pmax(zero, sub(b.i, a.i)), pmax(zero, sub(b.f, a.f))};
    }
    case InlConn::And: return {pmin(a.t, b.t), pmax(a.i, b.i), pmax(a.f, b.f)};
    case InlConn::Or: return {pmax(a.t, b.t), pmin(a.i, b.i), pmin(a.f, b.f)};
    }
    throw DomainError("unknown INL connective");
}

PadicTriple inl_apply(InlConn c, const PadicTriple& a) {
    if (c != InlConn::Neg) throw DomainError("binary INL connective needs two arguments");
    return inl_apply(c, a, a);
}

HyperTriple inl_iff(const HyperTriple& a, const HyperTriple& b) {
    return inl_apply(InlConn::And, inl_apply(InlConn::Imp, a, b), inl_apply(InlConn::Imp, b, a));
}

PadicTriple inl_iff(const PadicTriple& a, const PadicTriple& b) {
    return inl_apply(InlConn::And, inl_apply(InlConn::Imp, a, b), inl_apply(InlConn::Imp, b, a));
}

bool inl_designated(const HyperTriple& a) {
    return a.t == HyperValue::standard(1) && a.i == HyperValue::standard(0) && a.f == HyperValue::standard(0);
}

bool inl_designated(const PadicTriple& a) {
    return a.t == top_of(a.t) && a.i.is_zero() && a.f.is_zero();
}

HyperTriple parse_hyper_triple(std::string_view text) {
    auto parts = split_top(strip_angle(text), ',');
    if (parts.size() != 3) throw DomainError("INL triple needs three components");
    return {HyperValue::parse(parts[0]), HyperValue::parse(parts[1]), HyperValue::parse(parts[2])};
}

PadicTriple parse_padic_triple(std::string_view text, unsigned p, unsigned K) {
    std::string body = strip_angle(text);
    bool literal = body.find(':') != std::string::npos;
    auto parts = split_top(body, literal ? ';' : ',');
    if (parts.size() != 3) throw DomainError("INL triple needs three components (use ';' between p-adic literals)");
    auto comp = [&](const std::string& s) {
        if (literal) return PadicInt::parse(s);
        if (!p) throw DomainError("p-adic INL components need p:K:digits literals");
        Rat q = parse_rat(s);
        return PadicInt::from_rational(p, K, q.get_num(), q.get_den());
    };
    return {comp(parts[0]), comp(parts[1]), comp(parts[2])};
}

}  // namespace mvl
