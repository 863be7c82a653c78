#include "mvl/matrices.hpp"

#include "mvl/neutro.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace mvl {

namespace {

Rat rmin(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rmax(const Rat& a, const Rat& b) { return a < b ? b : a; }

template <class T, class F>
TruthFn unary(F f) {
    return [f](const std::vector<Value>& a) -> Value { return f(as<T>(a[0])); };
}

template <class T, class F>
TruthFn binary(F f) {
    return [f](const std::vector<Value>& a) -> Value { return f(as<T>(a[0]), as<T>(a[1])); };
}

// x <-> y read as (x -> y) /\ (y -> x) with the logic's own operations
void add_iff(MatrixLogic& m, Conn imp) {
    TruthFn i = m.interp.at(imp), meet = m.interp.at(Conn::Meet);
    m.interp[Conn::Iff] = [i, meet](const std::vector<Value>& a) {
        return meet({i({a[0], a[1]}), i({a[1], a[0]})});
    };
}

unsigned parse_uint(std::string_view s, const char* what) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw DomainError(std::string("bad ") + what + " '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        auto k = s.find(sep);
        out.push_back(s.substr(0, k));
        if (k == std::string_view::npos) break;
        s.remove_prefix(k + 1);
    }
    return out;
}

}  // namespace

// ---- scalar truth functions ----

namespace unit {

Rat luk_neg(const Rat& x) { return 1 - x; }
Rat luk_imp(const Rat& x, const Rat& y) { return rmin(1, 1 - x + y); }
Rat luk_conj(const Rat& x, const Rat& y) { return rmax(0, x + y - 1); }
Rat godel_imp(const Rat& x, const Rat& y) { return x <= y ? Rat(1) : y; }
Rat godel_neg(const Rat& x) { return godel_imp(x, 0); }
Rat prod_imp(const Rat& x, const Rat& y) { return x <= y ? Rat(1) : Rat(y / x); }

// n(1-x)/(n+x); the printed denominator 1+x leaves [0,1] at x = 0.
Rat hl_neg(unsigned n, const Rat& x) { return n * (1 - x) / (n + x); }
Rat hl_imp(unsigned n, const Rat& x, const Rat& y) {
    if (x <= y) return 1;
    Rat d = x - y;
    return n * (1 - d) / (n + d);
}
Rat hl_or(unsigned n, const Rat& x, const Rat& y) { return hl_imp(n, hl_imp(n, x, y), y); }
Rat hl_and(unsigned n, const Rat& x, const Rat& y) { return hl_neg(n, hl_or(n, hl_neg(n, x), hl_neg(n, y))); }

Rat hg_neg(unsigned n, const Rat& x) {
    Rat base = (1 - x) / (1 + x), r = 1;
    for (unsigned i = 0; i < n; ++i) r *= base;
    return r;
}
Rat hg_imp(unsigned n, const Rat& x, const Rat& y) { return x <= y ? Rat(1) : Rat((n + 1) * y / (n + x)); }

Rat par_neg(unsigned n, const Rat& x) { return (1 - x * x) / n; }
Rat par_imp(unsigned n, const Rat& x, const Rat& y) {
    Rat x2 = x * x;
    return x2 <= y ? Rat(1) : Rat((1 - x2) / n + y);
}

Rat pq_neg(unsigned n, const Rat& x) { return (1 - x * x) / (1 + Rat(n, n + 1) * x); }
Rat pq_imp(unsigned n, const Rat& x, const Rat& y) { return rmin(1, pq_neg(n, x) + y); }
Rat pq_or(unsigned n, const Rat& x, const Rat& y) { return pq_imp(n, pq_imp(n, x, y), y); }
Rat pq_and(unsigned n, const Rat& x, const Rat& y) { return pq_neg(n, pq_or(n, pq_neg(n, x), pq_neg(n, y))); }

}  // namespace unit

// ---- MatrixLogic ----

Value MatrixLogic::apply(Conn c, const std::vector<Value>& args) const {
    auto it = interp.find(c);
    if (it == interp.end())
        throw DomainError(std::string("connective ") + conn_name(c) + " is not interpreted in " + id);
    return it->second(args);
}

Value MatrixLogic::constant(const Node& n) const {
    switch (n.kind) {
    case Kind::Falsum: return bottom;
    case Kind::Verum: return top;
    case Kind::Graded:
        if (domain.kind != DomainKind::Finite || n.level >= domain.n)
            throw DomainError("graded constant #" + std::to_string(n.level) + " undefined in " + id);
        return Level(n.level);
    default: throw DomainError("not a constant");
    }
}

std::vector<Value> MatrixLogic::finite_values() const {
    if (domain.kind != DomainKind::Finite) throw DomainError(id + " is not a finite logic");
    std::vector<Value> out;
    for (Level l = 0; l < domain.n; ++l) out.emplace_back(l);
    return out;
}

Value MatrixLogic::parse_value(std::string_view text) const {
    std::string s(text);
    switch (domain.kind) {
    case DomainKind::Finite: {
        unsigned v = parse_uint(text, "truth value");
        if (v >= domain.n) throw DomainError("value " + s + " outside 0.." + std::to_string(domain.n - 1));
        return Level(v);
    }
    case DomainKind::UnitRational: {
        Rat q = parse_rat(s);
        if (q < 0 || q > 1) throw DomainError("value " + s + " outside [0,1]");
        return q;
    }
    case DomainKind::Padic: {
        if (s.find(':') != std::string::npos) {
            PadicInt x = PadicInt::parse(s);
            if (x.p() != domain.p || x.K() != domain.K) throw DomainError("precision mismatch for " + s);
            return x;
        }
        Rat q = parse_rat(s);
        return PadicInt::from_rational(domain.p, domain.K, q.get_num(), q.get_den());
    }
    case DomainKind::Hyper: {
        HyperValue h = HyperValue::parse(s);
        if (!h.is_standard() && h.width() != domain.W)
            throw DomainError("window size mismatch: expected " + std::to_string(domain.W));
        return h;
    }
    case DomainKind::InlHyper: return parse_hyper_triple(s);
    case DomainKind::InlPadic: {
        PadicTriple t = parse_padic_triple(s, domain.p, domain.K);
        if (t.t.p() != domain.p || t.t.K() != domain.K) throw DomainError("precision mismatch for " + s);
        return t;
    }
    }
    throw DomainError("unknown domain");
}

// ---- registry ----

LogicPtr luk(unsigned n) {
    if (n < 2) throw DomainError("luk:n needs n >= 2");
    auto m = std::make_shared<MatrixLogic>();
    m->id = n == 3 ? "luk3" : "luk:" + std::to_string(n);
    m->domain = {DomainKind::Finite, n};
    const Level top = n - 1;
    m->interp[Conn::NegL] = unary<Level>([top](Level x) { return Level(top - x); });
    m->interp[Conn::ImpL] = binary<Level>([top](Level x, Level y) { return std::min(top, top - x + y); });
    m->interp[Conn::Join] = binary<Level>([](Level x, Level y) { return std::max(x, y); });
    m->interp[Conn::Meet] = binary<Level>([](Level x, Level y) { return std::min(x, y); });
    m->interp[Conn::ConjL] = binary<Level>([top](Level x, Level y) { return x + y > top ? Level(x + y - top) : Level(0); });
    m->interp[Conn::Oplus] = binary<Level>([top](Level x, Level y) { return std::min(top, x + y); });
    m->interp[Conn::Ominus] = binary<Level>([](Level x, Level y) { return x > y ? Level(x - y) : Level(0); });
    m->interp[Conn::Delta] = unary<Level>([top](Level x) { return x == top ? top : Level(0); });
    add_iff(*m, Conn::ImpL);
    m->designated = [top](const Value& v) { return as<Level>(v) == top; };
    m->bottom = Level(0);
    m->top = top;
    return m;
}

// post:n has values 0..n-1 and the cyclic negation x+1 mod n.
LogicPtr post(unsigned n) {
    if (n < 2) throw DomainError("post:n needs n >= 2");
    auto m = std::make_shared<MatrixLogic>();
    m->id = "post:" + std::to_string(n);
    m->domain = {DomainKind::Finite, n};
    const Level top = n - 1;
    m->interp[Conn::NegPost] = unary<Level>([n](Level x) { return Level((x + 1) % n); });
    m->interp[Conn::Join] = binary<Level>([](Level x, Level y) { return std::max(x, y); });
    m->designated = [top](const Value& v) { return as<Level>(v) == top; };
    m->bottom = Level(0);
    m->top = top;
    return m;
}

namespace {

std::shared_ptr<MatrixLogic> unit_logic(std::string id) {
    auto m = std::make_shared<MatrixLogic>();
    m->id = std::move(id);
    m->domain = {DomainKind::UnitRational};
    m->designated = [](const Value& v) { return as<Rat>(v) == 1; };
    m->bottom = Rat(0);
    m->top = Rat(1);
    m->interp[Conn::Delta] = unary<Rat>([](const Rat& x) { return x == 1 ? Rat(1) : Rat(0); });
    return m;
}

}  // namespace

LogicPtr luk_inf() {
    auto m = unit_logic("luk-inf");
    m->interp[Conn::NegL] = unary<Rat>(unit::luk_neg);
    m->interp[Conn::ImpL] = binary<Rat>(unit::luk_imp);
    m->interp[Conn::ConjL] = binary<Rat>(unit::luk_conj);
    m->interp[Conn::Join] = binary<Rat>(rmax);
    m->interp[Conn::Meet] = binary<Rat>(rmin);
    m->interp[Conn::Oplus] = binary<Rat>([](const Rat& x, const Rat& y) { return rmin(1, x + y); });
    m->interp[Conn::Ominus] = binary<Rat>([](const Rat& x, const Rat& y) { return rmax(0, x - y); });
    add_iff(*m, Conn::ImpL);
    return m;
}

LogicPtr godel() {
    auto m = unit_logic("godel");
    m->interp[Conn::NegG] = unary<Rat>(unit::godel_neg);
    m->interp[Conn::ImpG] = binary<Rat>(unit::godel_imp);
    m->interp[Conn::Join] = binary<Rat>(rmax);
    m->interp[Conn::Meet] = binary<Rat>(rmin);
    add_iff(*m, Conn::ImpG);
    return m;
}

LogicPtr product() {
    auto m = unit_logic("product");
    auto meet = [](const Rat& x, const Rat& y) { return Rat(x * unit::prod_imp(x, y)); };
    m->interp[Conn::NegPi] = unary<Rat>([](const Rat& x) { return unit::prod_imp(x, 0); });
    m->interp[Conn::ImpPi] = binary<Rat>(unit::prod_imp);
    m->interp[Conn::ConjPi] = binary<Rat>([](const Rat& x, const Rat& y) { return Rat(x * y); });
    m->interp[Conn::Meet] = binary<Rat>(meet);
    m->interp[Conn::Join] = binary<Rat>([meet](const Rat& x, const Rat& y) {
        using unit::prod_imp;
        return meet(prod_imp(prod_imp(x, y), y), prod_imp(prod_imp(y, x), x));
    });
    add_iff(*m, Conn::ImpPi);
    return m;
}

LogicPtr hyperbolic_luk(unsigned n) {
    if (n < 1) throw DomainError("hl:n needs n >= 1");
    auto m = unit_logic("hl:" + std::to_string(n));
    m->interp[Conn::NegL] = unary<Rat>([n](const Rat& x) { return unit::hl_neg(n, x); });
    m->interp[Conn::ImpL] = binary<Rat>([n](const Rat& x, const Rat& y) { return unit::hl_imp(n, x, y); });
    m->interp[Conn::Join] = binary<Rat>([n](const Rat& x, const Rat& y) { return unit::hl_or(n, x, y); });
    m->interp[Conn::Meet] = binary<Rat>([n](const Rat& x, const Rat& y) { return unit::hl_and(n, x, y); });
    add_iff(*m, Conn::ImpL);
    return m;
}

LogicPtr hyperbolic_godel(unsigned n) {
    if (n < 1) throw DomainError("hg:n needs n >= 1");
    auto m = unit_logic("hg:" + std::to_string(n));
    m->interp[Conn::NegG] = unary<Rat>([n](const Rat& x) { return unit::hg_neg(n, x); });
    m->interp[Conn::ImpG] = binary<Rat>([n](const Rat& x, const Rat& y) { return unit::hg_imp(n, x, y); });
    m->interp[Conn::Join] = binary<Rat>(rmax);
    m->interp[Conn::Meet] = binary<Rat>(rmin);
    add_iff(*m, Conn::ImpG);
    return m;
}

LogicPtr parabolic(unsigned n) {
    if (n < 1) throw DomainError("par:n needs n >= 1");
    auto m = unit_logic("par:" + std::to_string(n));
    auto imp = [n](const Rat& x, const Rat& y) { return unit::par_imp(n, x, y); };
    auto neg = [n](const Rat& x) { return unit::par_neg(n, x); };
    auto join = [imp](const Rat& x, const Rat& y) { return imp(imp(x, y), y); };
    m->interp[Conn::NegL] = unary<Rat>(neg);
    m->interp[Conn::ImpL] = binary<Rat>(imp);
    m->interp[Conn::Join] = binary<Rat>(join);
    m->interp[Conn::Meet] = binary<Rat>([neg, join](const Rat& x, const Rat& y) { return neg(join(neg(x), neg(y))); });
    add_iff(*m, Conn::ImpL);
    return m;
}

LogicPtr quasiparabolic(unsigned n) {
    if (n < 1) throw DomainError("pq:n needs n >= 1");
    auto m = unit_logic("pq:" + std::to_string(n));
    m->interp[Conn::NegL] = unary<Rat>([n](const Rat& x) { return unit::pq_neg(n, x); });
    m->interp[Conn::ImpL] = binary<Rat>([n](const Rat& x, const Rat& y) { return unit::pq_imp(n, x, y); });
    m->interp[Conn::Join] = binary<Rat>([n](const Rat& x, const Rat& y) { return unit::pq_or(n, x, y); });
    m->interp[Conn::Meet] = binary<Rat>([n](const Rat& x, const Rat& y) { return unit::pq_and(n, x, y); });
    add_iff(*m, Conn::ImpL);
    return m;
}

namespace {

std::shared_ptr<MatrixLogic> padic_logic(std::string family, unsigned p, unsigned K) {
    auto m = std::make_shared<MatrixLogic>();
    m->id = "padic-" + family + ":" + std::to_string(p) + ":" + std::to_string(K);
    m->domain = {DomainKind::Padic, 0, p, K};
    PadicInt top = PadicInt::n_max(p, K);
    m->designated = [top](const Value& v) { return as<PadicInt>(v) == top; };
    m->bottom = PadicInt::zero(p, K);
    m->top = top;
    m->interp[Conn::Join] = binary<PadicInt>(pmax);
    m->interp[Conn::Meet] = binary<PadicInt>(pmin);
    m->interp[Conn::Delta] = unary<PadicInt>([top](const PadicInt& x) {
        return x == top ? top : PadicInt::zero(top.p(), top.K());
    });
    return m;
}

}  // namespace

LogicPtr padic_luk(unsigned p, unsigned K) {
    auto m = padic_logic("luk", p, K);
    PadicInt top = PadicInt::n_max(p, K);
    auto neg = [top](const PadicInt& x) { return sub(top, x); };
    auto imp = [top](const PadicInt& x, const PadicInt& y) { return add(sub(top, pmax(x, y)), y); };
    auto conj = [neg, imp](const PadicInt& x, const PadicInt& y) { return neg(imp(x, neg(y))); };
    m->interp[Conn::NegL] = unary<PadicInt>(neg);
    m->interp[Conn::ImpL] = binary<PadicInt>(imp);
    m->interp[Conn::ConjL] = binary<PadicInt>(conj);
    m->interp[Conn::Oplus] = binary<PadicInt>([neg, imp](const PadicInt& x, const PadicInt& y) { return imp(neg(x), y); });
    m->interp[Conn::Ominus] = binary<PadicInt>([neg, conj](const PadicInt& x, const PadicInt& y) { return conj(x, neg(y)); });
    add_iff(*m, Conn::ImpL);
    return m;
}

LogicPtr padic_godel(unsigned p, unsigned K) {
    auto m = padic_logic("godel", p, K);
    PadicInt top = PadicInt::n_max(p, K);
    auto imp = [top](const PadicInt& x, const PadicInt& y) {
        switch (leq(x, y)) {
        case Order::LE:
        case Order::EQ: return top;
        case Order::GE: return y;
        default: throw DomainError("Gödel implication undefined on incomparable " + x.str() + " and " + y.str());
        }
    };
    m->interp[Conn::ImpG] = binary<PadicInt>(imp);
    m->interp[Conn::NegG] = unary<PadicInt>([imp](const PadicInt& x) { return imp(x, PadicInt::zero(x.p(), x.K())); });
    add_iff(*m, Conn::ImpG);
    return m;
}

LogicPtr padic_post(unsigned p, unsigned K) {
    auto m = padic_logic("post", p, K);
    m->interp.erase(Conn::Meet);
    m->interp.erase(Conn::Delta);
    m->interp[Conn::NegPost] = unary<PadicInt>(post_succ);
    return m;
}

LogicPtr padic_product(unsigned p, unsigned K) {
    auto m = padic_logic("product", p, K);
    PadicInt top = PadicInt::n_max(p, K);
    auto imp = [top](const PadicInt& x, const PadicInt& y) {
        Order o = leq(x, y);
        if (o == Order::LE || o == Order::EQ) return top;
        return floor_div(y, x);
    };
    m->interp[Conn::ImpPi] = binary<PadicInt>(imp);
    m->interp[Conn::NegPi] = unary<PadicInt>([top](const PadicInt& x) {
        return x.is_zero() ? top : PadicInt::zero(x.p(), x.K());
    });
    m->interp[Conn::ConjPi] = binary<PadicInt>(mul);
    add_iff(*m, Conn::ImpPi);
    return m;
}

namespace {

std::shared_ptr<MatrixLogic> hyper_logic(std::string family, unsigned W) {
    if (W < 2) throw DomainError("window size must be at least 2");
    auto m = std::make_shared<MatrixLogic>();
    m->id = "hyper-" + family + ":" + std::to_string(W);
    m->domain = {DomainKind::Hyper, 0, 0, 0, W};
    HyperValue one = HyperValue::standard(1), zero = HyperValue::standard(0);
    m->designated = [one](const Value& v) { return as<HyperValue>(v) == one; };
    m->bottom = zero;
    m->top = one;
    m->interp[Conn::Join] = binary<HyperValue>(hmax);
    m->interp[Conn::Meet] = binary<HyperValue>(hmin);
    m->interp[Conn::Delta] = unary<HyperValue>([one, zero](const HyperValue& x) { return x == one ? one : zero; });
    return m;
}

HyperValue h_neg(const HyperValue& x) { return hyper_arith(HOp::OneMinus, x); }
HyperValue h_imp_l(const HyperValue& x, const HyperValue& y) { return hyper_arith(HOp::ImpL, x, y); }

}  // namespace

LogicPtr hyper_luk(unsigned W) {
    auto m = hyper_logic("luk", W);
    auto conj = [](const HyperValue& x, const HyperValue& y) { return h_neg(h_imp_l(x, h_neg(y))); };
    m->interp[Conn::NegL] = unary<HyperValue>(h_neg);
    m->interp[Conn::ImpL] = binary<HyperValue>(h_imp_l);
    m->interp[Conn::ConjL] = binary<HyperValue>(conj);
    m->interp[Conn::Oplus] = binary<HyperValue>([](const HyperValue& x, const HyperValue& y) { return h_imp_l(h_neg(x), y); });
    m->interp[Conn::Ominus] = binary<HyperValue>([conj](const HyperValue& x, const HyperValue& y) { return conj(x, h_neg(y)); });
    add_iff(*m, Conn::ImpL);
    return m;
}

// Incomparable pairs fall into the "otherwise" branch and yield y.
LogicPtr hyper_godel(unsigned W) {
    auto m = hyper_logic("godel", W);
    auto imp = [](const HyperValue& x, const HyperValue& y) {
        Order o = hleq(x, y);
        return o == Order::LE || o == Order::EQ ? HyperValue::standard(1) : y;
    };
    m->interp[Conn::ImpG] = binary<HyperValue>(imp);
    m->interp[Conn::NegG] = unary<HyperValue>([imp](const HyperValue& x) { return imp(x, HyperValue::standard(0)); });
    add_iff(*m, Conn::ImpG);
    return m;
}

LogicPtr hyper_product(unsigned W) {
    auto m = hyper_logic("product", W);
    auto imp = [](const HyperValue& x, const HyperValue& y) {
        Order o = hleq(x, y);
        if (o == Order::LE || o == Order::EQ) return HyperValue::standard(1);
        return pointwise(x, y, [](const Rat& a, const Rat& b) { return a <= b ? Rat(1) : Rat(b / a); });
    };
    auto mult = [](const HyperValue& x, const HyperValue& y) { return hyper_arith(HOp::Mul, x, y); };
    auto meet = [imp, mult](const HyperValue& x, const HyperValue& y) { return mult(x, imp(x, y)); };
    m->interp[Conn::ImpPi] = binary<HyperValue>(imp);
    m->interp[Conn::NegPi] = unary<HyperValue>([imp](const HyperValue& x) { return imp(x, HyperValue::standard(0)); });
    m->interp[Conn::ConjPi] = binary<HyperValue>(mult);
    m->interp[Conn::Meet] = binary<HyperValue>(meet);
    m->interp[Conn::Join] = binary<HyperValue>([imp, meet](const HyperValue& x, const HyperValue& y) {
        return meet(imp(imp(x, y), y), imp(imp(y, x), x));
    });
    add_iff(*m, Conn::ImpPi);
    return m;
}

LogicPtr inl_hyper(unsigned W) {
    if (W < 2) throw DomainError("window size must be at least 2");
    auto m = std::make_shared<MatrixLogic>();
    m->id = "inl-hyper:" + std::to_string(W);
    m->domain = {DomainKind::InlHyper, 0, 0, 0, W};
    HyperValue one = HyperValue::standard(1), zero = HyperValue::standard(0);
    m->interp[Conn::NegL] = unary<HyperTriple>([](const HyperTriple& a) { return inl_apply(InlConn::Neg, a); });
    m->interp[Conn::ImpL] = binary<HyperTriple>([](const HyperTriple& a, const HyperTriple& b) { return inl_apply(InlConn::Imp, a, b); });
    m->interp[Conn::Meet] = binary<HyperTriple>([](const HyperTriple& a, const HyperTriple& b) { return inl_apply(InlConn::And, a, b); });
    m->interp[Conn::Join] = binary<HyperTriple>([](const HyperTriple& a, const HyperTriple& b) { return inl_apply(InlConn::Or, a, b); });
    m->interp[Conn::Iff] = binary<HyperTriple>([](const HyperTriple& a, const HyperTriple& b) { return inl_iff(a, b); });
    m->designated = [](const Value& v) { return inl_designated(as<HyperTriple>(v)); };
    m->bottom = HyperTriple{zero, one, one};
    m->top = HyperTriple{one, zero, zero};
    return m;
}

LogicPtr inl_padic(unsigned p, unsigned K) {
    auto m = std::make_shared<MatrixLogic>();
    m->id = "inl-padic:" + std::to_string(p) + ":" + std::to_string(K);
    m->domain = {DomainKind::InlPadic, 0, p, K};
    PadicInt top = PadicInt::n_max(p, K), zero = PadicInt::zero(p, K);
    m->interp[Conn::NegL] = unary<PadicTriple>([](const PadicTriple& a) { return inl_apply(InlConn::Neg, a); });
    m->interp[Conn::ImpL] = binary<PadicTriple>([](const PadicTriple& a, const PadicTriple& b) { return inl_apply(InlConn::Imp, a, b); });
    m->interp[Conn::Meet] = binary<PadicTriple>([](const PadicTriple& a, const PadicTriple& b) { return inl_apply(InlConn::And, a, b); });
    m->interp[Conn::Join] = binary<PadicTriple>([](const PadicTriple& a, const PadicTriple& b) { return inl_apply(InlConn::Or, a, b); });
    m->interp[Conn::Iff] = binary<PadicTriple>([](const PadicTriple& a, const PadicTriple& b) { return inl_iff(a, b); });
    m->designated = [](const Value& v) { return inl_designated(as<PadicTriple>(v)); };
    m->bottom = PadicTriple{zero, top, top};
    m->top = PadicTriple{top, zero, zero};
    return m;
}

LogicPtr make_logic(std::string_view id) {
    auto parts = split(id, ':');
    std::string_view name = parts[0];
    auto arg = [&](size_t i, const char* what) {
        if (parts.size() <= i) throw DomainError("logic id '" + std::string(id) + "' is missing " + what);
        return parse_uint(parts[i], what);
    };
    auto expect = [&](size_t count) {
        if (parts.size() != count) throw DomainError("malformed logic id '" + std::string(id) + "'");
    };
    if (name == "luk3") { expect(1); return luk(3); }
    if (name == "classical") { expect(1); return luk(2); }
    if (name == "luk") { expect(2); return luk(arg(1, "n")); }
    if (name == "post") { expect(2); return post(arg(1, "n")); }
    if (name == "luk-inf") { expect(1); return luk_inf(); }
    if (name == "godel") { expect(1); return godel(); }
    if (name == "product") { expect(1); return product(); }
    if (name == "hl") { expect(2); return hyperbolic_luk(arg(1, "n")); }
    if (name == "hg") { expect(2); return hyperbolic_godel(arg(1, "n")); }
    if (name == "par") { expect(2); return parabolic(arg(1, "n")); }
    if (name == "pq") { expect(2); return quasiparabolic(arg(1, "n")); }
    if (name == "padic-luk") { expect(3); return padic_luk(arg(1, "p"), arg(2, "K")); }
    if (name == "padic-godel") { expect(3); return padic_godel(arg(1, "p"), arg(2, "K")); }
    if (name == "padic-post") { expect(3); return padic_post(arg(1, "p"), arg(2, "K")); }
    if (name == "padic-product") { expect(3); return padic_product(arg(1, "p"), arg(2, "K")); }
    if (name == "hyper-luk") { expect(2); return hyper_luk(arg(1, "W")); }
    if (name == "hyper-godel") { expect(2); return hyper_godel(arg(1, "W")); }
    if (name == "hyper-product") { expect(2); return hyper_product(arg(1, "W")); }
    if (name == "inl-hyper") { expect(2); return inl_hyper(arg(1, "W")); }
    if (name == "inl-padic") { expect(3); return inl_padic(arg(1, "p"), arg(2, "K")); }
    throw DomainError("unknown logic '" + std::string(id) + "'");
}

Value eval(const MatrixLogic& logic, const Formula& f, const Valuation& v) {
    switch (f->kind) {
    case Kind::Var: {
        auto it = v.find(f->name);
        if (it == v.end()) throw DomainError("no value for variable " + f->name);
        return it->second;
    }
    case Kind::Meta: throw DomainError("cannot evaluate metavariable " + f->name);
    case Kind::Apply: {
        std::vector<Value> args;
        args.reserve(f->args.size());
        for (const auto& a : f->args) args.push_back(eval(logic, a, v));
        return logic.apply(f->conn, args);
    }
    default: return logic.constant(*f);
    }
}

// ---- finite logics ----

TruthTable truth_table(const MatrixLogic& logic, Conn c) {
    if (logic.domain.kind != DomainKind::Finite) throw DomainError("truth tables need a finite logic");
    TruthTable t{c, {}, {}, {}};
    for (Level v = logic.domain.n; v-- > 0;) t.rows.push_back(v);
    if (arity(c) == 2) t.cols = t.rows;
    for (Level x : t.rows) {
        std::vector<Level> row;
        if (arity(c) == 1) row.push_back(as<Level>(logic.apply(c, {Value(x)})));
        else
            for (Level y : t.cols) row.push_back(as<Level>(logic.apply(c, {Value(x), Value(y)})));
        t.cells.push_back(std::move(row));
    }
    return t;
}

std::string format_table(const TruthTable& t) {
    std::ostringstream os;
    os << conn_token(t.conn);
    for (Level y : t.cols) os << '\t' << y;
    os << '\n';
    for (size_t r = 0; r < t.rows.size(); ++r) {
        os << t.rows[r];
        for (Level v : t.cells[r]) os << '\t' << v;
        os << '\n';
    }
    return os.str();
}

TautResult tautology_finite(const MatrixLogic& logic, const Formula& f, unsigned max_vars) {
    if (logic.domain.kind != DomainKind::Finite) throw DomainError("tautology search needs a finite logic");
    auto vars = variables(f);
    if (vars.size() > max_vars)
        throw DomainError("too many variables: " + std::to_string(vars.size()) + " > " + std::to_string(max_vars));
    const unsigned n = logic.domain.n;
    std::vector<Level> cur(vars.size(), 0);
    Valuation v;
    while (true) {
        for (size_t i = 0; i < vars.size(); ++i) v[vars[i]] = cur[i];
        Value r = eval(logic, f, v);
        if (!logic.designated(r)) {
            TautResult out{false, {}, as<Level>(r)};
            for (size_t i = 0; i < vars.size(); ++i) out.counterexample.emplace_back(vars[i], cur[i]);
            return out;
        }
        size_t k = vars.size();
        while (k > 0 && ++cur[k - 1] == n) cur[--k] = 0;
        if (k == 0) return {};
    }
}

BigInt count_logics(unsigned n, const std::vector<unsigned>& arities) {
    if (n < 2) throw DomainError("count_logics needs n >= 2");
    BigInt total = 1;
    for (unsigned m : arities) {
        BigInt rows, fns;
        mpz_ui_pow_ui(rows.get_mpz_t(), n, m);
        if (!rows.fits_ulong_p()) throw DomainError("arity too large");
        mpz_ui_pow_ui(fns.get_mpz_t(), n, rows.get_ui());
        total *= fns;
    }
    return total;
}

unsigned totient(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        while (m % d == 0) m /= d;
        result -= result / d;
    }
    if (m > 1) result -= result / m;
    return result;
}

EulerChain euler_chain(unsigned n) {
    if (n < 2) throw DomainError("euler_chain needs n >= 2");
    EulerChain e;
    e.chain.push_back(n);
    while (!is_prime(e.chain.back())) e.chain.push_back(totient(e.chain.back()) + 1);
    e.prime = e.chain.back();
    return e;
}

// ---- nonlinear families ----

std::vector<Rat> unit_grid(unsigned points) {
    if (points < 2) throw DomainError("grid needs at least 2 points");
    std::vector<Rat> g;
    for (unsigned k = 0; k < points; ++k) g.emplace_back(Rat(k, points - 1));
    for (auto& q : g) q.canonicalize();
    return g;
}

Convergence converge_check(Family fam, unsigned n, unsigned grid_points) {
    if (n < 1) throw DomainError("n must be positive");
    auto grid = unit_grid(grid_points);
    using U = std::function<Rat(const Rat&)>;
    using B = std::function<Rat(const Rat&, const Rat&)>;
    std::vector<std::pair<std::string, U>> un_ops;
    std::vector<std::pair<std::string, B>> bin_ops;
    // each entry measures |family op - limit op|
    switch (fam) {
    case Family::HL:
        un_ops.emplace_back("neg", [n](const Rat& x) { return Rat(unit::hl_neg(n, x) - unit::luk_neg(x)); });
        bin_ops.emplace_back("imp", [n](const Rat& x, const Rat& y) { return Rat(unit::hl_imp(n, x, y) - unit::luk_imp(x, y)); });
        bin_ops.emplace_back("or", [n](const Rat& x, const Rat& y) { return Rat(unit::hl_or(n, x, y) - rmax(x, y)); });
        bin_ops.emplace_back("and", [n](const Rat& x, const Rat& y) { return Rat(unit::hl_and(n, x, y) - rmin(x, y)); });
        break;
    case Family::HG:
        un_ops.emplace_back("neg", [n](const Rat& x) { return Rat(unit::hg_neg(n, x) - unit::godel_neg(x)); });
        bin_ops.emplace_back("imp", [n](const Rat& x, const Rat& y) { return Rat(unit::hg_imp(n, x, y) - unit::godel_imp(x, y)); });
        break;
    case Family::Pquasi:
        un_ops.emplace_back("neg", [n](const Rat& x) { return Rat(unit::pq_neg(n, x) - unit::luk_neg(x)); });
        bin_ops.emplace_back("imp", [n](const Rat& x, const Rat& y) { return Rat(unit::pq_imp(n, x, y) - unit::luk_imp(x, y)); });
        bin_ops.emplace_back("or", [n](const Rat& x, const Rat& y) { return Rat(unit::pq_or(n, x, y) - rmax(x, y)); });
        bin_ops.emplace_back("and", [n](const Rat& x, const Rat& y) { return Rat(unit::pq_and(n, x, y) - rmin(x, y)); });
        break;
    }
    Convergence c;
    c.max_dev = 0;
    for (auto& [name, f] : un_ops) {
        Rat m = 0;
        for (const auto& x : grid) m = rmax(m, abs(f(x)));
        c.per_op.emplace_back(name, m);
        c.max_dev = rmax(c.max_dev, m);
    }
    for (auto& [name, f] : bin_ops) {
        Rat m = 0;
        for (const auto& x : grid)
            for (const auto& y : grid) m = rmax(m, abs(f(x, y)));
        c.per_op.emplace_back(name, m);
        c.max_dev = rmax(c.max_dev, m);
    }
    return c;
}

// ---- clones ----

bool FnTable::depends_on_second() const {
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 1; y < n; ++y)
            if (table[x * n + y] != table[x * n]) return true;
    return false;
}

bool FnTable::depends_on_first() const {
    for (unsigned x = 1; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
            if (table[x * n + y] != table[y]) return true;
    return false;
}

FnTable fn_from_conn(const MatrixLogic& logic, Conn c) {
    if (logic.domain.kind != DomainKind::Finite) throw DomainError("clone exploration needs a finite logic");
    const unsigned n = logic.domain.n;
    FnTable f{n, std::vector<Level>(n * n)};
    for (Level x = 0; x < n; ++x)
        for (Level y = 0; y < n; ++y) {
            Value r = arity(c) == 1 ? logic.apply(c, {Value(x)}) : logic.apply(c, {Value(x), Value(y)});
            f.table[x * n + y] = as<Level>(r);
        }
    return f;
}

bool preserves_extremes(const FnTable& f) {
    const Level top = f.n - 1;
    for (Level x : {Level(0), top})
        for (Level y : {Level(0), top}) {
            Level v = f.table[x * f.n + y];
            if (v != 0 && v != top) return false;
        }
    return true;
}

std::vector<FnTable> clone_closure(const MatrixLogic& logic, const std::vector<Conn>& generators,
                                   unsigned max_arity, unsigned depth) {
    if (max_arity > 2) throw DomainError("clone_closure supports arity <= 2");
    if (depth > 16) throw DomainError("clone_closure depth bound is 16");
    if (logic.domain.kind != DomainKind::Finite || logic.domain.n > 4)
        throw DomainError("clone_closure needs a finite logic with at most 4 values");
    const unsigned n = logic.domain.n, cells = n * n;
    auto code = [&](const std::vector<Level>& t) {
        std::uint64_t c = 0;
        for (Level v : t) c = c * n + v;
        return c;
    };
    std::vector<std::vector<Level>> unary_gens, binary_gens;
    for (Conn c : generators) (arity(c) == 1 ? unary_gens : binary_gens).push_back(fn_from_conn(logic, c).table);

    std::vector<std::vector<Level>> all, frontier;
    std::unordered_set<std::uint64_t> seen;
    auto add = [&](std::vector<Level> t, std::vector<std::vector<Level>>& into) {
        if (seen.insert(code(t)).second) into.push_back(std::move(t));
    };
    std::vector<Level> px(cells), py(cells);
    for (Level x = 0; x < n; ++x)
        for (Level y = 0; y < n; ++y) {
            px[x * n + y] = x;
            py[x * n + y] = y;
        }
    add(px, frontier);
    if (max_arity == 2) add(py, frontier);

    std::vector<Level> t(cells);
    for (unsigned d = 0; d < depth && !frontier.empty(); ++d) {
        size_t old = all.size();
        all.insert(all.end(), frontier.begin(), frontier.end());
        std::vector<std::vector<Level>> next;
        for (const auto& g : unary_gens)
            for (size_t i = old; i < all.size(); ++i) {
                for (unsigned k = 0; k < cells; ++k) t[k] = g[all[i][k] * n];
                add(t, next);
            }
        // at least one operand must be new at this level
        for (const auto& h : binary_gens)
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = (i < old ? old : 0); j < all.size(); ++j) {
                    for (unsigned k = 0; k < cells; ++k) t[k] = h[all[i][k] * n + all[j][k]];
                    add(t, next);
                    for (unsigned k = 0; k < cells; ++k) t[k] = h[all[j][k] * n + all[i][k]];
                    add(t, next);
                }
        frontier = std::move(next);
    }
    all.insert(all.end(), frontier.begin(), frontier.end());
    std::vector<FnTable> out;
    for (auto& tab : all)
        if (max_arity == 2 || !FnTable{n, tab}.depends_on_second()) out.push_back({n, std::move(tab)});
    std::sort(out.begin(), out.end());
    return out;
}

// ---- grid checks ----

std::optional<Valuation> grid_counterexample(const MatrixLogic& logic, const Formula& f, const std::vector<Rat>& grid) {
    auto vars = variables(f);
    std::vector<size_t> cur(vars.size(), 0);
    Valuation v;
    while (true) {
        for (size_t i = 0; i < vars.size(); ++i) v[vars[i]] = grid[cur[i]];
        if (!logic.designated(eval(logic, f, v))) return v;
        size_t k = vars.size();
        while (k > 0 && ++cur[k - 1] == grid.size()) cur[--k] = 0;
        if (k == 0) return std::nullopt;
    }
}

}  // namespace mvl
