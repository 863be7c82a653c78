#include "mvl/hyper.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

namespace mvl {

namespace {

void check_unit(const Rat& q) {
    if (q < 0 || q > 1) throw DomainError("hyper value entry " + q.get_str() + " outside [0,1]");
}

size_t common_width(const HyperValue& a, const HyperValue& b) {
    if (!a.is_standard() && !b.is_standard() && a.width() != b.width())
        throw DomainError("window size mismatch: " + std::to_string(a.width()) + " vs " + std::to_string(b.width()));
    return std::max(a.width(), b.width());
}

}  // namespace

HyperValue HyperValue::standard(const Rat& q) {
    check_unit(q);
    Rat c = q;
    c.canonicalize();
    return HyperValue(std::vector<Rat>{c});
}

HyperValue HyperValue::window(std::vector<Rat> seq) {
    if (seq.empty()) throw DomainError("empty window");
    for (auto& q : seq) {
        check_unit(q);
        q.canonicalize();
    }
    if (std::all_of(seq.begin(), seq.end(), [&](const Rat& q) { return q == seq[0]; })) seq.resize(1);
    return HyperValue(std::move(seq));
}

const Rat& HyperValue::standard_value() const {
    if (!is_standard()) throw DomainError("not a standard value");
    return w_[0];
}

HyperValue HyperValue::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string t) {
        size_t a = t.find_first_not_of(" \t"), b = t.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
    };
    s = trim(s);
    if (s.rfind("std", 0) == 0) return standard(parse_rat(trim(s.substr(3))));
    if (s.rfind("win", 0) == 0) s = trim(s.substr(3));
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw DomainError("malformed window '" + std::string(text) + "'");
        std::vector<Rat> seq;
        std::string body = s.substr(1, s.size() - 2);
        size_t pos = 0;
        while (true) {
            size_t comma = body.find(',', pos);
            seq.push_back(parse_rat(body.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return window(std::move(seq));
    }
    return standard(parse_rat(s));
}

std::string HyperValue::str() const {
    if (is_standard()) return "std " + w_[0].get_str();
    std::string s = "win [";
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ',';
        s += w_[i].get_str();
    }
    return s + "]";
}

Order hleq(const HyperValue& a, const HyperValue& b) {
    common_width(a, b);
    if (a.is_standard() && b.is_standard()) {
        int c = cmp(a.standard_value(), b.standard_value());
        return c == 0 ? Order::EQ : (c < 0 ? Order::LE : Order::GE);
    }
    // a positive standard dominates every window; 0 sits below all of them
    if (a.is_standard()) return a.standard_value() > 0 ? Order::GE : Order::LE;
    if (b.is_standard()) return b.standard_value() > 0 ? Order::LE : Order::GE;
    bool le = true, ge = true;
    for (size_t i = 0; i < a.width(); ++i) {
        le = le && a.at(i) <= b.at(i);
        ge = ge && a.at(i) >= b.at(i);
    }
    if (le && ge) return Order::EQ;
    if (le) return Order::LE;
    if (ge) return Order::GE;
    return Order::Incomparable;
}

// Comparable pairs follow the order; only incomparable windows fall back to
// pointwise min/max.
HyperValue hmin(const HyperValue& a, const HyperValue& b) {
    switch (hleq(a, b)) {
    case Order::LE:
    case Order::EQ: return a;
    case Order::GE: return b;
    default: return pointwise(a, b, [](const Rat& x, const Rat& y) { return x < y ? x : y; });
    }
}

HyperValue hmax(const HyperValue& a, const HyperValue& b) {
    switch (hleq(a, b)) {
    case Order::LE:
    case Order::EQ: return b;
    case Order::GE: return a;
    default: return pointwise(a, b, [](const Rat& x, const Rat& y) { return x < y ? y : x; });
    }
}

HyperValue pointwise(const HyperValue& a, const HyperValue& b, const std::function<Rat(const Rat&, const Rat&)>& f) {
    size_t w = common_width(a, b);
    if (w == 0) return HyperValue::standard(f(a.standard_value(), b.standard_value()));
    std::vector<Rat> r;
    r.reserve(w);
    for (size_t i = 0; i < w; ++i) r.push_back(f(a.at(i), b.at(i)));
    return HyperValue::window(std::move(r));
}

HyperValue pointwise(const HyperValue& a, const std::function<Rat(const Rat&)>& f) {
    if (a.is_standard()) return HyperValue::standard(f(a.standard_value()));
    std::vector<Rat> r;
    for (const auto& q : a.entries()) r.push_back(f(q));
    return HyperValue::window(std::move(r));
}

HyperValue hyper_arith(HOp op, const HyperValue& a, const HyperValue& b) {
    switch (op) {
    case HOp::OneMinus: return hyper_arith(op, a);
    case HOp::Add: return pointwise(a, b, [](const Rat& x, const Rat& y) { return Rat(x + y); });
    case HOp::Mul: return pointwise(a, b, [](const Rat& x, const Rat& y) { return Rat(x * y); });
    case HOp::ImpL:
        return pointwise(a, b, [](const Rat& x, const Rat& y) {
            Rat r = 1 - x + y;
            return r > 1 ? Rat(1) : r;
        });
    case HOp::DivClip:
        return pointwise(a, b, [](const Rat& x, const Rat& y) {
            if (x == 0) throw DomainError("pointwise division by zero");
            Rat r = y / x;
            return r > 1 ? Rat(1) : r;
        });
    case HOp::Monus:
        return pointwise(a, b, [](const Rat& x, const Rat& y) {
            Rat r = x - y;
            return r < 0 ? Rat(0) : r;
        });
    }
    throw DomainError("unknown hyper op");
}

HyperValue hyper_arith(HOp op, const HyperValue& a) {
    if (op != HOp::OneMinus) throw DomainError("binary hyper op needs two arguments");
    return pointwise(a, [](const Rat& x) { return Rat(1 - x); });
}

// ---- DSm hyper-power set ----

std::string dsm_expr(unsigned n, std::uint32_t element) {
    const std::uint32_t regions = (1u << n) - 1;
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t r = 1; r <= regions; ++r) {
        if (!(element >> r & 1)) continue;
        bool is_min = true;
        for (std::uint32_t s = 1; s <= regions && is_min; ++s)
            if (s != r && (element >> s & 1) && (s & r) == s) is_min = false;
        if (is_min) minimal.push_back(r);
    }
    if (minimal.empty()) return "∅";
    std::sort(minimal.begin(), minimal.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        // lexicographic on atom index lists: the lowest differing atom wins
        std::uint32_t diff = a ^ b;
        return diff && (a & (diff & -diff));
    });
    std::string out;
    for (size_t t = 0; t < minimal.size(); ++t) {
        if (t) out += "∪";
        std::string term;
        int atoms = 0;
        for (unsigned k = 0; k < n; ++k) {
            if (!(minimal[t] >> k & 1)) continue;
            if (atoms++) term += "∩";
            term += "θ" + std::to_string(k + 1);
        }
        out += atoms > 1 && minimal.size() > 1 ? "(" + term + ")" : term;
    }
    return out;
}

HyperPowerSet hyperpower_set(unsigned n) {
    if (n < 1 || n > 4) throw DomainError("hyperpower_set supports 1 <= n <= 4");
    const std::uint32_t regions = (1u << n) - 1;
    std::set<std::uint32_t> found{0};
    for (unsigned k = 0; k < n; ++k) {
        std::uint32_t atom = 0;
        for (std::uint32_t r = 1; r <= regions; ++r)
            if (r >> k & 1) atom |= 1u << r;
        found.insert(atom);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> cur(found.begin(), found.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                grew |= found.insert(cur[i] | cur[j]).second;
                grew |= found.insert(cur[i] & cur[j]).second;
            }
    }
    HyperPowerSet h;
    h.n = n;
    std::vector<std::pair<std::string, std::uint32_t>> tagged;
    for (auto e : found) tagged.emplace_back(dsm_expr(n, e), e);
    std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
        int pa = std::popcount(a.second), pb = std::popcount(b.second);
        return pa != pb ? pa < pb : a.first < b.first;
    });
    for (auto& [s, e] : tagged) {
        h.elements.push_back(e);
        h.exprs.push_back(s);
    }
    return h;
}

}  // namespace mvl
