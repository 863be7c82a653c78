#include "mvl/matrices.hpp"

namespace mvl {

namespace {

Rat rmin(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rmax(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::string w(std::initializer_list<std::pair<const char*, const Rat*>> xs) {
    std::string s;
    for (auto [name, q] : xs) {
        if (!s.empty()) s += ", ";
        s += std::string(name) + "=" + q->get_str();
    }
    return s;
}

// Runs pred over all grid pairs or triples and records the first failure.
template <class F>
LawCheck over_pairs(std::string name, const std::vector<Rat>& g, F pred) {
    LawCheck c;
    c.name = std::move(name);
    for (const auto& x : g)
        for (const auto& y : g) {
            ++c.checked;
            if (c.holds && !pred(x, y)) {
                c.holds = false;
                c.witness = w({{"x", &x}, {"y", &y}});
            }
        }
    return c;
}

template <class F>
LawCheck over_triples(std::string name, const std::vector<Rat>& g, F pred) {
    LawCheck c;
    c.name = std::move(name);
    for (const auto& x : g)
        for (const auto& y : g)
            for (const auto& z : g) {
                ++c.checked;
                if (c.holds && !pred(x, y, z)) {
                    c.holds = false;
                    c.witness = w({{"x", &x}, {"y", &y}, {"z", &z}});
                }
            }
    return c;
}

}  // namespace

Rat tnorm(TNorm t, const Rat& x, const Rat& y) {
    switch (t) {
    case TNorm::Luk: return unit::luk_conj(x, y);
    case TNorm::Godel: return rmin(x, y);
    case TNorm::Product: return x * y;
    }
    return 0;
}

Rat residuum(TNorm t, const Rat& x, const Rat& y) {
    switch (t) {
    case TNorm::Luk: return unit::luk_imp(x, y);
    case TNorm::Godel: return unit::godel_imp(x, y);
    case TNorm::Product: return unit::prod_imp(x, y);
    }
    return 0;
}

std::vector<LawCheck> tnorm_laws(TNorm t, const std::vector<Rat>& g) {
    auto s = [t](const Rat& x, const Rat& y) { return tnorm(t, x, y); };
    auto r = [t](const Rat& x, const Rat& y) { return residuum(t, x, y); };
    std::vector<LawCheck> out;
    out.push_back(over_pairs("commutativity", g, [&](const Rat& x, const Rat& y) { return s(x, y) == s(y, x); }));
    out.push_back(over_triples("associativity", g, [&](const Rat& x, const Rat& y, const Rat& z) {
        return s(s(x, y), z) == s(x, s(y, z));
    }));
    out.push_back(over_triples("monotonicity", g, [&](const Rat& x, const Rat& x2, const Rat& y) {
        return x > x2 || s(x, y) <= s(x2, y);
    }));
    out.push_back(over_pairs("unit", g, [&](const Rat& x, const Rat&) { return s(1, x) == x; }));
    out.push_back(over_pairs("zero", g, [&](const Rat& x, const Rat&) { return s(0, x) == 0; }));
    out.push_back(over_triples("residuation", g, [&](const Rat& x, const Rat& y, const Rat& z) {
        return (z <= r(x, y)) == (s(x, z) <= y);
    }));
    return out;
}

std::vector<LawCheck> bl_laws(TNorm t, const std::vector<Rat>& g) {
    auto s = [t](const Rat& x, const Rat& y) { return tnorm(t, x, y); };
    auto r = [t](const Rat& x, const Rat& y) { return residuum(t, x, y); };
    std::vector<LawCheck> out;
    out.push_back(over_pairs("divisibility", g, [&](const Rat& x, const Rat& y) { return rmin(x, y) == s(x, r(x, y)); }));
    out.push_back(over_pairs("prelinearity", g, [&](const Rat& x, const Rat& y) { return rmax(r(x, y), r(y, x)) == 1; }));
    out.push_back(over_pairs("join", g, [&](const Rat& x, const Rat& y) {
        return rmax(x, y) == rmin(r(r(x, y), y), r(r(y, x), x));
    }));
    out.push_back(over_triples("residuation", g, [&](const Rat& x, const Rat& y, const Rat& z) {
        return (z <= r(x, y)) == (s(x, z) <= y);
    }));
    out.push_back(over_pairs("top", g, [&](const Rat& x, const Rat&) { return r(x, x) == 1 && r(0, x) == 1; }));
    return out;
}

LawCheck shift_homomorphism(const std::vector<Rat>& g) {
    auto sh = [](const Rat& q) { return Rat(q - 1); };
    LawCheck c = over_pairs("shift", g, [&](const Rat& x, const Rat& y) {
        bool imp = sh(unit::luk_imp(x, y)) == rmin(0, sh(y) - sh(x));
        bool conj = sh(unit::luk_conj(x, y)) == rmax(-1, sh(x) + sh(y));
        return imp && conj;
    });
    if (sh(1) != 0) c.holds = false;
    return c;
}

}  // namespace mvl
