#pragma once

#include "mvl/hyper.hpp"
#include "mvl/padic.hpp"
#include "mvl/syntax.hpp"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace prop {

// Seed shared by every generator in a test binary. main() sets it from
// --seed=N or MVL_SEED.
inline unsigned long& seed() {
    static unsigned long s = [] {
        const char* env = std::getenv("MVL_SEED");
        return env ? std::stoul(env) : 20261016ul;
    }();
    return s;
}

class Gen {
public:
    explicit Gen(unsigned long salt = 0) : rng_(seed() * 0x9E3779B97F4A7C15ull + salt) {}

    unsigned below(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
    bool coin() { return below(2) == 1; }

    // k/den in [0,1] with den in 1..max_den
    mvl::Rat unit_rat(unsigned max_den = 12) {
        unsigned den = 1 + below(max_den);
        mvl::Rat q(below(den + 1), den);
        q.canonicalize();
        return q;
    }

    mvl::PadicInt padic(unsigned p, unsigned K) {
        std::vector<mvl::PadicInt::Digit> d(K);
        for (auto& x : d) x = below(p);
        return mvl::PadicInt(p, K, d);
    }

    // Standard value or a window of width w.
    mvl::HyperValue hyper(unsigned w, unsigned max_den = 6) {
        if (below(3) == 0) return mvl::HyperValue::standard(unit_rat(max_den));
        std::vector<mvl::Rat> seq(w);
        for (auto& q : seq) q = unit_rat(max_den);
        return mvl::HyperValue::window(seq);
    }

    mvl::Formula formula(const std::vector<mvl::Conn>& conns, const std::vector<std::string>& vars, unsigned depth) {
        if (depth == 0 || below(3) == 0) return mvl::var(vars[below(vars.size())]);
        mvl::Conn c = conns[below(conns.size())];
        if (mvl::arity(c) == 1) return mvl::un(c, formula(conns, vars, depth - 1));
        return mvl::bin(c, formula(conns, vars, depth - 1), formula(conns, vars, depth - 1));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace prop
