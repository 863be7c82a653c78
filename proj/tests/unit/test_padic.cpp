#include <doctest.h>

#include "mvl/padic.hpp"
#include "prop.hpp"

using namespace mvl;

namespace {

BigInt modulus(unsigned p, unsigned K) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, K);
    return m;
}

// Oracle: digits of n mod p^K by repeated division.
std::vector<PadicInt::Digit> digits_of(BigInt n, unsigned p, unsigned K) {
    BigInt m = modulus(p, K);
    n %= m;
    if (n < 0) n += m;
    std::vector<PadicInt::Digit> d;
    for (unsigned i = 0; i < K; ++i) {
        BigInt r = n % p;
        d.push_back(static_cast<PadicInt::Digit>(r.get_ui()));
        n /= p;
    }
    return d;
}

// Oracle: value from digits by Horner's rule.
BigInt value_of(const PadicInt& x) {
    BigInt v = 0;
    for (unsigned i = x.K(); i-- > 0;) v = v * x.p() + x.digit(i);
    return v;
}

PadicInt P(unsigned p, std::vector<PadicInt::Digit> d) { return PadicInt(p, static_cast<unsigned>(d.size()), d); }

}  // namespace

TEST_CASE("n_max and constants") {
    CHECK(PadicInt::n_max(2, 4).digits() == std::vector<PadicInt::Digit>{1, 1, 1, 1});
    CHECK(PadicInt::n_max(3, 2).digits() == std::vector<PadicInt::Digit>{2, 2});
    CHECK(add(PadicInt::n_max(2, 4), PadicInt::one(2, 4)).is_zero());
    CHECK(sub(PadicInt::zero(2, 4), PadicInt::one(2, 4)) == PadicInt::n_max(2, 4));
}

TEST_CASE("ring fixtures") {
    CHECK(add(P(3, {2, 2, 0, 1}), P(3, {2, 0, 0, 0})) == P(3, {1, 0, 1, 1}));
    CHECK(mul(P(2, {1, 1}), P(2, {1, 1})) == P(2, {1, 0}));
    CHECK_THROWS_AS(add(P(2, {1, 0}), P(2, {1, 0, 0})), DomainError);
    CHECK_THROWS_AS(add(P(2, {1, 0}), P(3, {1, 0})), DomainError);
    CHECK_THROWS_AS(PadicInt(4, 2, {1, 0}), DomainError);
    CHECK_THROWS_AS(PadicInt(3, 2, {3, 0}), DomainError);
}

TEST_CASE("ring ops agree with integers mod p^K") {
    prop::Gen g(10);
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned K : {8u, 32u}) {
            BigInt m = modulus(p, K);
            for (int i = 0; i < 300; ++i) {
                PadicInt x = g.padic(p, K), y = g.padic(p, K), z = g.padic(p, K);
                BigInt a = value_of(x), b = value_of(y);
                CHECK(add(x, y).digits() == digits_of(a + b, p, K));
                CHECK(sub(x, y).digits() == digits_of(a - b, p, K));
                CHECK(mul(x, y).digits() == digits_of(a * b, p, K));
                CHECK(neg(x).digits() == digits_of(-a, p, K));
                CHECK(x.residue() == a);
                // ring laws
                CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
                CHECK(add(add(x, y), z) == add(x, add(y, z)));
                CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
                CHECK(add(x, neg(x)).is_zero());
                // complement has no borrows
                PadicInt c = sub(PadicInt::n_max(p, K), x);
                for (unsigned k = 0; k < K; ++k) CHECK(c.digit(k) == p - 1 - x.digit(k));
            }
        }
}

TEST_CASE("rationals and inverses") {
    prop::Gen g(11);
    for (unsigned p : {2u, 3u, 5u}) {
        const unsigned K = 16;
        BigInt m = modulus(p, K);
        for (int i = 0; i < 200; ++i) {
            long num = static_cast<long>(g.below(200)) - 100;
            long den = 1 + g.below(50);
            if (den % p == 0) ++den;
            PadicInt x = PadicInt::from_rational(p, K, num, den);
            // den * x = num mod p^K
            BigInt lhs = (BigInt(den) * value_of(x) - num) % m;
            CHECK(lhs == 0);
            PadicInt u = g.padic(p, K);
            auto inv = inverse(u);
            CHECK(inv.has_value() == (u.digit(0) != 0));
            if (inv) CHECK(mul(u, *inv) == PadicInt::one(p, K));
        }
        CHECK_THROWS_AS(PadicInt::from_rational(p, K, 1, p), DomainError);
    }
    CHECK_THROWS_AS(divide(PadicInt::one(2, 4), P(2, {0, 1, 0, 0})), DomainError);
}

TEST_CASE("digitwise order fixtures") {
    CHECK(leq(P(2, {1, 0}), P(2, {1, 1})) == Order::LE);
    CHECK(leq(P(2, {1, 0}), P(2, {0, 1})) == Order::Incomparable);
    CHECK(leq(P(2, {1, 1}), P(2, {1, 0})) == Order::GE);
    CHECK(leq(P(2, {1, 1}), P(2, {1, 1})) == Order::EQ);
    PadicInt a = PadicInt::from_rational(2, 6, -1, 3), b = PadicInt::from_rational(2, 6, -2, 3);
    CHECK(a.digits() == std::vector<PadicInt::Digit>{1, 0, 1, 0, 1, 0});
    CHECK(b.digits() == std::vector<PadicInt::Digit>{0, 1, 0, 1, 0, 1});
    CHECK(leq(a, b) == Order::Incomparable);
    CHECK(pmin(a, b).is_zero());
    CHECK(pmax(a, b) == PadicInt::n_max(2, 6));
    CHECK(pmin(P(2, {1, 0}), P(2, {1, 1})) == P(2, {1, 0}));
    CHECK(pmax(P(3, {2, 0}), P(3, {1, 1})) == P(3, {2, 1}));
}

TEST_CASE("lattice laws and order coherence") {
    prop::Gen g(12);
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned K : {8u, 32u})
            for (int i = 0; i < 300; ++i) {
                PadicInt x = g.padic(p, K), y = g.padic(p, K), z = g.padic(p, K);
                CHECK(pmin(x, pmax(x, y)) == x);
                CHECK(pmax(x, pmin(x, y)) == x);
                CHECK(pmin(x, x) == x);
                CHECK(pmin(x, y) == pmin(y, x));
                CHECK(pmax(x, y) == pmax(y, x));
                CHECK(pmin(pmin(x, y), z) == pmin(x, pmin(y, z)));
                CHECK(pmax(pmax(x, y), z) == pmax(x, pmax(y, z)));
                CHECK(pmax(x, PadicInt::n_max(p, K)) == PadicInt::n_max(p, K));
                CHECK(pmin(x, PadicInt::n_max(p, K)) == x);
                // order from digits directly
                bool le = true, ge = true;
                for (unsigned k = 0; k < K; ++k) {
                    le = le && x.digit(k) <= y.digit(k);
                    ge = ge && x.digit(k) >= y.digit(k);
                }
                Order o = leq(x, y);
                CHECK(o == (le && ge ? Order::EQ : le ? Order::LE : ge ? Order::GE : Order::Incomparable));
                if (o == Order::LE) {
                    CHECK(pmin(x, y) == x);
                    CHECK(pmax(x, y) == y);
                }
            }
}

TEST_CASE("post successor") {
    CHECK(post_succ(P(3, {2, 0, 1})) == P(3, {0, 1, 2}));
    CHECK(post_succ(PadicInt::n_max(2, 5)).is_zero());
    prop::Gen g(13);
    for (unsigned p : {2u, 3u, 5u})
        for (int i = 0; i < 100; ++i) {
            PadicInt x = g.padic(p, 8), y = x;
            for (unsigned k = 0; k < p; ++k) y = post_succ(y);
            CHECK(y == x);
        }
}

TEST_CASE("norm") {
    CHECK(norm(P(2, {0, 0, 1, 1})).value == Rat(1, 4));
    CHECK(norm(P(5, {3, 0, 4})).value == 1);
    PadicNorm z = norm(PadicInt::zero(3, 6));
    CHECK(z.value == 0);
    CHECK(z.saturated);
    prop::Gen g(14);
    for (unsigned p : {2u, 3u, 5u})
        for (int i = 0; i < 300; ++i) {
            const unsigned K = 16;
            PadicInt x = g.padic(p, K), y = g.padic(p, K);
            // sparsify low digits so higher valuations show up
            std::vector<PadicInt::Digit> dx = x.digits(), dy = y.digits();
            for (unsigned k = 0, s = g.below(6); k < s; ++k) dx[k] = 0;
            for (unsigned k = 0, s = g.below(6); k < s; ++k) dy[k] = 0;
            x = PadicInt(p, K, dx);
            y = PadicInt(p, K, dy);
            // oracle: largest power of p dividing the residue
            auto val = [&](const PadicInt& v) {
                BigInt r = value_of(v);
                unsigned L = 0;
                while (L < K && r % p == 0) {
                    r /= p;
                    ++L;
                }
                return L;
            };
            PadicNorm nx = norm(x), ny = norm(y);
            CHECK(nx.L == val(x));
            if (!nx.saturated && !ny.saturated && nx.L + ny.L < K) CHECK(norm(mul(x, y)).value == nx.value * ny.value);
            CHECK(norm(add(x, y)).value <= std::max(nx.value, ny.value));
        }
}

TEST_CASE("integral division on natural truncations") {
    PadicInt a = PadicInt::from_integer(3, 8, 50), b = PadicInt::from_integer(3, 8, 7);
    CHECK(floor_div(a, b).residue() == 7);
    CHECK_THROWS_AS(floor_div(a, PadicInt::zero(3, 8)), DomainError);
    CHECK_THROWS_AS(floor_div(PadicInt::n_max(3, 8), b), DomainError);
}

TEST_CASE("text form") {
    PadicInt x = PadicInt::parse("2:4:1,0,1");
    CHECK(x.digits() == std::vector<PadicInt::Digit>{1, 0, 1, 0});
    CHECK(x.str() == "2:4:1,0,1,0");
    CHECK(PadicInt::parse(x.str()) == x);
    CHECK_THROWS_AS(PadicInt::parse("2:2:1,0,1"), DomainError);
    CHECK_THROWS_AS(PadicInt::parse("2:4:2"), DomainError);
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
}
