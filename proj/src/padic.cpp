#include "mvl/padic.hpp"

#include <charconv>

namespace mvl {

namespace {

constexpr unsigned max_p = 1u << 16;

void check_compat(const PadicInt& x, const PadicInt& y) {
    if (x.p() != y.p() || x.K() != y.K())
        throw DomainError("precision mismatch: " + std::to_string(x.p()) + ":" + std::to_string(x.K()) +
                          " vs " + std::to_string(y.p()) + ":" + std::to_string(y.K()));
}

// inverse of a mod p for 0 < a < p, p prime
PadicInt::Digit inv_mod_p(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<PadicInt::Digit>(t);
}

}  // namespace

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PadicInt::PadicInt(unsigned p, unsigned K, std::vector<Digit> digits) : p_(p), d_(std::move(digits)) {
    if (p >= max_p || !is_prime(p)) throw DomainError("p must be a prime below 65536, got " + std::to_string(p));
    if (K == 0) throw DomainError("precision K must be at least 1");
    if (d_.size() > K) throw DomainError("more than K digits");
    d_.resize(K, 0);
    for (Digit d : d_)
        if (d >= p) throw DomainError("digit " + std::to_string(d) + " out of range for p=" + std::to_string(p));
}

PadicInt PadicInt::zero(unsigned p, unsigned K) { return PadicInt(p, K, {}); }
PadicInt PadicInt::one(unsigned p, unsigned K) { return PadicInt(p, K, {1}); }
PadicInt PadicInt::n_max(unsigned p, unsigned K) { return PadicInt(p, K, std::vector<Digit>(K, p - 1)); }

PadicInt PadicInt::from_integer(unsigned p, unsigned K, const BigInt& n) {
    BigInt m;
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, K);
    mpz_mod(m.get_mpz_t(), n.get_mpz_t(), pk.get_mpz_t());
    std::vector<Digit> d(K, 0);
    for (unsigned i = 0; i < K && m != 0; ++i) {
        d[i] = static_cast<Digit>(mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), p));
    }
    return PadicInt(p, K, std::move(d));
}

PadicInt PadicInt::from_rational(unsigned p, unsigned K, const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    return divide(from_integer(p, K, num), from_integer(p, K, den));
}

PadicInt PadicInt::parse(std::string_view text) {
    auto bad = [&] { return DomainError("malformed p-adic literal '" + std::string(text) + "'"); };
    auto c1 = text.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw bad();
    auto num = [&](std::string_view s) {
        unsigned long v = 0;
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw bad();
        return v;
    };
    unsigned p = static_cast<unsigned>(num(text.substr(0, c1)));
    unsigned K = static_cast<unsigned>(num(text.substr(c1 + 1, c2 - c1 - 1)));
    std::vector<Digit> d;
    std::string_view rest = text.substr(c2 + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        d.push_back(static_cast<Digit>(num(rest.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return PadicInt(p, K, std::move(d));
}

bool PadicInt::is_zero() const {
    for (Digit d : d_)
        if (d) return false;
    return true;
}

BigInt PadicInt::residue() const {
    BigInt r = 0;
    for (size_t i = d_.size(); i-- > 0;) r = r * p_ + d_[i];
    return r;
}

std::string PadicInt::str() const {
    std::string s = std::to_string(p_) + ":" + std::to_string(K()) + ":";
    for (size_t i = 0; i < d_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d_[i]);
    }
    return s;
}

PadicInt add(const PadicInt& x, const PadicInt& y) {
    check_compat(x, y);
    std::vector<PadicInt::Digit> r(x.K());
    std::uint64_t carry = 0;
    for (unsigned i = 0; i < x.K(); ++i) {
        std::uint64_t s = std::uint64_t(x.digit(i)) + y.digit(i) + carry;
        r[i] = static_cast<PadicInt::Digit>(s % x.p());
        carry = s / x.p();
    }
    return PadicInt(x.p(), x.K(), std::move(r));
}

PadicInt sub(const PadicInt& x, const PadicInt& y) {
    check_compat(x, y);
    std::vector<PadicInt::Digit> r(x.K());
    std::int64_t borrow = 0;
    for (unsigned i = 0; i < x.K(); ++i) {
        std::int64_t s = std::int64_t(x.digit(i)) - y.digit(i) - borrow;
        borrow = s < 0;
        if (s < 0) s += x.p();
        r[i] = static_cast<PadicInt::Digit>(s);
    }
    return PadicInt(x.p(), x.K(), std::move(r));
}

PadicInt neg(const PadicInt& x) { return sub(PadicInt::zero(x.p(), x.K()), x); }

PadicInt mul(const PadicInt& x, const PadicInt& y) {
    check_compat(x, y);
    const unsigned K = x.K();
    const std::uint64_t p = x.p();
    std::vector<std::uint64_t> acc(K, 0);
    for (unsigned i = 0; i < K; ++i) {
        if (!x.digit(i)) continue;
        std::uint64_t carry = 0;
        for (unsigned j = 0; i + j < K; ++j) {
            std::uint64_t s = acc[i + j] + std::uint64_t(x.digit(i)) * y.digit(j) + carry;
            acc[i + j] = s % p;
            carry = s / p;
        }
    }
    std::vector<PadicInt::Digit> r(acc.begin(), acc.end());
    return PadicInt(x.p(), K, std::move(r));
}

// Digit-by-digit long division: picks q_i so the running remainder gains a
// zero at position i, then subtracts q_i * y * p^i.
PadicInt divide(const PadicInt& x, const PadicInt& y) {
    check_compat(x, y);
    if (!y.invertible()) throw DomainError("division by a non-unit (digit0 = 0)");
    const unsigned K = x.K();
    const std::uint64_t p = x.p();
    const std::uint64_t y0inv = inv_mod_p(y.digit(0), p);
    std::vector<std::int64_t> rem(x.digits().begin(), x.digits().end());
    std::vector<PadicInt::Digit> q(K, 0);
    for (unsigned i = 0; i < K; ++i) {
        std::uint64_t qi = (static_cast<std::uint64_t>(rem[i]) * y0inv) % p;
        q[i] = static_cast<PadicInt::Digit>(qi);
        if (!qi) continue;
        std::int64_t borrow = 0;
        for (unsigned j = 0; i + j < K; ++j) {
            std::int64_t s = rem[i + j] - static_cast<std::int64_t>(qi * y.digit(j)) - borrow;
            borrow = 0;
            if (s < 0) {
                borrow = (-s + static_cast<std::int64_t>(p) - 1) / static_cast<std::int64_t>(p);
                s += borrow * static_cast<std::int64_t>(p);
            }
            rem[i + j] = s;
        }
    }
    return PadicInt(x.p(), K, std::move(q));
}

std::optional<PadicInt> inverse(const PadicInt& x) {
    if (!x.invertible()) return std::nullopt;
    return divide(PadicInt::one(x.p(), x.K()), x);
}

Order leq(const PadicInt& x, const PadicInt& y) {
    check_compat(x, y);
    bool le = true, ge = true;
    for (unsigned i = 0; i < x.K(); ++i) {
        le = le && x.digit(i) <= y.digit(i);
        ge = ge && x.digit(i) >= y.digit(i);
    }
    if (le && ge) return Order::EQ;
    if (le) return Order::LE;
    if (ge) return Order::GE;
    return Order::Incomparable;
}

PadicInt pmin(const PadicInt& x, const PadicInt& y) {
    check_compat(x, y);
    std::vector<PadicInt::Digit> r(x.K());
    for (unsigned i = 0; i < x.K(); ++i) r[i] = std::min(x.digit(i), y.digit(i));
    return PadicInt(x.p(), x.K(), std::move(r));
}

PadicInt pmax(const PadicInt& x, const PadicInt& y) {
    check_compat(x, y);
    std::vector<PadicInt::Digit> r(x.K());
    for (unsigned i = 0; i < x.K(); ++i) r[i] = std::max(x.digit(i), y.digit(i));
    return PadicInt(x.p(), x.K(), std::move(r));
}

PadicInt post_succ(const PadicInt& x) {
    std::vector<PadicInt::Digit> r(x.K());
    for (unsigned i = 0; i < x.K(); ++i) r[i] = (x.digit(i) + 1) % x.p();
    return PadicInt(x.p(), x.K(), std::move(r));
}

PadicNorm norm(const PadicInt& x) {
    for (unsigned i = 0; i < x.K(); ++i) {
        if (x.digit(i)) {
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), x.p(), i);
            return {Rat(1, den), false, i};
        }
    }
    return {Rat(0), true, x.K()};
}

bool is_natural_truncation(const PadicInt& x) {
    for (unsigned i = x.K() / 2 + 1; i < x.K(); ++i)
        if (x.digit(i)) return false;
    return true;
}

PadicInt floor_div(const PadicInt& x, const PadicInt& y) {
    check_compat(x, y);
    if (!is_natural_truncation(x) || !is_natural_truncation(y))
        throw DomainError("integral part of y/x needs natural truncations (upper digits zero)");
    if (y.is_zero()) throw DomainError("integral division by zero");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.residue().get_mpz_t(), y.residue().get_mpz_t());
    return PadicInt::from_integer(x.p(), x.K(), q);
}

}  // namespace mvl
