#pragma once

#include "mvl/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

// Truncated p-adic integer: K little-endian base-p digits.
class PadicInt {
public:
    using Digit = std::uint32_t;

    PadicInt(unsigned p, unsigned K, std::vector<Digit> digits);

    static PadicInt zero(unsigned p, unsigned K);
    static PadicInt one(unsigned p, unsigned K);
    static PadicInt n_max(unsigned p, unsigned K);
    // n mod p^K; negative n wraps around.
    static PadicInt from_integer(unsigned p, unsigned K, const BigInt& n);
    // num/den in Z_p by long division; den must be prime to p.
    static PadicInt from_rational(unsigned p, unsigned K, const BigInt& num, const BigInt& den);
    // "p:K:d0,d1,...". Fewer than K digits are zero-padded.
    static PadicInt parse(std::string_view text);

    unsigned p() const { return p_; }
    unsigned K() const { return static_cast<unsigned>(d_.size()); }
    const std::vector<Digit>& digits() const { return d_; }
    Digit digit(unsigned i) const { return d_[i]; }

    bool is_zero() const;
    bool invertible() const { return d_[0] != 0; }
    // Representative in [0, p^K).
    BigInt residue() const;
    std::string str() const;

    bool operator==(const PadicInt& o) const { return p_ == o.p_ && d_ == o.d_; }
    bool operator!=(const PadicInt& o) const { return !(*this == o); }

private:
    unsigned p_;
    std::vector<Digit> d_;
};

struct PadicNorm {
    Rat value;  // 0 or p^-L
    bool saturated = false;  // every stored digit was zero
    unsigned L = 0;
};

bool is_prime(unsigned long n);

PadicInt add(const PadicInt& x, const PadicInt& y);
PadicInt sub(const PadicInt& x, const PadicInt& y);
PadicInt mul(const PadicInt& x, const PadicInt& y);
PadicInt neg(const PadicInt& x);
std::optional<PadicInt> inverse(const PadicInt& x);
// x * y^-1; throws DomainError when y is not a unit.
PadicInt divide(const PadicInt& x, const PadicInt& y);

Order leq(const PadicInt& x, const PadicInt& y);
PadicInt pmin(const PadicInt& x, const PadicInt& y);
PadicInt pmax(const PadicInt& x, const PadicInt& y);
PadicInt post_succ(const PadicInt& x);
PadicNorm norm(const PadicInt& x);

// True when the upper half of the digits (index > K/2) is zero, i.e. the
// truncation is read as an ordinary natural number.
bool is_natural_truncation(const PadicInt& x);
// floor(x / y) on natural truncations; throws otherwise or when y = 0.
PadicInt floor_div(const PadicInt& x, const PadicInt& y);

}  // namespace mvl
