#pragma once

#include "mvl/common.hpp"
#include "mvl/value.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace mvl {

// Vague value: membership bounded by [t, 1-f].
struct VagueValue {
    Rat t, f;
    static VagueValue make(const Rat& t, const Rat& f);
    bool operator==(const VagueValue& o) const { return t == o.t && f == o.f; }
};

enum class VagueOp { Neg, And, Or };
VagueValue vague_op(VagueOp op, const VagueValue& x, const VagueValue& y);
VagueValue vague_op(VagueOp op, const VagueValue& x);

struct Interval {
    Rat lo, hi;
    static Interval point(const Rat& q) { return {q, q}; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool degenerate() const { return lo == hi; }
};

enum class IntervalOp { Add, Sub, Mul, Min, Max, ScalarAdd };
// ScalarAdd expects a degenerate first argument.
Interval interval_combine(IntervalOp op, const Interval& a, const Interval& b);
Interval one_minus(const Interval& a);
Interval clip_unit(const Interval& a);

struct NeutroInterval {
    Interval t;
    std::optional<Interval> i;  // nullopt is the empty indeterminacy
    Interval f;
    static NeutroInterval make(Interval t, std::optional<Interval> i, Interval f);
    bool operator==(const NeutroInterval& o) const { return t == o.t && i == o.i && f == o.f; }
};

// "<t_lo,t_hi | i_lo,i_hi | f_lo,f_hi>", with "empty" or "∅" for i.
NeutroInterval parse_neutro(std::string_view text);
std::string neutro_str(const NeutroInterval& a);

enum class Flavor { L, G, Pi };

NeutroInterval neutro_complement(Flavor fl, const NeutroInterval& a);
NeutroInterval neutro_implication(Flavor fl, const NeutroInterval& a, const NeutroInterval& b);
NeutroInterval neutro_intersection(Flavor fl, const NeutroInterval& a, const NeutroInterval& b);

// Point-valued p-adic variants: 1 becomes N_max.
PadicTriple neutro_complement(Flavor fl, const PadicTriple& a);
PadicTriple neutro_implication(Flavor fl, const PadicTriple& a, const PadicTriple& b);
PadicTriple neutro_intersection(Flavor fl, const PadicTriple& a, const PadicTriple& b);

std::string classify_interval_neutro(const NeutroInterval& a);

enum class InlConn { Neg, Imp, And, Or };

HyperTriple inl_apply(InlConn c, const HyperTriple& a, const HyperTriple& b);
HyperTriple inl_apply(InlConn c, const HyperTriple& a);
PadicTriple inl_apply(InlConn c, const PadicTriple& a, const PadicTriple& b);
PadicTriple inl_apply(InlConn c, const PadicTriple& a);
// (a -> b) and (b -> a)
HyperTriple inl_iff(const HyperTriple& a, const HyperTriple& b);
PadicTriple inl_iff(const PadicTriple& a, const PadicTriple& b);

bool inl_designated(const HyperTriple& a);
bool inl_designated(const PadicTriple& a);

HyperTriple parse_hyper_triple(std::string_view text);
// Components are p:K:digits literals separated by ';', or plain rationals
// when p and K are supplied.
PadicTriple parse_padic_triple(std::string_view text, unsigned p = 0, unsigned K = 0);

}  // namespace mvl
