#pragma once

#include "mvl/common.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

// Standard rational, or a nonstandard value sampled on a finite window.
class HyperValue {
public:
    static HyperValue standard(const Rat& q);
    // A constant window collapses to its Standard value.
    static HyperValue window(std::vector<Rat> seq);
    // "std 1/2", "win [1/2,1/3]", or a bare rational.
    static HyperValue parse(std::string_view text);

    bool is_standard() const { return w_.size() == 1; }
    const Rat& standard_value() const;
    const std::vector<Rat>& entries() const { return w_; }
    size_t width() const { return is_standard() ? 0 : w_.size(); }
    const Rat& at(size_t i) const { return is_standard() ? w_[0] : w_.at(i); }

    std::string str() const;
    bool operator==(const HyperValue& o) const { return w_ == o.w_; }
    bool operator!=(const HyperValue& o) const { return !(*this == o); }

private:
    explicit HyperValue(std::vector<Rat> w) : w_(std::move(w)) {}
    std::vector<Rat> w_;
};

Order hleq(const HyperValue& a, const HyperValue& b);
HyperValue hmin(const HyperValue& a, const HyperValue& b);
HyperValue hmax(const HyperValue& a, const HyperValue& b);

// Pointwise lifting; standards act as constant windows. Each result entry
// must land in [0,1].
HyperValue pointwise(const HyperValue& a, const HyperValue& b, const std::function<Rat(const Rat&, const Rat&)>& f);
HyperValue pointwise(const HyperValue& a, const std::function<Rat(const Rat&)>& f);

enum class HOp { OneMinus, Add, Mul, ImpL, DivClip, Monus };
// OneMinus: 1-x; Add: x+y; Mul: x*y; ImpL: min(1,1-x+y); DivClip: min(1,y/x);
// Monus: max(0,x-y). Only the single-argument op ignores b.
HyperValue hyper_arith(HOp op, const HyperValue& a, const HyperValue& b);
HyperValue hyper_arith(HOp op, const HyperValue& a);

struct HyperPowerSet {
    unsigned n = 0;
    // Each element is a monotone set of Venn regions; region r (1..2^n-1)
    // is the nonempty atom pattern with bit k set iff inside theta_{k+1}.
    std::vector<std::uint32_t> elements;
    std::vector<std::string> exprs;
    size_t cardinality() const { return elements.size(); }
};

HyperPowerSet hyperpower_set(unsigned n);
std::string dsm_expr(unsigned n, std::uint32_t element);

}  // namespace mvl
