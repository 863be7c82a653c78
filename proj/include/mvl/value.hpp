#pragma once

#include "mvl/common.hpp"
#include "mvl/hyper.hpp"
#include "mvl/padic.hpp"

#include <string>
#include <variant>

namespace mvl {

struct HyperTriple {
    HyperValue t, i, f;
    bool operator==(const HyperTriple& o) const { return t == o.t && i == o.i && f == o.f; }
};

struct PadicTriple {
    PadicInt t, i, f;
    bool operator==(const PadicTriple& o) const { return t == o.t && i == o.i && f == o.f; }
};

using Level = unsigned;

// Truth value over any of the supported domains.
using Value = std::variant<Level, Rat, PadicInt, HyperValue, HyperTriple, PadicTriple>;

std::string value_str(const Value& v);
bool value_eq(const Value& a, const Value& b);

template <class T>
const T& as(const Value& v) {
    if (auto* p = std::get_if<T>(&v)) return *p;
    throw DomainError("truth value of the wrong domain: " + value_str(v));
}

}  // namespace mvl
