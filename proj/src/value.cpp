#include "mvl/value.hpp"

namespace mvl {

std::string value_str(const Value& v) {
    struct {
        std::string operator()(Level l) const { return std::to_string(l); }
        std::string operator()(const Rat& q) const { return q.get_str(); }
        std::string operator()(const PadicInt& x) const { return x.str(); }
        std::string operator()(const HyperValue& h) const { return h.str(); }
        std::string operator()(const HyperTriple& t) const {
            return "<" + t.t.str() + ", " + t.i.str() + ", " + t.f.str() + ">";
        }
        std::string operator()(const PadicTriple& t) const {
            return "<" + t.t.str() + ", " + t.i.str() + ", " + t.f.str() + ">";
        }
    } visit;
    return std::visit(visit, v);
}

bool value_eq(const Value& a, const Value& b) { return a == b; }

}  // namespace mvl
