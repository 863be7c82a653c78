#include "mvl/common.hpp"

#include <algorithm>
#include <cctype>

namespace mvl {

const char* order_name(Order o) {
    switch (o) {
    case Order::LE: return "LE";
    case Order::GE: return "GE";
    case Order::EQ: return "EQ";
    case Order::Incomparable: return "Incomparable";
    }
    return "?";
}

// Accepts integers, fractions "a/b" and finite decimals "0.25".
Rat parse_rat(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&] { return DomainError("malformed rational '" + raw + "'"); };
    if (s.empty()) throw bad();
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        size_t i = allow_sign && !t.empty() && t[0] == '-' ? 1 : 0;
        return i < t.size() && std::all_of(t.begin() + i, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        if (!digits_ok(ip, false) || !digits_ok(fp, false)) throw bad();
        BigInt den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rat q(BigInt(ip + fp), den);
        q.canonicalize();
        return neg ? Rat(-q) : q;
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    BigInt d(den);
    if (d == 0) throw DomainError("zero denominator in '" + raw + "'");
    Rat q(BigInt(num), d);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace mvl
