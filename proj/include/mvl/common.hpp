#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mvl {

using Rat = mpq_class;
using BigInt = mpz_class;

// Outcome of comparing two values under a (possibly partial) order.
enum class Order { LE, GE, EQ, Incomparable };

const char* order_name(Order o);

// Raised for operations outside their domain: partial ops, precision or
// window mismatches, malformed values. The CLI maps it to exit code 3.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& q);

}  // namespace mvl
