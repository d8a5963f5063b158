#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace thrcnf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// 64-bit binomial; throws InputError on overflow.
std::uint64_t binomial_u64(unsigned n, unsigned k);

BigInt ipow(const BigInt& base, unsigned exp);

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Narrowing conversion; throws InputError if v does not fit.
std::uint64_t to_u64(const BigInt& v);

/// Reduced fraction with positive denominator, parsed from "p/q" or "p".
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio parse(const std::string& text);
  static Ratio make(std::int64_t num, std::int64_t den);
  std::string str() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Ratio&) const = default;
};

}  // namespace thrcnf
