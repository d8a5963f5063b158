#include "formula/bigint.hpp"

#include "formula/errors.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace thrcnf {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  return to_u64(binomial(n, k));
}

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw InputError("value " + v.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

Ratio Ratio::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Ratio{num, den};
}

Ratio Ratio::parse(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw InputError("malformed rational '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return make(parse_int(text), 1);
  const std::string_view sv(text);
  return make(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

std::string Ratio::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace thrcnf
