#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsp4ad {

// Exact rational scalar. mpq_class keeps values canonical through arithmetic,
// but raw num/den construction does not, hence the factory below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw std::domain_error("to_long: not a machine integer");
  return r.get_num().get_si();
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q" with nonzero q; anything else is rejected.
inline std::optional<Rat> parse_rat(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    neg = num[0] == '-';
    num.remove_prefix(1);
  }
  if (!digits(num) || !digits(den)) return std::nullopt;
  Rat r(std::string(num) + "/" + std::string(den));
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

inline Rat pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::domain_error("pow: 0^negative");
  Rat acc(1), b = e > 0 ? base : Rat(1 / base);
  for (long n = std::labs(e); n > 0; n >>= 1) {
    if (n & 1) acc *= b;
    if (n > 1) b *= b;
  }
  return acc;
}

}  // namespace gsp4ad
