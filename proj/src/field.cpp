#include "chordal/field.hpp"

namespace chordal {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_u64(p) || p >= (std::uint64_t{1} << 31))
    throw std::runtime_error("field: modulus must be a prime below 2^31");
  return {Kind::prime, p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rational();
  std::string body;
  if (s.rfind("fp:", 0) == 0)
    body = s.substr(3);
  else if (!s.empty() && (s[0] == 'f' || s[0] == 'F'))
    body = s.substr(1);
  else
    throw std::runtime_error("field: cannot parse '" + s + "' (expect q, f2, f3 or fp:P)");
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    throw std::runtime_error("field: cannot parse '" + s + "'");
  return prime(std::stoull(body));
}

std::string FieldSpec::to_string() const {
  if (kind == Kind::rational) return "q";
  return "f" + std::to_string(p);
}

std::optional<PrimeField::Elem> PrimeField::parse(const std::string& s) const {
  // integers, possibly negative; also "a/b" reduced in the field
  auto parse_int = [&](const std::string& t) -> std::optional<Elem> {
    if (t.empty()) return std::nullopt;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size() || t.find_first_not_of("0123456789", i) != std::string::npos)
      return std::nullopt;
    Elem r = 0;
    for (std::size_t j = i; j < t.size(); ++j) r = (r * 10 + (t[j] - '0')) % p_;
    return t[0] == '-' ? neg(r) : r;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_int(s);
  auto num = parse_int(s.substr(0, slash));
  auto den = parse_int(s.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return div(*num, *den);
}

}  // namespace chordal
