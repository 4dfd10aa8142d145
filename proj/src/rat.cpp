#include "quasilin/rat.hpp"

#include <cctype>

namespace ql {

Rat Rat::parse(std::string_view s) {
  auto bad = [&] { throw ParseError("Rat: cannot parse '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto check_int = [&](std::string_view t) {
    if (t.empty()) bad();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
  };
  if (slash == std::string_view::npos) {
    check_int(s);
    return Rat(Int(std::string(s)));
  }
  std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
  check_int(p);
  check_int(q);
  return Rat(Int(std::string(p)), Int(std::string(q)));
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Int floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Int ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int isqrt_ceil(const Int& n) {
  Int r = isqrt(n);
  if (r * r < n) r += 1;
  return r;
}

}  // namespace ql
