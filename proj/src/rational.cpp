#include "graphcake/rational.h"

#include <cctype>
#include <ostream>

#include "graphcake/errors.h"

namespace graphcake {

namespace {

// Accepts -?digits or -?digits/digits; anything else is rejected before GMP
// sees it (GMP's own parser ignores embedded whitespace, which is too lax for
// instance files).
bool well_formed(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  return digits > 0 && i == s.size();
}

}  // namespace

Rat::Rat(long n, long d) : v_(n, d) {
  if (d == 0) throw ParseError("rational with zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  if (!well_formed(text)) {
    throw ParseError("bad rational literal: '" + std::string(text) + "'");
  }
  mpq_class q(std::string(text), 10);
  if (sgn(q.get_den()) == 0) {
    throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const { return v_.get_str(); }

std::size_t Rat::den_bits() const {
  return mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
}

std::size_t Rat::num_bits() const {
  return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_.get_str(); }

}  // namespace graphcake
