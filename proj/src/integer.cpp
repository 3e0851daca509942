#include "mappeel/integer.hpp"

#include "mappeel/errors.hpp"

namespace mappeel {

Integer exact_divide(const Integer& v, const Integer& d) {
  if (d == 0) throw DomainError("exact_divide: division by zero");
  if (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) == 0)
    throw IntegrityError("exact_divide: " + v.get_str() + " is not divisible by " + d.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

Integer integer_from_string(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError("not a decimal integer: '" + s + "'");
  return v;
}

}  // namespace mappeel
