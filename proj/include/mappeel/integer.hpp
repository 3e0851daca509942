#pragma once

#include <gmpxx.h>

#include <string>

namespace mappeel {

using Integer = mpz_class;

// Divides v by d, throwing IntegrityError when d does not divide v.
Integer exact_divide(const Integer& v, const Integer& d);

std::string to_string(const Integer& v);
Integer integer_from_string(const std::string& s);

}  // namespace mappeel
