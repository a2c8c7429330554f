#include "core/numeric.hpp"

#include "core/errors.hpp"

namespace modstab {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer factorial(int n) {
  if (n < 0) throw ContractViolation("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(long x, int k) {
  if (k < 0) return 0;
  Integer result;
  if (x >= 0) {
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(k));
  } else {
    Integer base = x;
    mpz_bin_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return result;
}

}  // namespace modstab
