#ifndef FIBOTOMIC_ERRORS_HPP
#define FIBOTOMIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibotomic {

// Failure kinds raised by the library. Verification routines report theorem
// mismatches through their result objects; exceptions are reserved for
// contract violations and states the algebra rules out.
enum class errc {
  not_coprime,
  not_prime,
  modulus_mismatch,
  inexact_division,
  odd_term_present,
  not_real_result,
  not_integral,
  zero_polynomial,
  degree_too_small,
  domain_too_small,
  bad_range,
  bad_input,
  not_monic,
  not_invertible,
  internal_invariant_violation,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace fibotomic

#endif
