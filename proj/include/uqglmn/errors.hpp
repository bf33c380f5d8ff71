#ifndef UQGLMN_ERRORS_HPP
#define UQGLMN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace uqglmn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class InvalidSignature : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("elements belong to different signatures") {}
};

// Raised when a half-integer Cartan power would need a half-integer power of q.
class HalfIntegerPower : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The rewrite-step budget of the normalizer ran out; carries the monomial
// being straightened at the time.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::string monomial)
      : Error("rewrite budget exceeded while normalizing " + monomial),
        monomial_(std::move(monomial)) {}

  std::string const& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

}  // namespace uqglmn

#endif  // UQGLMN_ERRORS_HPP
