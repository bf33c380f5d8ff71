#ifndef UQGLMN_SIGNATURE_HPP
#define UQGLMN_SIGNATURE_HPP

#include <compare>
#include <string>

#include "uqglmn/coefficient.hpp"
#include "uqglmn/errors.hpp"

namespace uqglmn {

/// The pair (m, n) of U_q[gl(m|n)]. Indices run over 1..m+n; index a is
/// even for a <= m and odd otherwise.
class Signature {
 public:
  Signature(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) {
      throw InvalidSignature("signature requires m >= 1 and n >= 1, got m=" +
                             std::to_string(m) + ", n=" + std::to_string(n));
    }
  }

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int size() const noexcept { return m_ + n_; }

  bool contains(int a) const noexcept { return a >= 1 && a <= size(); }

  void check_index(int a) const {
    if (!contains(a)) {
      throw IndexOutOfRange("index " + std::to_string(a) + " outside 1.." +
                            std::to_string(size()));
    }
  }

  /// Z_2 grading [a] of an index.
  int grade(int a) const {
    check_index(a);
    return a > m_ ? 1 : 0;
  }

  std::string to_string() const {
    return "gl(" + std::to_string(m_) + "|" + std::to_string(n_) + ")";
  }

  friend bool operator==(Signature const&, Signature const&) = default;
  friend auto operator<=>(Signature const&, Signature const&) = default;

 private:
  int m_;
  int n_;
};

/// (-1)^k for an integer k.
inline int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

/// q_a = q^{(-1)^[a]}, raised to the power k.
inline Coefficient q_index_power(int a, int k, Signature const& sig) {
  return Coefficient::q_power(parity_sign(sig.grade(a)) * k);
}

/// q_a
inline Coefficient q_index(int a, Signature const& sig) { return q_index_power(a, 1, sig); }

/// Delta_a = q_a - q_a^-1 = (-1)^[a] (q - q^-1)
inline Coefficient delta_index(int a, Signature const& sig) {
  return Coefficient(parity_sign(sig.grade(a))) * Coefficient::delta();
}

/// Delta_a^-1
inline Coefficient delta_index_inverse(int a, Signature const& sig) {
  return delta_index(a, sig).inverse();
}

}  // namespace uqglmn

#endif  // UQGLMN_SIGNATURE_HPP
