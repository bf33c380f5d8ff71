#ifndef UQGLMN_ELEMENT_HPP
#define UQGLMN_ELEMENT_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "uqglmn/coefficient.hpp"
#include "uqglmn/errors.hpp"
#include "uqglmn/signature.hpp"

namespace uqglmn {

enum class LetterKind : std::uint8_t { generator, cartan };

/// One letter of a word: either a non-Cartan generator E^row_col, or a
/// Cartan power K_index^(halves/2).
struct Letter {
  LetterKind kind = LetterKind::generator;
  int first = 0;
  int second = 0;

  static constexpr Letter gen(int row, int col) { return {LetterKind::generator, row, col}; }
  static constexpr Letter cartan(int index, int halves) {
    return {LetterKind::cartan, index, halves};
  }

  constexpr bool is_cartan() const noexcept { return kind == LetterKind::cartan; }
  constexpr bool is_generator() const noexcept { return kind == LetterKind::generator; }

  constexpr int row() const noexcept { return first; }
  constexpr int col() const noexcept { return second; }
  constexpr int index() const noexcept { return first; }
  constexpr int halves() const noexcept { return second; }

  constexpr bool is_raising() const noexcept { return is_generator() && first < second; }
  constexpr bool is_lowering() const noexcept { return is_generator() && first > second; }

  // |row - col|; Cartans have height zero.
  constexpr int height() const noexcept { return is_cartan() ? 0 : std::abs(first - second); }

  friend constexpr auto operator<=>(Letter const&, Letter const&) = default;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept {
    std::size_t h = w.size();
    for (auto const& l : w) {
      h = h * 1000003u + (static_cast<std::size_t>(l.kind) << 20) +
          (static_cast<std::size_t>(l.first) << 10) +
          static_cast<std::size_t>(l.second + 512);
    }
    return h;
  }
};

/// Deterministic order of monomial keys: longer non-Cartan content first,
/// then lexicographic on letters.
struct WordLess {
  static std::size_t generator_count(Word const& w) {
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [](Letter const& l) { return l.is_generator(); }));
  }

  bool operator()(Word const& a, Word const& b) const {
    auto const ga = generator_count(a);
    auto const gb = generator_count(b);
    if (ga != gb) {
      return ga > gb;
    }
    return a < b;
  }
};

inline void check_letter(Letter const& l, Signature const& sig) {
  sig.check_index(l.first);
  if (l.is_generator()) {
    sig.check_index(l.second);
    if (l.first == l.second) {
      throw IndexOutOfRange("generator E[" + std::to_string(l.first) + "," +
                            std::to_string(l.second) + "] requires distinct indices");
    }
  }
}

/// Z_2 grading of a letter: [E^a_b] = [a] + [b], [K_a] = 0.
inline int grade_of(Letter const& l, Signature const& sig) {
  if (l.is_cartan()) {
    return 0;
  }
  return (sig.grade(l.row()) + sig.grade(l.col())) % 2;
}

inline int grade_of(Word const& w, Signature const& sig) {
  int g = 0;
  for (auto const& l : w) {
    g ^= grade_of(l, sig);
  }
  return g;
}

/// gl-weight: sum over non-Cartan letters of (e_row - e_col); entry i is the
/// component for index i + 1.
inline std::vector<int> weight_of(Word const& w, Signature const& sig) {
  std::vector<int> weight(static_cast<std::size_t>(sig.size()), 0);
  for (auto const& l : w) {
    if (l.is_generator()) {
      ++weight[static_cast<std::size_t>(l.row() - 1)];
      --weight[static_cast<std::size_t>(l.col() - 1)];
    }
  }
  return weight;
}

/// A finite linear combination of words with nonzero rational coefficients.
///
/// Words are raw: letters keep the order in which they were multiplied, and
/// Cartan powers may sit anywhere. The normal form produced by the
/// normalizer is a particular shape of word.
class Element {
 public:
  using Terms = std::map<Word, Coefficient, WordLess>;

  explicit Element(Signature sig) : sig_(sig) {}

  static Element identity(Signature sig) { return scalar(sig, 1); }

  static Element scalar(Signature sig, Coefficient c) {
    Element e(sig);
    e.add_term({}, c);
    return e;
  }

  static Element monomial(Signature sig, Coefficient c, Word const& word) {
    Element e(sig);
    Word w;
    w.reserve(word.size());
    for (auto const& l : word) {
      check_letter(l, sig);
      if (!(l.is_cartan() && l.halves() == 0)) {
        w.push_back(l);
      }
    }
    e.add_term(w, c);
    return e;
  }

  static Element letter(Signature sig, Letter l) { return monomial(sig, 1, {l}); }

  static Element generator(Signature sig, int row, int col) {
    return letter(sig, Letter::gen(row, col));
  }

  static Element cartan(Signature sig, int index, int halves = 2) {
    return letter(sig, Letter::cartan(index, halves));
  }

  Signature const& signature() const noexcept { return sig_; }
  Terms const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  Coefficient scalar_value() const {
    auto it = terms_.find(Word{});
    return it == terms_.end() ? Coefficient() : it->second;
  }

  /// Accumulates c * word, dropping the entry if it cancels. Letters are not
  /// validated here.
  void add_term(Word const& word, Coefficient const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  void add_scaled(Element const& other, Coefficient const& c) {
    check_same(other);
    if (c.is_zero()) {
      return;
    }
    for (auto const& [w, d] : other.terms_) {
      add_term(w, c.is_one() ? d : c * d);
    }
  }

  Element& operator+=(Element const& other) {
    add_scaled(other, 1);
    return *this;
  }

  Element& operator-=(Element const& other) {
    add_scaled(other, -1);
    return *this;
  }

  friend Element operator+(Element a, Element const& b) { return a += b; }
  friend Element operator-(Element a, Element const& b) { return a -= b; }

  Element operator-() const {
    Element e(sig_);
    e.add_scaled(*this, -1);
    return e;
  }

  friend Element operator*(Coefficient const& c, Element const& x) {
    Element e(x.sig_);
    e.add_scaled(x, c);
    return e;
  }

  /// Free product: words concatenate, no relations are applied.
  friend Element operator*(Element const& x, Element const& y) {
    x.check_same(y);
    Element e(x.sig_);
    for (auto const& [wx, cx] : x.terms_) {
      for (auto const& [wy, cy] : y.terms_) {
        Word w;
        w.reserve(wx.size() + wy.size());
        w.insert(w.end(), wx.begin(), wx.end());
        w.insert(w.end(), wy.begin(), wy.end());
        e.add_term(w, cx * cy);
      }
    }
    return e;
  }

  friend bool operator==(Element const& a, Element const& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  void check_same(Element const& other) const {
    if (!(sig_ == other.sig_)) {
      throw SignatureMismatch();
    }
  }

 private:
  Signature sig_;
  Terms terms_;
};

inline Element multiply(Element const& x, Element const& y) { return x * y; }

/// Z_2 grading of an element, or nullopt if it mixes gradings. The zero
/// element reports grading 0.
inline std::optional<int> grade_of(Element const& x) {
  std::optional<int> g;
  for (auto const& [w, c] : x.terms()) {
    int const gw = grade_of(w, x.signature());
    if (g && *g != gw) {
      return std::nullopt;
    }
    g = gw;
  }
  return g.value_or(0);
}

/// [x, y] = xy - (-1)^{[x][y]} yx, extended bilinearly over the monomials of
/// x and y.
inline Element graded_commutator(Element const& x, Element const& y) {
  x.check_same(y);
  Signature const& sig = x.signature();
  Element out(sig);
  for (auto const& [wx, cx] : x.terms()) {
    int const gx = grade_of(wx, sig);
    for (auto const& [wy, cy] : y.terms()) {
      int const gy = grade_of(wy, sig);
      Coefficient const c = cx * cy;
      Word w(wx);
      w.insert(w.end(), wy.begin(), wy.end());
      out.add_term(w, c);
      Word v(wy);
      v.insert(v.end(), wx.begin(), wx.end());
      out.add_term(v, -Coefficient(parity_sign(gx * gy)) * c);
    }
  }
  return out;
}

/// omega on one letter: E^a_b -> E^b_a, K_a^N -> K_a^-N.
inline Letter omega(Letter const& l) {
  return l.is_cartan() ? Letter::cartan(l.index(), -l.halves()) : Letter::gen(l.col(), l.row());
}

/// The ungraded antiautomorphism: reverses words, transposes generators,
/// inverts Cartan powers and bars coefficients.
inline Element omega(Element const& x) {
  Element out(x.signature());
  for (auto const& [w, c] : x.terms()) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      r.push_back(omega(*it));
    }
    out.add_term(r, c.bar());
  }
  return out;
}

}  // namespace uqglmn

#endif  // UQGLMN_ELEMENT_HPP
