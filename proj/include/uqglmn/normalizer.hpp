#ifndef UQGLMN_NORMALIZER_HPP
#define UQGLMN_NORMALIZER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "uqglmn/element.hpp"
#include "uqglmn/errors.hpp"
#include "uqglmn/rulebook.hpp"
#include "uqglmn/signature.hpp"

namespace uqglmn {

/// Straightening settings.
///
/// The order convention is fixed: lowering letters, then the Cartan block,
/// then raising letters. Lowering E^a_b (a > b) are sorted by (b, a),
/// raising E^a_b (a < b) by (a, b), both lexicographically; Cartan letters
/// by index, one per index.
struct NormalOrderConfig {
  std::size_t max_rewrite_steps = 20'000'000;
};

namespace order {

  // 0 lowering, 1 Cartan, 2 raising
  inline int block(Letter const& l) {
    if (l.is_cartan()) {
      return 1;
    }
    return l.is_lowering() ? 0 : 2;
  }

  inline std::pair<int, int> key(Letter const& l) {
    if (l.is_cartan()) {
      return {l.index(), 0};
    }
    return l.is_lowering() ? std::pair{l.col(), l.row()} : std::pair{l.row(), l.col()};
  }

  /// Whether x may directly precede y in a normal word.
  inline bool in_order(Letter const& x, Letter const& y, Signature const& sig) {
    int const bx = block(x), by = block(y);
    if (bx != by) {
      return bx < by;
    }
    if (x.is_cartan()) {
      return x.index() < y.index();
    }
    auto const kx = key(x), ky = key(y);
    if (kx != ky) {
      return kx < ky;
    }
    return grade_of(x, sig) == 0;
  }

}  // namespace order

inline bool is_normal_word(Word const& w, Signature const& sig) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_cartan() && w[i].halves() == 0) {
      return false;
    }
    if (i + 1 < w.size() && !order::in_order(w[i], w[i + 1], sig)) {
      return false;
    }
  }
  return true;
}

/// True iff every monomial is in normal order with a merged Cartan block and
/// no repeated odd letter.
inline bool is_normal(Element const& x) {
  for (auto const& [w, c] : x.terms()) {
    if (!is_normal_word(w, x.signature())) {
      return false;
    }
  }
  return true;
}

/// PBW straightening with memoized word normalization.
///
/// A word is normalized by first normalizing its tail, then pushing the head
/// letter rightward via the exchange rules; correction terms are normalized
/// recursively. The cache makes an instance stateful, so use one instance
/// per thread.
class Normalizer {
 public:
  explicit Normalizer(Signature sig, NormalOrderConfig cfg = {}) : sig_(sig), cfg_(cfg) {}

  Signature const& signature() const noexcept { return sig_; }
  NormalOrderConfig const& config() const noexcept { return cfg_; }

  /// Number of rewrite steps taken by the latest normal_order call.
  std::size_t steps() const noexcept { return steps_; }

  Element normal_order(Element const& x) {
    if (!(x.signature() == sig_)) {
      throw SignatureMismatch();
    }
    steps_ = 0;
    Element out(sig_);
    for (auto const& [w, c] : x.terms()) {
      out.add_scaled(normalize_word(strip_identity(w)), c);
    }
    return out;
  }

  void clear_cache() {
    memo_.clear();
    exchanges_.clear();
  }

 private:
  static Word strip_identity(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto const& l : w) {
      if (!(l.is_cartan() && l.halves() == 0)) {
        out.push_back(l);
      }
    }
    return out;
  }

  struct PairHash {
    std::size_t operator()(std::pair<Letter, Letter> const& p) const noexcept {
      return WordHash{}(Word{p.first, p.second});
    }
  };

  ExchangeParts const& exchange_for(Letter x, Letter y) {
    auto it = exchanges_.find({x, y});
    if (it == exchanges_.end()) {
      it = exchanges_.emplace(std::pair{x, y}, exchange_parts(x, y, sig_)).first;
    }
    return it->second;
  }

  void count_step(Word const& w) {
    if (++steps_ > cfg_.max_rewrite_steps) {
      throw BudgetExceeded(describe(w));
    }
  }

  static std::string describe(Word const& w) {
    std::string s;
    for (auto const& l : w) {
      if (!s.empty()) {
        s += '*';
      }
      if (l.is_cartan()) {
        s += "K[" + std::to_string(l.index()) + "]^(" + std::to_string(l.halves()) + "/2)";
      } else {
        s += "E[" + std::to_string(l.row()) + "," + std::to_string(l.col()) + "]";
      }
    }
    return s.empty() ? "1" : s;
  }

  // Folds the Cartan letter k into the leading Cartan block of a normal word.
  static Word merge_cartan(Letter k, Word const& normal) {
    Word out;
    out.reserve(normal.size() + 1);
    bool placed = false;
    std::size_t i = 0;
    for (; i < normal.size() && normal[i].is_cartan(); ++i) {
      Letter const& l = normal[i];
      if (!placed && l.index() == k.index()) {
        int const h = l.halves() + k.halves();
        if (h != 0) {
          out.push_back(Letter::cartan(k.index(), h));
        }
        placed = true;
      } else {
        if (!placed && k.index() < l.index()) {
          out.push_back(k);
          placed = true;
        }
        out.push_back(l);
      }
    }
    if (!placed) {
      out.push_back(k);
    }
    out.insert(out.end(), normal.begin() + static_cast<std::ptrdiff_t>(i), normal.end());
    return out;
  }

  Element const& normalize_word(Word const& w) {
    if (auto it = memo_.find(w); it != memo_.end()) {
      return it->second;
    }
    Element result(sig_);
    if (is_normal_word(w, sig_)) {
      result.add_term(w, 1);
      return memo_.emplace(w, std::move(result)).first->second;
    }
    if (!active_.insert(w).second) {
      throw BudgetExceeded(describe(w));  // rewriting cycled back to this word
    }
    struct Release {
      std::unordered_set<Word, WordHash>& set;
      Word const& word;
      ~Release() { set.erase(word); }
    } release{active_, w};

    Letter const head = w.front();
    Word const tail(w.begin() + 1, w.end());

    if (!is_normal_word(tail, sig_)) {
      Element const straightened = normalize_word(tail);
      for (auto const& [t, c] : straightened.terms()) {
        Word next;
        next.reserve(t.size() + 1);
        next.push_back(head);
        next.insert(next.end(), t.begin(), t.end());
        result.add_scaled(normalize_word(next), c);
      }
    } else {
      // tail is normal, so the only disorder is the leading pair
      count_step(w);
      Letter const second = tail.front();
      if (head.is_cartan() && second.is_cartan()) {
        result.add_term(merge_cartan(head, tail), 1);
      } else {
        ExchangeParts const parts = exchange_for(head, second);
        if (!parts.factor.is_zero()) {
          Word swapped(w);
          std::swap(swapped[0], swapped[1]);
          result.add_scaled(normalize_word(swapped), parts.factor);
        }
        for (auto const& [r, c] : parts.correction.terms()) {
          Word next(r);
          next.insert(next.end(), w.begin() + 2, w.end());
          result.add_scaled(normalize_word(next), c);
        }
      }
    }
    return memo_.emplace(w, std::move(result)).first->second;
  }

  Signature sig_;
  NormalOrderConfig cfg_;
  std::size_t steps_ = 0;
  std::unordered_map<Word, Element, WordHash> memo_;
  std::unordered_map<std::pair<Letter, Letter>, ExchangeParts, PairHash> exchanges_;
  std::unordered_set<Word, WordHash> active_;
};

/// One-shot straightening of a raw element.
inline Element normal_order(Element const& x, NormalOrderConfig cfg = {}) {
  Normalizer n(x.signature(), cfg);
  return n.normal_order(x);
}

}  // namespace uqglmn

#endif  // UQGLMN_NORMALIZER_HPP
