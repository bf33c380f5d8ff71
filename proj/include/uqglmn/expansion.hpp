#ifndef UQGLMN_EXPANSION_HPP
#define UQGLMN_EXPANSION_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>
#include <optional>
#include <utility>

#include "uqglmn/element.hpp"
#include "uqglmn/errors.hpp"
#include "uqglmn/signature.hpp"

namespace uqglmn {

/// Where a nonsimple E^a_b is split. `row` picks the pivot next to a,
/// `col` the pivot next to b.
enum class PivotRule { row, col };

struct PivotStrategy {
  PivotRule rule = PivotRule::row;
  // Pivot for the outermost split of every nonsimple generator it lies
  // strictly inside; deeper splits follow `rule`.
  std::optional<int> top_pivot;
};

inline int height_of(Letter const& l) { return l.height(); }

inline int default_pivot(int a, int b, PivotRule rule) {
  int const s = a > b ? 1 : -1;
  return rule == PivotRule::row ? a - s : b + s;
}

namespace detail {

  class Expander {
   public:
    Expander(Signature sig, PivotStrategy strategy) : sig_(sig), strategy_(strategy) {}

    Element const& generator(int a, int b, bool top) {
      auto const key = std::tuple{a, b, top};
      if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
      }
      Element out(sig_);
      if (std::abs(a - b) <= 1) {
        out.add_term({Letter::gen(a, b)}, 1);
      } else {
        int c = default_pivot(a, b, strategy_.rule);
        if (top && strategy_.top_pivot) {
          int const p = *strategy_.top_pivot;
          if (std::min(a, b) < p && p < std::max(a, b)) {
            c = p;
          }
        }
        // E^a_b = E^a_c E^c_b - q_c^{sign(a-b)} E^c_b E^a_c
        Element const left = generator(a, c, false);
        Element const right = generator(c, b, false);
        out = left * right;
        out.add_scaled(right * left, -q_index_power(c, a > b ? 1 : -1, sig_));
      }
      return cache_.emplace(key, std::move(out)).first->second;
    }

    Element word(Word const& w) {
      Element out = Element::identity(sig_);
      for (auto const& l : w) {
        if (l.is_cartan()) {
          out = out * Element::letter(sig_, l);
        } else {
          out = out * generator(l.row(), l.col(), true);
        }
      }
      return out;
    }

   private:
    Signature sig_;
    PivotStrategy strategy_;
    std::map<std::tuple<int, int, bool>, Element> cache_;
  };

}  // namespace detail

/// Recursively replaces every nonsimple generator by the defining
/// combination of lower-height generators, down to height one.
inline Element expand_ns(Element const& x, PivotStrategy strategy = {}) {
  detail::Expander ex(x.signature(), strategy);
  Element out(x.signature());
  for (auto const& [w, c] : x.terms()) {
    out.add_scaled(ex.word(w), c);
  }
  return out;
}

inline Element expand_generator(Signature sig, int a, int b, PivotStrategy strategy = {}) {
  return expand_ns(Element::generator(sig, a, b), strategy);
}

}  // namespace uqglmn

#endif  // UQGLMN_EXPANSION_HPP
