#ifndef UQGLMN_RULEBOOK_HPP
#define UQGLMN_RULEBOOK_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uqglmn/coefficient.hpp"
#include "uqglmn/element.hpp"
#include "uqglmn/errors.hpp"
#include "uqglmn/signature.hpp"

namespace uqglmn {

/// Exchange-rule cases. The first block is the dispatch table used by the
/// normalizer; the second block names relations that are only checked as
/// theorems of the rule system.
enum class CaseId {
  // dispatch
  E4,          // Cartan with Cartan
  E11,         // Cartan power with any non-Cartan generator
  E8,          // odd generator squared
  EvenSquare,  // even generator with itself
  E17,         // [E^a_b, E^b_a]
  E1,          // E^a_c E^c_b with c strictly between a and b (definition)
  E18a, E18b, E18c, E18d,
  E19,  // shared row or column strictly between the other two indices
  E20a, E20b, E20c, E20d,
  E21,  // four distinct indices, disjoint or nested intervals
  E22a, E22b, E22c, E22d,
  E23a, E23b, E23c, E23d,
  // verification only
  E12a, E12b, E13a, E13b,
  E9a, E9b, E9c, E9d, SerreCross,
  OddSquare,  // (E^a_b)^2 = 0 for [a] != [b], any height
  Kappa,      // condensed q-commutation form
  Table8,     // condensed four-index commutator table
};

inline constexpr std::pair<CaseId, std::string_view> kCaseNames[] = {
    {CaseId::E4, "E4"},       {CaseId::E11, "E11"},     {CaseId::E8, "E8"},
    {CaseId::EvenSquare, "EvenSquare"},
    {CaseId::E17, "E17"},     {CaseId::E1, "E1"},       {CaseId::E18a, "E18a"},
    {CaseId::E18b, "E18b"},   {CaseId::E18c, "E18c"},   {CaseId::E18d, "E18d"},
    {CaseId::E19, "E19"},     {CaseId::E20a, "E20a"},   {CaseId::E20b, "E20b"},
    {CaseId::E20c, "E20c"},   {CaseId::E20d, "E20d"},   {CaseId::E21, "E21"},
    {CaseId::E22a, "E22a"},   {CaseId::E22b, "E22b"},   {CaseId::E22c, "E22c"},
    {CaseId::E22d, "E22d"},   {CaseId::E23a, "E23a"},   {CaseId::E23b, "E23b"},
    {CaseId::E23c, "E23c"},   {CaseId::E23d, "E23d"},   {CaseId::E12a, "E12a"},
    {CaseId::E12b, "E12b"},   {CaseId::E13a, "E13a"},   {CaseId::E13b, "E13b"},
    {CaseId::E9a, "E9a"},     {CaseId::E9b, "E9b"},     {CaseId::E9c, "E9c"},
    {CaseId::E9d, "E9d"},     {CaseId::SerreCross, "SerreCross"},
    {CaseId::OddSquare, "OddSquare"}, {CaseId::Kappa, "Kappa"},
    {CaseId::Table8, "Table8"},
};

inline std::string_view to_string(CaseId id) {
  for (auto const& [c, name] : kCaseNames) {
    if (c == id) {
      return name;
    }
  }
  return "?";
}

inline std::optional<CaseId> case_from_string(std::string_view name) {
  for (auto const& [c, n] : kCaseNames) {
    if (n == name) {
      return c;
    }
  }
  return std::nullopt;
}

/// Result of dispatch. `mirrored` means the pair matched the case with its
/// two letters swapped, so the exchange is the inverse of the tabulated one.
struct RuleMatch {
  CaseId id;
  bool mirrored = false;

  friend bool operator==(RuleMatch const&, RuleMatch const&) = default;
};

/// x y = factor * y x + correction
struct ExchangeParts {
  RuleMatch match;
  Coefficient factor;
  Element correction;
};

namespace rules {

  inline bool strictly_between(int c, int a, int b) {
    return std::min(a, b) < c && c < std::max(a, b);
  }

  inline int sign_of(int x) { return (x > 0) - (x < 0); }

  inline int median(int a, int b, int c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
  }

  inline Letter E(int a, int b) { return Letter::gen(a, b); }
  inline Letter K(int a) { return Letter::cartan(a, 2); }
  inline Letter Kbar(int a) { return Letter::cartan(a, -2); }

  inline Element term(Signature const& sig, Coefficient const& c, Word const& w) {
    Element e(sig);
    e.add_term(w, c);
    return e;
  }

  inline int grade(Signature const& sig, int a, int b) { return grade_of(E(a, b), sig); }

  // ---- commutator table, each case in its own index labels ----

  /// [E^a_b, E^b_a] = Dbar_a (K_a Kbar_b - Kbar_a K_b), any a != b.
  inline Element e17(Signature const& sig, int a, int b) {
    Coefficient const d = delta_index_inverse(a, sig);
    Element out(sig);
    out.add_term({K(a), Kbar(b)}, d);
    out.add_term({Kbar(a), K(b)}, -d);
    return out;
  }

  /// [E^a_c, E^c_b] for three distinct indices with c not between a and b.
  inline Element e18(Signature const& sig, CaseId id, int a, int b, int c) {
    switch (id) {
      case CaseId::E18a: return term(sig, 1, {Kbar(b), K(c), E(a, b)});
      case CaseId::E18b: return term(sig, 1, {E(a, b), K(a), Kbar(c)});
      case CaseId::E18c: return term(sig, 1, {E(a, b), Kbar(a), K(c)});
      case CaseId::E18d: return term(sig, 1, {K(b), Kbar(c), E(a, b)});
      default: throw Error("not an E18 case");
    }
  }

  inline std::optional<CaseId> e18_case(int a, int b, int c) {
    if (c < b && b < a) return CaseId::E18a;
    if (c < a && a < b) return CaseId::E18b;
    if (b < a && a < c) return CaseId::E18c;
    if (a < b && b < c) return CaseId::E18d;
    return std::nullopt;
  }

  /// Scalar k with  E^c_a E^c_b = k E^c_b E^c_a  (E20a, E20b)  or
  /// E^a_c E^b_c = k E^b_c E^a_c  (E20c, E20d).
  inline Coefficient e20(Signature const& sig, CaseId id, int a, int b, int c) {
    int g = 0;
    switch (id) {
      case CaseId::E20a: g = grade(sig, c, b); break;  // a<b<c
      case CaseId::E20b: g = grade(sig, c, a); break;  // c<a<b
      case CaseId::E20c: g = grade(sig, b, c); break;  // a<b<c
      case CaseId::E20d: g = grade(sig, a, c); break;  // c<a<b
      default: throw Error("not an E20 case");
    }
    return Coefficient(parity_sign(g)) * q_index(c, sig);
  }

  /// a<b, c<d in the table's labels.
  inline Element e22(Signature const& sig, CaseId id, int a, int b, int c, int d) {
    switch (id) {
      case CaseId::E22a: return term(sig, delta_index(b, sig), {E(a, d), E(c, b)});
      case CaseId::E22b: return term(sig, -delta_index(d, sig), {E(a, d), E(c, b)});
      case CaseId::E22c: return term(sig, delta_index(b, sig), {E(d, a), E(b, c)});
      case CaseId::E22d: return term(sig, -delta_index(d, sig), {E(d, a), E(b, c)});
      default: throw Error("not an E22 case");
    }
  }

  inline Element e23(Signature const& sig, CaseId id, int a, int b, int c, int d) {
    switch (id) {
      case CaseId::E23a:
        return term(sig, -delta_index(b, sig), {Kbar(b), K(c), E(a, c), E(d, b)});
      case CaseId::E23b:
        return term(sig, delta_index(d, sig), {E(d, b), E(a, c), Kbar(a), K(d)});
      case CaseId::E23c:
        return term(sig, -delta_index(c, sig), {E(b, d), E(c, a), Kbar(c), K(b)});
      case CaseId::E23d:
        return term(sig, delta_index(a, sig), {Kbar(d), K(a), E(c, a), E(b, d)});
      default: throw Error("not an E23 case");
    }
  }

  /// The staggered overlap a<c<b<d ("first") or c<a<d<b ("second").
  inline int stagger(int a, int b, int c, int d) {
    if (a < c && c < b && b < d) return 1;
    if (c < a && a < d && d < b) return 2;
    return 0;
  }

  /// [x, y] for four distinct indices; x, y in any raising/lowering combination.
  inline std::pair<CaseId, Element> four_index(Signature const& sig, Letter x, Letter y) {
    bool const xr = x.is_raising();
    bool const yr = y.is_raising();
    int a = 0, b = 0, c = 0, d = 0;
    CaseId first{}, second{};
    if (xr && yr) {  // [E^a_b, E^c_d]
      a = x.row(), b = x.col(), c = y.row(), d = y.col();
      first = CaseId::E22a, second = CaseId::E22b;
    } else if (!xr && !yr) {  // [E^b_a, E^d_c]
      b = x.row(), a = x.col(), d = y.row(), c = y.col();
      first = CaseId::E22c, second = CaseId::E22d;
    } else if (xr) {  // [E^a_b, E^d_c]
      a = x.row(), b = x.col(), d = y.row(), c = y.col();
      first = CaseId::E23a, second = CaseId::E23b;
    } else {  // [E^b_a, E^c_d]
      b = x.row(), a = x.col(), c = y.row(), d = y.col();
      first = CaseId::E23c, second = CaseId::E23d;
    }
    int const s = stagger(a, b, c, d);
    if (s == 0) {
      return {CaseId::E21, Element(sig)};
    }
    CaseId const id = s == 1 ? first : second;
    if (xr == yr) {
      return {id, e22(sig, id, a, b, c, d)};
    }
    return {id, e23(sig, id, a, b, c, d)};
  }

  /// Exponent of q in  K_a^N E^b_c = q^e E^b_c K_a^N.
  inline int cartan_shift_exponent(Signature const& sig, Letter k, Letter e) {
    int const delta = (k.index() == e.row() ? 1 : 0) - (k.index() == e.col() ? 1 : 0);
    int const twice = k.halves() * delta;
    if (twice % 2 != 0) {
      throw HalfIntegerPower("moving K[" + std::to_string(k.index()) +
                             "]^(" + std::to_string(k.halves()) +
                             "/2) past a generator needs a half-integer power of q");
    }
    return parity_sign(sig.grade(k.index())) * twice / 2;
  }

  inline ExchangeParts invert(ExchangeParts p) {
    // y x = f x y + R  =>  x y = f^-1 y x - f^-1 R
    Coefficient const inv = p.factor.inverse();
    Element corr = (-inv) * p.correction;
    return {{p.match.id, !p.match.mirrored}, inv, std::move(corr)};
  }

}  // namespace rules

/// Rewrites the ordered pair x y as  factor * y x + correction.
inline ExchangeParts exchange_parts(Letter x, Letter y, Signature const& sig) {
  using namespace rules;
  check_letter(x, sig);
  check_letter(y, sig);
  Element zero(sig);

  if (x.is_cartan() && y.is_cartan()) {
    return {{CaseId::E4}, 1, zero};
  }
  if (x.is_cartan()) {
    return {{CaseId::E11}, Coefficient::q_power(cartan_shift_exponent(sig, x, y)), zero};
  }
  if (y.is_cartan()) {
    return {{CaseId::E11, true}, Coefficient::q_power(-cartan_shift_exponent(sig, y, x)), zero};
  }

  int const gx = grade_of(x, sig);
  int const gy = grade_of(y, sig);
  Coefficient const sign(parity_sign(gx * gy));

  if (x == y) {
    if (gx == 1) {
      return {{CaseId::E8}, Coefficient(), zero};
    }
    return {{CaseId::EvenSquare}, 1, zero};
  }
  if (x.col() == y.row() && x.row() == y.col()) {
    return {{CaseId::E17}, sign, e17(sig, x.row(), x.col())};
  }
  if (x.col() == y.row()) {  // E^a_c E^c_b
    int const a = x.row(), c = x.col(), b = y.col();
    if (strictly_between(c, a, b)) {
      return {{CaseId::E1}, q_index_power(c, sign_of(a - b), sig), term(sig, 1, {E(a, b)})};
    }
    CaseId const id = *e18_case(a, b, c);
    return {{id}, sign, e18(sig, id, a, b, c)};
  }
  if (x.row() == y.col()) {  // y x is the pattern above
    return invert(exchange_parts(y, x, sig));
  }
  if (x.row() == y.row()) {  // E^c_p E^c_r
    int const c = x.row(), p = x.col(), r = y.col();
    if (strictly_between(c, p, r)) {
      return {{CaseId::E19}, sign, zero};
    }
    int const lo = std::min(p, r), hi = std::max(p, r);
    CaseId const id = (hi < c) ? CaseId::E20a : CaseId::E20b;
    Coefficient const k = e20(sig, id, lo, hi, c);
    if (p < r) {
      return {{id}, k, zero};
    }
    return {{id, true}, k.inverse(), zero};
  }
  if (x.col() == y.col()) {  // E^p_c E^r_c
    int const c = x.col(), p = x.row(), r = y.row();
    if (strictly_between(c, p, r)) {
      return {{CaseId::E19}, sign, zero};
    }
    int const lo = std::min(p, r), hi = std::max(p, r);
    CaseId const id = (hi < c) ? CaseId::E20c : CaseId::E20d;
    Coefficient const k = e20(sig, id, lo, hi, c);
    if (p < r) {
      return {{id}, k, zero};
    }
    return {{id, true}, k.inverse(), zero};
  }
  auto [id, commutator] = four_index(sig, x, y);
  return {{id}, sign, std::move(commutator)};
}

/// The unique dispatch case for an ordered pair of letters.
inline RuleMatch classify(Letter x, Letter y, Signature const& sig) {
  return exchange_parts(x, y, sig).match;
}

/// An element equal to x y in the algebra: factor * y x + correction.
inline Element exchange(Letter x, Letter y, Signature const& sig) {
  ExchangeParts p = exchange_parts(x, y, sig);
  Element out(sig);
  out.add_term({y, x}, p.factor);
  out += p.correction;
  return out;
}

/// Static description of one dispatch case, for documentation dumps.
struct RuleInfo {
  CaseId id;
  std::string_view guard;
  std::string_view replacement;
};

inline std::vector<RuleInfo> const& rule_table() {
  static std::vector<RuleInfo> const table{
      {CaseId::E4, "K[a]^M K[b]^N", "K[b]^N K[a]^M"},
      {CaseId::E11, "K[a]^N E[b,c]", "q_a^(N*(delta(a,b)-delta(a,c))) E[b,c] K[a]^N"},
      {CaseId::E8, "E[a,b] E[a,b], [a]+[b] odd", "0"},
      {CaseId::EvenSquare, "E[a,b] E[a,b], [a]+[b] even", "E[a,b] E[a,b]"},
      {CaseId::E17, "E[a,b] E[b,a]", "s E[b,a] E[a,b] + Dbar_a (K[a] Kbar[b] - Kbar[a] K[b])"},
      {CaseId::E1, "E[a,c] E[c,b], c strictly between a and b",
       "q_c^sign(a-b) E[c,b] E[a,c] + E[a,b]"},
      {CaseId::E18a, "E[a,c] E[c,b], c<b<a", "s E[c,b] E[a,c] + Kbar[b] K[c] E[a,b]"},
      {CaseId::E18b, "E[a,c] E[c,b], c<a<b", "s E[c,b] E[a,c] + E[a,b] K[a] Kbar[c]"},
      {CaseId::E18c, "E[a,c] E[c,b], b<a<c", "s E[c,b] E[a,c] + E[a,b] Kbar[a] K[c]"},
      {CaseId::E18d, "E[a,c] E[c,b], a<b<c", "s E[c,b] E[a,c] + K[b] Kbar[c] E[a,b]"},
      {CaseId::E19, "E[c,a] E[c,b] or E[a,c] E[b,c], c strictly between a and b",
       "s (swapped pair)"},
      {CaseId::E20a, "E[c,a] E[c,b], a<b<c", "(-1)^[E[c,b]] q_c E[c,b] E[c,a]"},
      {CaseId::E20b, "E[c,a] E[c,b], c<a<b", "(-1)^[E[c,a]] q_c E[c,b] E[c,a]"},
      {CaseId::E20c, "E[a,c] E[b,c], a<b<c", "(-1)^[E[b,c]] q_c E[b,c] E[a,c]"},
      {CaseId::E20d, "E[a,c] E[b,c], c<a<b", "(-1)^[E[a,c]] q_c E[b,c] E[a,c]"},
      {CaseId::E21, "four distinct indices, intervals disjoint or nested", "s (swapped pair)"},
      {CaseId::E22a, "E[a,b] E[c,d], a<c<b<d", "s E[c,d] E[a,b] + Delta_b E[a,d] E[c,b]"},
      {CaseId::E22b, "E[a,b] E[c,d], c<a<d<b", "s E[c,d] E[a,b] - Delta_d E[a,d] E[c,b]"},
      {CaseId::E22c, "E[b,a] E[d,c], a<c<b<d", "s E[d,c] E[b,a] + Delta_b E[d,a] E[b,c]"},
      {CaseId::E22d, "E[b,a] E[d,c], c<a<d<b", "s E[d,c] E[b,a] - Delta_d E[d,a] E[b,c]"},
      {CaseId::E23a, "E[a,b] E[d,c], a<c<b<d",
       "s E[d,c] E[a,b] - Delta_b Kbar[b] K[c] E[a,c] E[d,b]"},
      {CaseId::E23b, "E[a,b] E[d,c], c<a<d<b",
       "s E[d,c] E[a,b] + Delta_d E[d,b] E[a,c] Kbar[a] K[d]"},
      {CaseId::E23c, "E[b,a] E[c,d], a<c<b<d",
       "s E[c,d] E[b,a] - Delta_c E[b,d] E[c,a] Kbar[c] K[b]"},
      {CaseId::E23d, "E[b,a] E[c,d], c<a<d<b",
       "s E[c,d] E[b,a] + Delta_a Kbar[d] K[a] E[c,a] E[b,d]"},
  };
  return table;
}

}  // namespace uqglmn

#endif  // UQGLMN_RULEBOOK_HPP
