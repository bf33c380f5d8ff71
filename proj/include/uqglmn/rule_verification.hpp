#ifndef UQGLMN_RULE_VERIFICATION_HPP
#define UQGLMN_RULE_VERIFICATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "uqglmn/element.hpp"
#include "uqglmn/expansion.hpp"
#include "uqglmn/normalizer.hpp"
#include "uqglmn/rulebook.hpp"
#include "uqglmn/signature.hpp"

// Each rule case written as an identity lhs = rhs between raw elements, with
// the index tuples for which it applies. Verification expands both sides to
// simple generators and compares normal forms.

namespace uqglmn {

struct Identity {
  Element lhs;
  Element rhs;
};

using IndexTuple = std::vector<int>;

namespace verify_detail {

  using rules::E;
  using rules::K;
  using rules::Kbar;

  inline Element word(Signature const& sig, Coefficient const& c, Word const& w) {
    return rules::term(sig, c, w);
  }

  /// Raw graded bracket xy - (-1)^{[x][y]} yx of two letters.
  inline Element bracket(Signature const& sig, Letter x, Letter y) {
    return graded_commutator(Element::letter(sig, x), Element::letter(sig, y));
  }

  inline bool distinct(std::initializer_list<int> xs) {
    for (auto i = xs.begin(); i != xs.end(); ++i) {
      for (auto j = i + 1; j != xs.end(); ++j) {
        if (*i == *j) {
          return false;
        }
      }
    }
    return true;
  }

  inline int sgn(int x) { return (x > 0) - (x < 0); }

  /// Condensed q-commutation factor: 1 if c is the median of {a, b, c},
  /// else (-1)^{[E^z_c]} qbar_c^{sign(a-b)} with z the median.
  inline Coefficient kappa(Signature const& sig, int a, int b, int c) {
    int const z = rules::median(a, b, c);
    if (z == c) {
      return 1;
    }
    return Coefficient(parity_sign(grade_of(E(z, c), sig))) *
           q_index_power(c, -sgn(a - b), sig);
  }

  /// Condensed table for [E^a_b, E^c_d], four distinct indices.
  inline Element table8(Signature const& sig, int a, int b, int c, int d) {
    auto D = [&](int i) { return delta_index(i, sig); };
    if (a < c && c < b && b < d) return word(sig, D(b), {E(a, d), E(c, b)});
    if (c < a && a < d && d < b) return word(sig, -D(d), {E(a, d), E(c, b)});
    if (b < d && d < a && a < c) return word(sig, D(a), {E(c, b), E(a, d)});
    if (d < b && b < c && c < a) return word(sig, -D(c), {E(c, b), E(a, d)});
    if (a < d && d < b && b < c) return word(sig, -D(b), {Kbar(b), K(d), E(a, d), E(c, b)});
    if (d < a && a < c && c < b) return word(sig, D(c), {E(c, b), E(a, d), Kbar(a), K(c)});
    if (b < c && c < a && a < d) return word(sig, -D(c), {E(a, d), E(c, b), Kbar(c), K(a)});
    if (c < b && b < d && d < a) return word(sig, D(b), {Kbar(d), K(b), E(c, b), E(a, d)});
    return Element(sig);
  }

  inline std::vector<IndexTuple> all_tuples(int size, int arity) {
    std::vector<IndexTuple> out;
    IndexTuple t(static_cast<std::size_t>(arity), 1);
    while (true) {
      out.push_back(t);
      int i = arity - 1;
      while (i >= 0 && t[static_cast<std::size_t>(i)] == size) {
        t[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) {
        return out;
      }
      ++t[static_cast<std::size_t>(i)];
    }
  }

}  // namespace verify_detail

/// Cases run by verify-lemma, in report order.
inline std::vector<CaseId> const& verification_cases() {
  static std::vector<CaseId> const cases{
      CaseId::E4,   CaseId::E11,  CaseId::E8,   CaseId::E17,  CaseId::E1,   CaseId::E18a,
      CaseId::E18b, CaseId::E18c, CaseId::E18d, CaseId::E19,  CaseId::E20a, CaseId::E20b,
      CaseId::E20c, CaseId::E20d, CaseId::E21,  CaseId::E22a, CaseId::E22b, CaseId::E22c,
      CaseId::E22d, CaseId::E23a, CaseId::E23b, CaseId::E23c, CaseId::E23d, CaseId::E12a,
      CaseId::E12b, CaseId::E13a, CaseId::E13b, CaseId::E9a,  CaseId::E9b,  CaseId::E9c,
      CaseId::E9d,  CaseId::SerreCross, CaseId::OddSquare, CaseId::Kappa, CaseId::Table8,
  };
  return cases;
}

/// Whether the identity of `id` is stated for this index tuple.
inline bool admissible(CaseId id, IndexTuple const& t, Signature const& sig) {
  using verify_detail::distinct;
  auto in = [&](int i) { return sig.contains(i); };
  auto const n = t.size();
  // the last entry of an E11 tuple is a Cartan exponent in halves
  std::size_t const indices = (id == CaseId::E11 && n > 0) ? n - 1 : n;
  for (std::size_t i = 0; i < indices; ++i) {
    if (!in(t[i])) {
      return false;
    }
  }
  auto at = [&](std::size_t i) { return t[i]; };
  switch (id) {
    case CaseId::E4:
      return n == 2;
    case CaseId::E11:
      return n == 4 && at(1) != at(2) && (at(3) == 2 || at(3) == -2 || at(3) == 4);
    case CaseId::E8: {
      if (n != 2) return false;
      int const m = sig.m();
      return (at(0) == m && at(1) == m + 1) || (at(0) == m + 1 && at(1) == m);
    }
    case CaseId::E17:
      return n == 2 && at(0) != at(1);
    case CaseId::E1:  // (a, c, b)
      return n == 3 && rules::strictly_between(at(1), at(0), at(2));
    case CaseId::E18a:
    case CaseId::E18b:
    case CaseId::E18c:
    case CaseId::E18d:  // (a, b, c)
      return n == 3 && distinct({at(0), at(1), at(2)}) &&
             rules::e18_case(at(0), at(1), at(2)) == id;
    case CaseId::E19:  // (a, b, c)
      return n == 3 && rules::strictly_between(at(2), at(0), at(1));
    case CaseId::E20a:
    case CaseId::E20c:
      return n == 3 && at(0) < at(1) && at(1) < at(2);
    case CaseId::E20b:
    case CaseId::E20d:
      return n == 3 && at(2) < at(0) && at(0) < at(1);
    case CaseId::E21:  // (a, b, c, d) with a<b, c<d
      return n == 4 && at(0) < at(1) && at(2) < at(3) &&
             distinct({at(0), at(1), at(2), at(3)}) &&
             rules::stagger(at(0), at(1), at(2), at(3)) == 0;
    case CaseId::E22a:
    case CaseId::E22c:
    case CaseId::E23a:
    case CaseId::E23c:
      return n == 4 && rules::stagger(at(0), at(1), at(2), at(3)) == 1;
    case CaseId::E22b:
    case CaseId::E22d:
    case CaseId::E23b:
    case CaseId::E23d:
      return n == 4 && rules::stagger(at(0), at(1), at(2), at(3)) == 2;
    case CaseId::E12a:
    case CaseId::E12b:  // (a, b, c)
      return n == 3 && at(0) < at(1) && in(at(2) + 1) && at(0) != at(2) &&
             at(0) != at(2) + 1 && at(1) != at(2) && at(1) != at(2) + 1;
    case CaseId::E13a:
    case CaseId::E13b:
      return n == 3 && at(0) < at(1) && in(at(2) + 1) &&
             (at(0) != at(2) || at(1) != at(2) + 1);
    case CaseId::E9a:
    case CaseId::E9b:
      return n == 1 && at(0) != sig.m() && in(at(0) + 2);
    case CaseId::E9c:
    case CaseId::E9d:
      return n == 1 && at(0) != sig.m() && in(at(0) - 1) && in(at(0) + 1);
    case CaseId::SerreCross:
      return n == 0 && sig.m() >= 2 && sig.n() >= 2;
    case CaseId::OddSquare:
      return n == 2 && sig.grade(at(0)) != sig.grade(at(1));
    case CaseId::Kappa:
      return n == 3 && distinct({at(0), at(1), at(2)});
    case CaseId::Table8:
      return n == 4 && distinct({at(0), at(1), at(2), at(3)});
    default:
      return false;
  }
}

inline int arity(CaseId id) {
  switch (id) {
    case CaseId::E4:
    case CaseId::E8:
    case CaseId::E17:
    case CaseId::OddSquare:
      return 2;
    case CaseId::E11:
    case CaseId::E21:
    case CaseId::E22a: case CaseId::E22b: case CaseId::E22c: case CaseId::E22d:
    case CaseId::E23a: case CaseId::E23b: case CaseId::E23c: case CaseId::E23d:
    case CaseId::Table8:
      return 4;
    case CaseId::E9a: case CaseId::E9b: case CaseId::E9c: case CaseId::E9d:
      return 1;
    case CaseId::SerreCross:
      return 0;
    default:
      return 3;
  }
}

/// Every admissible index tuple of a case at this signature.
inline std::vector<IndexTuple> admissible_tuples(CaseId id, Signature const& sig) {
  std::vector<IndexTuple> out;
  if (id == CaseId::E11) {
    for (auto t : verify_detail::all_tuples(sig.size(), 3)) {
      for (int h : {2, -2, 4}) {
        IndexTuple u = t;
        u.push_back(h);
        if (admissible(id, u, sig)) {
          out.push_back(u);
        }
      }
    }
    return out;
  }
  int const k = arity(id);
  if (k == 0) {
    if (admissible(id, {}, sig)) {
      out.emplace_back();
    }
    return out;
  }
  for (auto const& t : verify_detail::all_tuples(sig.size(), k)) {
    if (admissible(id, t, sig)) {
      out.push_back(t);
    }
  }
  return out;
}

/// The identities a case asserts for one admissible tuple.
inline std::vector<Identity> identities(CaseId id, IndexTuple const& t, Signature const& sig) {
  using namespace verify_detail;
  if (!admissible(id, t, sig)) {
    throw Error(std::string("index tuple not admissible for case ") + std::string(to_string(id)));
  }
  Element const zero(sig);
  auto x = [&](int i) { return t[static_cast<std::size_t>(i)]; };
  auto g = [&](int a, int b) { return rules::grade(sig, a, b); };

  switch (id) {
    case CaseId::E4: {
      int const a = x(0), b = x(1);
      return {{word(sig, 1, {K(a), K(b)}), word(sig, 1, {K(b), K(a)})},
              {word(sig, 1, {K(a), Kbar(a)}), Element::identity(sig)}};
    }
    case CaseId::E11: {
      int const a = x(0), b = x(1), c = x(2), h = x(3);
      int const delta = (a == b ? 1 : 0) - (a == c ? 1 : 0);
      Letter const k = Letter::cartan(a, h);
      return {{word(sig, 1, {k, E(b, c)}),
               word(sig, q_index_power(a, h / 2 * delta, sig), {E(b, c), k})}};
    }
    case CaseId::E8:
    case CaseId::OddSquare:
      return {{word(sig, 1, {E(x(0), x(1)), E(x(0), x(1))}), zero}};
    case CaseId::E17:
      return {{bracket(sig, E(x(0), x(1)), E(x(1), x(0))), rules::e17(sig, x(0), x(1))}};
    case CaseId::E1: {
      int const a = x(0), c = x(1), b = x(2);
      Element rhs = word(sig, 1, {E(a, c), E(c, b)});
      rhs.add_term({E(c, b), E(a, c)}, -q_index_power(c, sgn(a - b), sig));
      return {{Element::generator(sig, a, b), rhs}};
    }
    case CaseId::E18a:
    case CaseId::E18b:
    case CaseId::E18c:
    case CaseId::E18d: {
      int const a = x(0), b = x(1), c = x(2);
      return {{bracket(sig, E(a, c), E(c, b)), rules::e18(sig, id, a, b, c)}};
    }
    case CaseId::E19: {
      int const a = x(0), b = x(1), c = x(2);
      return {{bracket(sig, E(c, a), E(c, b)), zero}, {bracket(sig, E(a, c), E(b, c)), zero}};
    }
    case CaseId::E20a:
    case CaseId::E20b: {
      int const a = x(0), b = x(1), c = x(2);
      return {{word(sig, 1, {E(c, a), E(c, b)}),
               word(sig, rules::e20(sig, id, a, b, c), {E(c, b), E(c, a)})}};
    }
    case CaseId::E20c:
    case CaseId::E20d: {
      int const a = x(0), b = x(1), c = x(2);
      return {{word(sig, 1, {E(a, c), E(b, c)}),
               word(sig, rules::e20(sig, id, a, b, c), {E(b, c), E(a, c)})}};
    }
    case CaseId::E21: {
      int const a = x(0), b = x(1), c = x(2), d = x(3);
      return {{bracket(sig, E(a, b), E(c, d)), zero},
              {bracket(sig, E(a, b), E(d, c)), zero},
              {bracket(sig, E(b, a), E(c, d)), zero},
              {bracket(sig, E(b, a), E(d, c)), zero}};
    }
    case CaseId::E22a:
    case CaseId::E22b: {
      int const a = x(0), b = x(1), c = x(2), d = x(3);
      return {{bracket(sig, E(a, b), E(c, d)), rules::e22(sig, id, a, b, c, d)}};
    }
    case CaseId::E22c:
    case CaseId::E22d: {
      int const a = x(0), b = x(1), c = x(2), d = x(3);
      return {{bracket(sig, E(b, a), E(d, c)), rules::e22(sig, id, a, b, c, d)}};
    }
    case CaseId::E23a:
    case CaseId::E23b: {
      int const a = x(0), b = x(1), c = x(2), d = x(3);
      return {{bracket(sig, E(a, b), E(d, c)), rules::e23(sig, id, a, b, c, d)}};
    }
    case CaseId::E23c:
    case CaseId::E23d: {
      int const a = x(0), b = x(1), c = x(2), d = x(3);
      return {{bracket(sig, E(b, a), E(c, d)), rules::e23(sig, id, a, b, c, d)}};
    }
    case CaseId::E12a:
      return {{bracket(sig, E(x(0), x(1)), E(x(2), x(2) + 1)), zero}};
    case CaseId::E12b:
      return {{bracket(sig, E(x(1), x(0)), E(x(2) + 1, x(2))), zero}};
    case CaseId::E13a: {
      int const a = x(0), b = x(1), c = x(2);
      Element rhs(sig);
      if (b == c + 1) {
        rhs.add_term({K(c), Kbar(c + 1), E(a, c)}, 1);
      }
      if (a == c) {
        rhs.add_term({E(c + 1, b), Kbar(c), K(c + 1)}, -Coefficient(parity_sign(g(c + 1, c))));
      }
      return {{bracket(sig, E(a, b), E(c + 1, c)), rhs}};
    }
    case CaseId::E13b: {
      int const a = x(0), b = x(1), c = x(2);
      Element rhs(sig);
      if (a == c) {
        rhs.add_term({K(c), Kbar(c + 1), E(b, c + 1)}, 1);
      }
      if (b == c + 1) {
        rhs.add_term({E(c, a), Kbar(c), K(c + 1)}, -Coefficient(parity_sign(g(c, c + 1))));
      }
      return {{bracket(sig, E(b, a), E(c, c + 1)), rhs}};
    }
    case CaseId::E9a: {
      int const a = x(0);
      return {{word(sig, 1, {E(a + 1, a), E(a + 2, a)}),
               word(sig, q_index(a, sig), {E(a + 2, a), E(a + 1, a)})}};
    }
    case CaseId::E9b: {
      int const a = x(0);
      return {{word(sig, 1, {E(a, a + 1), E(a, a + 2)}),
               word(sig, q_index(a, sig), {E(a, a + 2), E(a, a + 1)})}};
    }
    case CaseId::E9c: {
      int const a = x(0);
      return {{word(sig, 1, {E(a + 1, a - 1), E(a + 1, a)}),
               word(sig, q_index(a, sig), {E(a + 1, a), E(a + 1, a - 1)})}};
    }
    case CaseId::E9d: {
      int const a = x(0);
      return {{word(sig, 1, {E(a - 1, a + 1), E(a, a + 1)}),
               word(sig, q_index(a, sig), {E(a, a + 1), E(a - 1, a + 1)})}};
    }
    case CaseId::SerreCross: {
      int const m = sig.m();
      return {{bracket(sig, E(m + 1, m), E(m + 2, m - 1)), zero},
              {bracket(sig, E(m, m + 1), E(m - 1, m + 2)), zero}};
    }
    case CaseId::Kappa: {
      int const a = x(0), b = x(1), c = x(2);
      Coefficient const k = kappa(sig, a, b, c);
      return {{word(sig, 1, {E(a, c), E(b, c)}), word(sig, k, {E(b, c), E(a, c)})},
              {word(sig, 1, {E(c, a), E(c, b)}), word(sig, k, {E(c, b), E(c, a)})}};
    }
    case CaseId::Table8: {
      int const a = x(0), b = x(1), c = x(2), d = x(3);
      return {{bracket(sig, E(a, b), E(c, d)), table8(sig, a, b, c, d)}};
    }
    default:
      throw Error(std::string("no identity for case ") + std::string(to_string(id)));
  }
}

/// Outcome of checking one identity: both sides expanded and normalized.
struct IdentityCheck {
  bool holds;
  Element lhs;
  Element rhs;
};

inline IdentityCheck check_identity(Identity const& id, Normalizer& nz) {
  Element l = nz.normal_order(expand_ns(id.lhs));
  Element r = nz.normal_order(expand_ns(id.rhs));
  bool const holds = l == r;
  return {holds, std::move(l), std::move(r)};
}

/// True iff every identity of the case at this tuple survives expansion to
/// simple generators followed by normal ordering.
inline bool verify_rule_by_expansion(CaseId id, IndexTuple const& t, Signature const& sig) {
  Normalizer nz(sig);
  for (auto const& ident : identities(id, t, sig)) {
    if (!check_identity(ident, nz).holds) {
      return false;
    }
  }
  return true;
}

/// Pairs of cases related by omega: applying omega to the first case's
/// commutator gives the second's, up to reversing the bracket.
inline std::vector<std::pair<CaseId, CaseId>> const& omega_partners() {
  static std::vector<std::pair<CaseId, CaseId>> const pairs{
      {CaseId::E18a, CaseId::E18b}, {CaseId::E18c, CaseId::E18d},
      {CaseId::E22a, CaseId::E22c}, {CaseId::E22b, CaseId::E22d},
      {CaseId::E23a, CaseId::E23c}, {CaseId::E23b, CaseId::E23d},
  };
  return pairs;
}

/// The two sides of an omega-coherence check for a tuple admissible for
/// `from`; both are normal ordered.
inline std::pair<Element, Element> omega_image(CaseId from, CaseId to, IndexTuple const& t,
                                               Signature const& sig, Normalizer& nz) {
  using rules::E;
  auto x = [&](int i) { return t[static_cast<std::size_t>(i)]; };
  auto sign = [&](Letter p, Letter r) {
    return Coefficient(parity_sign(grade_of(p, sig) * grade_of(r, sig)));
  };
  switch (from) {
    case CaseId::E18a:
    case CaseId::E18c: {
      // omega[E^a_c, E^c_b] = [E^b_c, E^c_a]
      int const a = x(0), b = x(1), c = x(2);
      Element image = omega(rules::e18(sig, from, a, b, c));
      return {nz.normal_order(image), nz.normal_order(rules::e18(sig, to, b, a, c))};
    }
    case CaseId::E22a:
    case CaseId::E22b: {
      // omega[E^a_b, E^c_d] = [E^d_c, E^b_a] = -s [E^b_a, E^d_c]
      int const a = x(0), b = x(1), c = x(2), d = x(3);
      Element image = -sign(E(a, b), E(c, d)) * omega(rules::e22(sig, from, a, b, c, d));
      return {nz.normal_order(image), nz.normal_order(rules::e22(sig, to, a, b, c, d))};
    }
    case CaseId::E23a:
    case CaseId::E23b: {
      // omega[E^a_b, E^d_c] = [E^c_d, E^b_a] = -s [E^b_a, E^c_d]
      int const a = x(0), b = x(1), c = x(2), d = x(3);
      Element image = -sign(E(a, b), E(d, c)) * omega(rules::e23(sig, from, a, b, c, d));
      return {nz.normal_order(image), nz.normal_order(rules::e23(sig, to, a, b, c, d))};
    }
    default:
      throw Error("no omega partner for case");
  }
}

}  // namespace uqglmn

#endif  // UQGLMN_RULE_VERIFICATION_HPP
