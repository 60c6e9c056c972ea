#pragma once

// Finite group machinery over a pluggable element backend.
//
// A backend supplies an Element type with equality and std::hash, plus
// static compose / inverse / identity_of and the two walk generators
// gen_S(n), gen_G(n). ExactBackend works with CycMatrix in the original
// basis; MonomialBackend works with SignedShift in the Fourier basis.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gwalk/errors.hpp"
#include "gwalk/exact_linalg.hpp"
#include "gwalk/monomial.hpp"

namespace gwalk {

inline constexpr std::size_t kDefaultElementCeiling = std::size_t{1} << 18;

template <class B>
concept GroupBackend = requires(unsigned n, const typename B::Element& a, const typename B::Element& b) {
  { B::compose(a, b) } -> std::convertible_to<typename B::Element>;
  { B::inverse(a) } -> std::convertible_to<typename B::Element>;
  { B::identity_of(a) } -> std::convertible_to<typename B::Element>;
  { B::gen_S(n) } -> std::convertible_to<typename B::Element>;
  { B::gen_G(n) } -> std::convertible_to<typename B::Element>;
  { a == b } -> std::convertible_to<bool>;
  { std::hash<typename B::Element>{}(a) } -> std::convertible_to<std::size_t>;
};

struct MonomialBackend {
  using Element = SignedShift;
  static constexpr const char* name = "monomial";
  static Element compose(const Element& a, const Element& b) { return gwalk::compose(a, b); }
  static Element inverse(const Element& a) { return gwalk::inverse(a); }
  static Element identity_of(const Element& a) { return SignedShift::identity(a.modulus()); }
  static Element gen_S(unsigned n) { return gen_S_hat(n); }
  static Element gen_G(unsigned n) { return gen_G_hat(n); }
};

struct ExactBackend {
  using Element = CycMatrix;
  static constexpr const char* name = "exact";
  static Element compose(const Element& a, const Element& b) { return a * b; }
  static Element inverse(const Element& a) { return unitary_inverse(a); }
  static Element identity_of(const Element& a) { return CycMatrix::identity(a.modulus(), a.dim()); }
  static Element gen_S(unsigned n) { return build_S(n); }
  static Element gen_G(unsigned n) { return build_G(n); }
};

static_assert(GroupBackend<MonomialBackend>);
static_assert(GroupBackend<ExactBackend>);

template <class E>
class FiniteGroup {
 public:
  FiniteGroup(std::vector<E> generators, E identity) : generators_(std::move(generators)), identity_(identity) {
    insert(std::move(identity));
  }

  std::size_t order() const { return elements_.size(); }
  /// Elements in breadth-first discovery order; index 0 is the identity.
  const std::vector<E>& elements() const { return elements_; }
  const std::vector<E>& generators() const { return generators_; }
  const E& identity() const { return identity_; }

  bool contains(const E& e) const { return index_.contains(e); }

  std::optional<std::size_t> index_of(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Returns false if already present.
  bool insert(E e) {
    auto [it, fresh] = index_.try_emplace(e, elements_.size());
    if (fresh) elements_.push_back(std::move(e));
    return fresh;
  }

 private:
  std::vector<E> generators_;
  E identity_;
  std::vector<E> elements_;
  std::unordered_map<E, std::size_t> index_;
};

template <GroupBackend B>
using GroupOf = FiniteGroup<typename B::Element>;

/// Breadth-first closure of `generators` under right multiplication by the
/// generators and their inverses.
template <GroupBackend B>
GroupOf<B> generate_closure(const std::vector<typename B::Element>& generators,
                            std::size_t ceiling = kDefaultElementCeiling) {
  using E = typename B::Element;
  if (generators.empty()) throw PreconditionViolation("generate_closure: no generators");
  std::vector<E> steps;
  for (const auto& g : generators) {
    for (E s : {g, B::inverse(g)})
      if (std::find(steps.begin(), steps.end(), s) == steps.end()) steps.push_back(std::move(s));
  }
  GroupOf<B> group(generators, B::identity_of(generators.front()));
  for (std::size_t head = 0; head < group.order(); ++head) {
    for (const auto& s : steps) {
      E next = B::compose(group.elements()[head], s);
      if (!group.contains(next)) {
        if (group.order() >= ceiling)
          throw ClosureLimitExceeded(ceiling, "group closure exceeded " + std::to_string(ceiling) + " elements");
        group.insert(std::move(next));
      }
    }
  }
  return group;
}

template <GroupBackend B>
typename B::Element element_power(const typename B::Element& a, unsigned long long e) {
  auto r = B::identity_of(a);
  for (unsigned long long k = 0; k < e; ++k) r = B::compose(r, a);
  return r;
}

/// Smallest k >= 1 with a^k = 1; `bound` caps the search.
template <GroupBackend B>
std::optional<unsigned long long> element_order(const typename B::Element& a,
                                                unsigned long long bound = kDefaultElementCeiling) {
  const auto id = B::identity_of(a);
  auto p = a;
  for (unsigned long long k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = B::compose(p, a);
  }
  return std::nullopt;
}

/// S^j G^k in the backend, j taken mod n.
template <GroupBackend B>
typename B::Element walk_word(unsigned n, long long j, unsigned k) {
  const auto s = B::gen_S(n);
  const auto g = B::gen_G(n);
  long long e = j % static_cast<long long>(n);
  if (e < 0) e += n;
  auto r = element_power<B>(s, static_cast<unsigned long long>(e));
  if (k % 2) r = B::compose(r, g);
  return r;
}

/// G^k S^j.
template <GroupBackend B>
typename B::Element walk_word_reversed(unsigned n, long long j, unsigned k) {
  const auto g = B::gen_G(n);
  auto r = walk_word<B>(n, j, 0);
  return (k % 2) ? B::compose(g, r) : r;
}

/// [X, Y] = X Y X^{-1} Y^{-1}.
template <GroupBackend B>
typename B::Element group_commutator(const typename B::Element& x, const typename B::Element& y) {
  return B::compose(B::compose(x, y), B::compose(B::inverse(x), B::inverse(y)));
}

template <GroupBackend B>
std::vector<typename B::Element> commutator_generators(unsigned n) {
  detail::require_walk_size(n, "commutator_generators");
  std::vector<typename B::Element> out;
  const auto g = B::gen_G(n);
  for (unsigned j = 1; j < n; ++j) out.push_back(group_commutator<B>(walk_word<B>(n, j, 0), g));
  return out;
}

/// K = <S, G>.
template <GroupBackend B>
GroupOf<B> generate_K(unsigned n, std::size_t ceiling = kDefaultElementCeiling) {
  detail::require_walk_size(n, "generate_K");
  return generate_closure<B>({B::gen_S(n), B::gen_G(n)}, ceiling);
}

/// H = <[S^j, G] : j = 1..n-1>.
template <GroupBackend B>
GroupOf<B> generate_H(unsigned n, std::size_t ceiling = kDefaultElementCeiling) {
  return generate_closure<B>(commutator_generators<B>(n), ceiling);
}

/// Conjugation by the parent's generators suffices for normality.
template <GroupBackend B>
bool is_normal(const GroupOf<B>& sub, const GroupOf<B>& parent) {
  for (const auto& h : sub.elements())
    if (!parent.contains(h)) throw PreconditionViolation("is_normal: subgroup is not contained in parent");
  for (const auto& g : parent.generators()) {
    const auto g_inv = B::inverse(g);
    for (const auto& h : sub.elements())
      if (!sub.contains(B::compose(B::compose(g, h), g_inv))) return false;
  }
  return true;
}

template <class E>
struct QuotientGroup {
  /// First element of each coset in the parent's enumeration order.
  std::vector<E> coset_representatives;
  /// coset_of[i] is the coset index of parent.elements()[i].
  std::vector<std::size_t> coset_of;
  /// table[a][b] = coset index of rep_a * rep_b.
  std::vector<std::vector<std::size_t>> table;
  std::size_t parent_order = 0;
  std::size_t normal_order = 0;

  std::size_t order() const { return coset_representatives.size(); }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = a + 1; b < order(); ++b)
        if (table[a][b] != table[b][a]) return false;
    return true;
  }

  /// Identity at index 0, inverses present, associativity over all triples.
  bool is_group() const {
    const std::size_t k = order();
    if (k * normal_order != parent_order) return false;
    for (std::size_t a = 0; a < k; ++a) {
      if (table[0][a] != a || table[a][0] != a) return false;
      bool has_inverse = false;
      for (std::size_t b = 0; b < k && !has_inverse; ++b) has_inverse = table[a][b] == 0 && table[b][a] == 0;
      if (!has_inverse) return false;
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]]) return false;
    return true;
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t p = a, k = 1;
    while (p != 0) {
      p = table[p][a];
      ++k;
    }
    return k;
  }

  /// order -> number of cosets of that order.
  std::map<std::size_t, std::size_t> order_multiset() const {
    std::map<std::size_t, std::size_t> m;
    for (std::size_t a = 0; a < order(); ++a) ++m[element_order(a)];
    return m;
  }
};

/// Cosets by a ~ b iff a b^{-1} in `normal`.
template <GroupBackend B>
QuotientGroup<typename B::Element> quotient(const GroupOf<B>& parent, const GroupOf<B>& normal) {
  if (!is_normal<B>(normal, parent)) throw PreconditionViolation("quotient: subgroup is not normal");
  QuotientGroup<typename B::Element> q;
  q.parent_order = parent.order();
  q.normal_order = normal.order();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  q.coset_of.assign(parent.order(), unassigned);
  for (std::size_t i = 0; i < parent.order(); ++i) {
    if (q.coset_of[i] != unassigned) continue;
    const std::size_t c = q.coset_representatives.size();
    const auto& a = parent.elements()[i];
    q.coset_representatives.push_back(a);
    for (const auto& h : normal.elements()) q.coset_of[*parent.index_of(B::compose(h, a))] = c;
  }
  const std::size_t k = q.order();
  q.table.assign(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      q.table[a][b] = q.coset_of[*parent.index_of(B::compose(q.coset_representatives[a], q.coset_representatives[b]))];
  return q;
}

/// A product of cyclic groups Z_{m1} x Z_{m2} x ...
struct AbelianType {
  std::vector<std::size_t> factors;

  std::string label() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " x " : "") << "Z_" << factors[i];
    if (factors.empty()) os << "Z_1";
    return os.str();
  }

  std::size_t order() const {
    std::size_t o = 1;
    for (auto f : factors) o *= f;
    return o;
  }

  /// Element-order multiset, by enumerating every tuple.
  std::map<std::size_t, std::size_t> order_multiset() const {
    std::map<std::size_t, std::size_t> m;
    std::vector<std::size_t> digit(factors.size(), 0);
    for (std::size_t count = 0; count < order(); ++count) {
      std::size_t ord = 1;
      for (std::size_t i = 0; i < factors.size(); ++i)
        ord = std::lcm(ord, factors[i] / std::gcd(digit[i], factors[i]));
      ++m[ord];
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (++digit[i] < factors[i]) break;
        digit[i] = 0;
      }
    }
    return m;
  }

  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

/// Z_n x Z_2 for even n, Z_n for odd n.
inline AbelianType expected_quotient_type(unsigned n) {
  if (n % 2 == 0) return {{n, 2}};
  return {{n}};
}

/// The candidates compared against K/H: the expected type plus the other
/// abelian groups of order n or 2n built from a Z_n factor.
inline std::vector<AbelianType> quotient_candidates(unsigned n) {
  std::vector<AbelianType> c = {{{n}}, {{n, 2}}};
  if (n % 2 == 0) c.push_back({{2 * static_cast<std::size_t>(n)}});
  return c;
}

template <class E>
std::optional<AbelianType> match_abelian_type(const QuotientGroup<E>& q, const std::vector<AbelianType>& candidates) {
  const auto orders = q.order_multiset();
  for (const auto& c : candidates)
    if (c.order() == q.order() && c.order_multiset() == orders) return c;
  return std::nullopt;
}

inline std::string format_order_multiset(const std::map<std::size_t, std::size_t>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [ord, count] : m) {
    os << (first ? "" : ", ") << ord << ": " << count;
    first = false;
  }
  os << "}";
  return os.str();
}

/// Certifies K/H as the expected abelian type for n by comparing
/// element-order multisets; finite abelian groups are determined by them.
template <class E>
AbelianType identify_abelian_structure(const QuotientGroup<E>& q, unsigned n) {
  if (!q.is_abelian()) throw PreconditionViolation("identify_abelian_structure: quotient is not abelian");
  const AbelianType expected = expected_quotient_type(n);
  auto match = match_abelian_type(q, quotient_candidates(n));
  if (!match || !(*match == expected))
    throw TheoremViolation("quotient of order " + std::to_string(q.order()) + " with element orders " +
                           format_order_multiset(q.order_multiset()) + " is not " + expected.label());
  return *match;
}

struct MembershipFact {
  std::string element;
  bool in_H = false;
  bool expected_in_H = false;
  bool agrees() const { return in_H == expected_in_H; }
};

struct MembershipFacts {
  std::vector<MembershipFact> facts;
  bool consistent() const {
    return std::all_of(facts.begin(), facts.end(), [](const auto& f) { return f.agrees(); });
  }
};

/// S^j and S^j G (j = 1..n-1) are never in H; G is in H exactly for odd n.
template <GroupBackend B>
MembershipFacts membership_suite(unsigned n, const GroupOf<B>& H) {
  MembershipFacts out;
  for (unsigned j = 1; j < n; ++j)
    out.facts.push_back({"S^" + std::to_string(j), H.contains(walk_word<B>(n, j, 0)), false});
  for (unsigned j = 1; j < n; ++j)
    out.facts.push_back({"S^" + std::to_string(j) + "G", H.contains(walk_word<B>(n, j, 1)), false});
  out.facts.push_back({"G", H.contains(B::gen_G(n)), n % 2 == 1});
  return out;
}

/// (S^j G^k)(G^k S^j)^{-1} in H for j = 0..n-1, k = 0, 1.
template <GroupBackend B>
bool coset_swap_check(unsigned n, const GroupOf<B>& H) {
  for (unsigned j = 0; j < n; ++j)
    for (unsigned k = 0; k < 2; ++k) {
      auto x = walk_word<B>(n, j, k);
      auto y = walk_word_reversed<B>(n, j, k);
      if (!H.contains(B::compose(x, B::inverse(y)))) return false;
    }
  return true;
}

/// {S^j G^l : j < n, l < 2} for even n, {S^j : j < n} for odd n.
template <GroupBackend B>
std::vector<typename B::Element> claimed_representatives(unsigned n) {
  std::vector<typename B::Element> reps;
  const unsigned layers = n % 2 == 0 ? 2 : 1;
  for (unsigned l = 0; l < layers; ++l)
    for (unsigned j = 0; j < n; ++j) reps.push_back(walk_word<B>(n, j, l));
  return reps;
}

struct RepresentativeCheck {
  bool pairwise_distinct = false;
  bool covers = false;
  std::size_t representatives = 0;
  bool passed() const { return pairwise_distinct && covers; }
};

/// The claimed set hits each coset of H in K exactly once.
template <GroupBackend B>
RepresentativeCheck coset_representative_check(unsigned n, const GroupOf<B>& K, const GroupOf<B>& H) {
  const auto reps = claimed_representatives<B>(n);
  RepresentativeCheck r;
  r.representatives = reps.size();
  r.pairwise_distinct = true;
  for (std::size_t a = 0; a < reps.size() && r.pairwise_distinct; ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b)
      if (H.contains(B::compose(reps[a], B::inverse(reps[b])))) {
        r.pairwise_distinct = false;
        break;
      }
  // Distinct cosets, so covering is a count.
  r.covers = r.pairwise_distinct && reps.size() * H.order() == K.order();
  return r;
}

/// Smallest m >= 1 with (S^j G)^m = 1 for every j = 0..n-1.
template <GroupBackend B>
std::optional<unsigned long long> minimal_common_exponent(unsigned n, unsigned long long bound = kDefaultElementCeiling) {
  detail::require_walk_size(n, "minimal_common_exponent");
  std::vector<typename B::Element> base, powers;
  for (unsigned j = 0; j < n; ++j) base.push_back(walk_word<B>(n, j, 1));
  powers = base;
  const auto id = B::identity_of(base.front());
  for (unsigned long long m = 1; m <= bound; ++m) {
    if (std::all_of(powers.begin(), powers.end(), [&](const auto& p) { return p == id; })) return m;
    for (unsigned j = 0; j < n; ++j) powers[j] = B::compose(powers[j], base[j]);
  }
  return std::nullopt;
}

/// Smallest k >= 1 with (SG)^k in H.
template <GroupBackend B>
std::optional<unsigned long long> smallest_power_in(const typename B::Element& x, const GroupOf<B>& H,
                                                    unsigned long long bound = kDefaultElementCeiling) {
  auto p = x;
  for (unsigned long long k = 1; k <= bound; ++k) {
    if (H.contains(p)) return k;
    p = B::compose(p, x);
  }
  return std::nullopt;
}

}  // namespace gwalk
