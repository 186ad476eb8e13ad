#pragma once

// Finite subgroups of SU(2) and SO(3): closure under multiplication,
// recognition of the isomorphism type, the subgroup lattice, normalizers,
// quotients and the projection SU(2) -> SO(3).
//
// Arithmetic happens once, while a group is being closed. Everything
// afterwards runs on an integer Cayley table whose indices follow the
// canonical element order (identity first, then ascending key).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include <json.hpp>

#include "eq5/errors.hpp"
#include "eq5/quaternion.hpp"

namespace eq5 {

enum class Ambient { SU2, SO3 };

inline std::string to_string(Ambient a) { return a == Ambient::SU2 ? "SU2" : "SO3"; }

/// Isomorphism type of a finite subgroup of SU(2) or SO(3), or of a
/// quotient of one.
struct IsoType {
  enum class Tag { Trivial, Cyclic, Dicyclic, BinTet, BinOct, BinIco, Dihedral, Tet, Oct, Ico, KleinFour };

  Tag tag = Tag::Trivial;
  int param = 0;  // k for Cyclic(k), m for Dicyclic(m) and Dihedral(m)

  static IsoType trivial() { return {Tag::Trivial, 0}; }
  static IsoType cyclic(int k) { return k == 1 ? trivial() : IsoType{Tag::Cyclic, k}; }
  static IsoType dicyclic(int m) { return {Tag::Dicyclic, m}; }
  static IsoType dihedral(int m) { return m == 2 ? IsoType{Tag::KleinFour, 0} : IsoType{Tag::Dihedral, m}; }
  static IsoType bin_tet() { return {Tag::BinTet, 0}; }
  static IsoType bin_oct() { return {Tag::BinOct, 0}; }
  static IsoType bin_ico() { return {Tag::BinIco, 0}; }
  static IsoType tet() { return {Tag::Tet, 0}; }
  static IsoType oct() { return {Tag::Oct, 0}; }
  static IsoType ico() { return {Tag::Ico, 0}; }
  static IsoType klein_four() { return {Tag::KleinFour, 0}; }

  int order() const {
    switch (tag) {
      case Tag::Trivial: return 1;
      case Tag::Cyclic: return param;
      case Tag::Dicyclic: return 4 * param;
      case Tag::BinTet: return 24;
      case Tag::BinOct: return 48;
      case Tag::BinIco: return 120;
      case Tag::Dihedral: return 2 * param;
      case Tag::Tet: return 12;
      case Tag::Oct: return 24;
      case Tag::Ico: return 60;
      case Tag::KleinFour: return 4;
    }
    return 0;
  }

  bool is_cyclic() const { return tag == Tag::Trivial || tag == Tag::Cyclic; }
  /// Order of the cyclic group (1 for Trivial); 0 if not cyclic.
  int cyclic_order() const { return tag == Tag::Trivial ? 1 : tag == Tag::Cyclic ? param : 0; }

  std::string name() const {
    switch (tag) {
      case Tag::Trivial: return "1";
      case Tag::Cyclic: return "Z_" + std::to_string(param);
      case Tag::Dicyclic: return "Dic_" + std::to_string(param);
      case Tag::BinTet: return "T*";
      case Tag::BinOct: return "O*";
      case Tag::BinIco: return "I*";
      case Tag::Dihedral: return "D_" + std::to_string(param);
      case Tag::Tet: return "T";
      case Tag::Oct: return "O";
      case Tag::Ico: return "I";
      case Tag::KleinFour: return "Z_2xZ_2";
    }
    return "?";
  }

  friend bool operator==(const IsoType&, const IsoType&) = default;
};

using OrderMultiset = std::map<int, int>;

namespace detail {

inline void add_cyclic_orders(OrderMultiset& ms, int k) {
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int phi = 0;
    for (int a = 1; a <= d; ++a)
      if (std::gcd(a, d) == 1) ++phi;
    ms[d] += phi;
  }
}

inline OrderMultiset expected_orders(const IsoType& t) {
  OrderMultiset ms;
  switch (t.tag) {
    case IsoType::Tag::Trivial: ms[1] = 1; break;
    case IsoType::Tag::Cyclic: add_cyclic_orders(ms, t.param); break;
    case IsoType::Tag::Dicyclic:
      add_cyclic_orders(ms, 2 * t.param);
      ms[4] += 2 * t.param;
      break;
    case IsoType::Tag::Dihedral:
      add_cyclic_orders(ms, t.param);
      ms[2] += t.param;
      break;
    case IsoType::Tag::KleinFour: ms = {{1, 1}, {2, 3}}; break;
    case IsoType::Tag::BinTet: ms = {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}; break;
    case IsoType::Tag::BinOct: ms = {{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}}; break;
    case IsoType::Tag::BinIco: ms = {{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 24}, {6, 20}, {10, 24}}; break;
    case IsoType::Tag::Tet: ms = {{1, 1}, {2, 3}, {3, 8}}; break;
    case IsoType::Tag::Oct: ms = {{1, 1}, {2, 9}, {3, 8}, {4, 6}}; break;
    case IsoType::Tag::Ico: ms = {{1, 1}, {2, 15}, {3, 20}, {5, 24}}; break;
  }
  return ms;
}

inline bool expected_abelian(const IsoType& t) {
  return t.tag == IsoType::Tag::Trivial || t.tag == IsoType::Tag::Cyclic || t.tag == IsoType::Tag::KleinFour;
}

}  // namespace detail

/// Candidate families a group of the given order could belong to.
/// `ambient` restricts to SU(2) or SO(3) families; nullopt means an
/// abstract group (a quotient), where every family is considered.
inline std::vector<IsoType> candidate_types(int order, std::optional<Ambient> ambient) {
  std::vector<IsoType> out;
  const bool su2 = !ambient || *ambient == Ambient::SU2;
  const bool so3 = !ambient || *ambient == Ambient::SO3;
  out.push_back(IsoType::cyclic(order));
  if (so3 && order == 4) out.push_back(IsoType::klein_four());
  if (so3 && order % 2 == 0 && order / 2 >= 3) out.push_back(IsoType::dihedral(order / 2));
  if (su2 && order % 4 == 0 && order / 4 >= 2) out.push_back(IsoType::dicyclic(order / 4));
  if (so3 && order == 12) out.push_back(IsoType::tet());
  if (so3 && order == 24) out.push_back(IsoType::oct());
  if (so3 && order == 60) out.push_back(IsoType::ico());
  if (su2 && order == 24) out.push_back(IsoType::bin_tet());
  if (su2 && order == 48) out.push_back(IsoType::bin_oct());
  if (su2 && order == 120) out.push_back(IsoType::bin_ico());
  return out;
}

/// Bitset over the elements of a group (index -> member).
using Members = std::vector<bool>;

/// Multiplication table of a finite group with identity at index 0.
class CayleyTable {
 public:
  CayleyTable() = default;

  CayleyTable(std::size_t n, std::vector<std::uint32_t> mult) : n_(n), mult_(std::move(mult)) {
    inv_.assign(n_, 0);
    order_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (mul(x, y) == 0) {
          inv_[x] = static_cast<std::uint32_t>(y);
          break;
        }
      }
      int k = 1;
      std::size_t p = x;
      while (p != 0) {
        p = mul(p, x);
        ++k;
      }
      order_[x] = k;
    }
  }

  std::size_t size() const { return n_; }
  std::size_t mul(std::size_t x, std::size_t y) const { return mult_[x * n_ + y]; }
  std::size_t inv(std::size_t x) const { return inv_[x]; }
  int order(std::size_t x) const { return order_[x]; }

  bool is_abelian() const {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = x + 1; y < n_; ++y)
        if (mul(x, y) != mul(y, x)) return false;
    return true;
  }

  OrderMultiset order_multiset() const {
    OrderMultiset ms;
    for (std::size_t x = 0; x < n_; ++x) ms[order_[x]]++;
    return ms;
  }

  /// Subgroup generated by `gens`, by breadth-first right multiplication.
  Members closure(const std::vector<std::size_t>& gens) const {
    Members in(n_, false);
    std::vector<std::size_t> todo{0};
    in[0] = true;
    for (std::size_t head = 0; head < todo.size(); ++head) {
      for (std::size_t g : gens) {
        std::size_t y = mul(todo[head], g);
        if (!in[y]) {
          in[y] = true;
          todo.push_back(y);
        }
      }
    }
    return in;
  }

  /// g H g^-1 == H for every g in `by`; `h_gens` generate H.
  bool normalizes(const std::vector<std::size_t>& by, const Members& h,
                  const std::vector<std::size_t>& h_gens) const {
    for (std::size_t g : by)
      for (std::size_t x : h_gens)
        if (!h[mul(mul(g, x), inv(g))]) return false;
    return true;
  }

  /// Greedy generating set, scanning members in index order.
  std::vector<std::size_t> generating_set(const Members& h) const {
    std::vector<std::size_t> gens;
    Members span(n_, false);
    span[0] = true;
    for (std::size_t x = 0; x < n_; ++x) {
      if (h[x] && !span[x]) {
        gens.push_back(x);
        span = closure(gens);
      }
    }
    return gens;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint32_t> inv_;
  std::vector<int> order_;
};

/// Isomorphism type from (order, element-order multiset, abelianness).
/// Throws UnrecognizedGroup when no family matches.
inline IsoType recognize_table(const CayleyTable& t, std::optional<Ambient> ambient) {
  const int n = static_cast<int>(t.size());
  const OrderMultiset ms = t.order_multiset();
  std::optional<bool> abelian;
  for (const IsoType& cand : candidate_types(n, ambient)) {
    if (detail::expected_orders(cand) != ms) continue;
    if (!abelian) abelian = t.is_abelian();
    if (detail::expected_abelian(cand) != *abelian) continue;
    return cand;
  }
  throw Error(Errc::UnrecognizedGroup, "order " + std::to_string(n) + " matches no catalog family");
}

/// A subgroup of a Cayley table: member bitset plus generators.
struct SubgroupBits {
  Members members;
  std::vector<std::size_t> gens;
  std::size_t size = 0;
};

/// Every subgroup, by the cyclic extension method: start from the cyclic
/// subgroups and repeatedly join a known subgroup with a cyclic one.
/// Ordered by size, then by member bitset.
inline std::vector<SubgroupBits> all_subgroups(const CayleyTable& t) {
  const std::size_t n = t.size();
  std::vector<SubgroupBits> out;
  std::unordered_set<Members> seen;
  std::vector<std::size_t> cyclic_gens;

  auto count = [](const Members& m) { return static_cast<std::size_t>(std::count(m.begin(), m.end(), true)); };
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> g = x == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{x};
    Members m = t.closure(g);
    if (seen.insert(m).second) {
      out.push_back({m, g, count(m)});
      if (x != 0) cyclic_gens.push_back(x);
    }
  }
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t c : cyclic_gens) {
      if (out[head].members[c]) continue;
      std::vector<std::size_t> g = out[head].gens;
      g.push_back(c);
      Members m = t.closure(g);
      if (seen.insert(m).second) out.push_back({m, g, count(m)});
    }
  }
  std::sort(out.begin(), out.end(), [](const SubgroupBits& a, const SubgroupBits& b) {
    if (a.size != b.size) return a.size < b.size;
    return std::lexicographical_compare(a.members.rbegin(), a.members.rend(), b.members.rbegin(),
                                        b.members.rend());
  });
  return out;
}

/// Ambient order bound for subgroup enumeration.
inline constexpr std::size_t kSubgroupEnumerationBound = 240;

template <GroupElement E>
class FiniteSubgroup {
 public:
  Ambient ambient() const { return ambient_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<E>& elements() const { return elems_; }
  const std::vector<std::size_t>& generators() const { return gens_; }
  const CayleyTable& table() const { return *table_; }

  std::vector<E> generator_elements() const {
    std::vector<E> out;
    for (std::size_t g : gens_) out.push_back(elems_[g]);
    return out;
  }

  std::optional<std::size_t> index_of(const E& x) const {
    auto it = index_.find(key(x));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const E& x) const { return index_of(x).has_value(); }

  /// Smallest multiplicatively closed set containing `gens` and 1.
  /// Throws CapExceeded past `cap` elements.
  static FiniteSubgroup closure(const std::vector<E>& gens, std::size_t cap, Ambient ambient) {
    if (cap < 1) throw Error(Errc::BadParam, "closure cap must be >= 1");
    // Breadth-first discovery; parent[y] = (a, g) with y = a * gens[g].
    std::vector<E> found{E::identity()};
    std::unordered_map<std::string, std::size_t> where{{key(found[0]), 0}};
    std::vector<std::vector<std::size_t>> rmul;  // rmul[x][g] = index of x * gens[g]
    std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};
    for (std::size_t head = 0; head < found.size(); ++head) {
      rmul.emplace_back(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        E y = found[head] * gens[g];
        std::string k = key(y);
        auto it = where.find(k);
        if (it == where.end()) {
          if (found.size() >= cap)
            throw Error(Errc::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
          it = where.emplace(std::move(k), found.size()).first;
          found.push_back(std::move(y));
          parent.emplace_back(head, g);
        }
        rmul[head][g] = it->second;
      }
    }
    const std::size_t n = found.size();
    // x * y = (x * a) * g along the discovery tree of y.
    std::vector<std::uint32_t> raw(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      raw[x * n] = static_cast<std::uint32_t>(x);
      for (std::size_t y = 1; y < n; ++y) {
        auto [a, g] = parent[y];
        raw[x * n + y] = static_cast<std::uint32_t>(rmul[raw[x * n + a]][g]);
      }
    }
    // Canonical order: identity, then ascending key.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::string> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = key(found[i]);
    std::sort(perm.begin() + 1, perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;

    FiniteSubgroup G;
    G.ambient_ = ambient;
    G.elems_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      G.elems_.push_back(found[perm[i]]);
      G.index_.emplace(keys[perm[i]], i);
    }
    std::vector<std::uint32_t> mult(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        mult[pos[x] * n + pos[y]] = static_cast<std::uint32_t>(pos[raw[x * n + y]]);
    G.table_ = std::make_shared<const CayleyTable>(n, std::move(mult));
    for (const E& g : gens) {
      std::size_t gi = *G.index_of(g);
      if (gi != 0 && std::find(G.gens_.begin(), G.gens_.end(), gi) == G.gens_.end()) G.gens_.push_back(gi);
    }
    return G;
  }

  /// The subgroup with the given members, reusing this group's table.
  FiniteSubgroup restrict_to(const Members& members, const std::vector<std::size_t>& gens) const {
    const std::size_t n = order();
    std::vector<std::size_t> pos(n, n);
    FiniteSubgroup H;
    H.ambient_ = ambient_;
    for (std::size_t i = 0; i < n; ++i) {
      if (!members[i]) continue;
      pos[i] = H.elems_.size();
      H.index_.emplace(key(elems_[i]), H.elems_.size());
      H.elems_.push_back(elems_[i]);
    }
    const std::size_t m = H.elems_.size();
    std::vector<std::uint32_t> mult(m * m);
    for (std::size_t i = 0; i < n; ++i) {
      if (!members[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!members[j]) continue;
        std::size_t p = table_->mul(i, j);
        if (pos[p] == n) throw Error(Errc::NotSubgroup, "member set is not closed");
        mult[pos[i] * m + pos[j]] = static_cast<std::uint32_t>(pos[p]);
      }
    }
    H.table_ = std::make_shared<const CayleyTable>(m, std::move(mult));
    for (std::size_t g : gens)
      if (g != 0) H.gens_.push_back(pos[g]);
    return H;
  }

  /// Members bitset of `H` inside this group; NotSubgroup unless H is a
  /// subset of this group.
  Members members_of(const FiniteSubgroup& H) const {
    Members m(order(), false);
    for (const E& x : H.elements()) {
      auto i = index_of(x);
      if (!i) throw Error(Errc::NotSubgroup, "element " + key(x) + " is not in the ambient group");
      m[*i] = true;
    }
    return m;
  }

 private:
  Ambient ambient_ = Ambient::SU2;
  std::vector<E> elems_;
  std::vector<std::size_t> gens_;
  std::unordered_map<std::string, std::size_t> index_;
  std::shared_ptr<const CayleyTable> table_;
};

template <GroupElement E>
FiniteSubgroup<E> closure(const std::vector<E>& gens, std::size_t cap, Ambient ambient = Ambient::SU2) {
  return FiniteSubgroup<E>::closure(gens, cap, ambient);
}

template <GroupElement E>
IsoType recognize(const FiniteSubgroup<E>& G) {
  return recognize_table(G.table(), G.ambient());
}

/// All normal subgroups, ordered by size.
template <GroupElement E>
std::vector<FiniteSubgroup<E>> normal_subgroups(const FiniteSubgroup<E>& G,
                                                std::size_t bound = kSubgroupEnumerationBound) {
  if (G.order() > bound)
    throw Error(Errc::CapExceeded, "group order " + std::to_string(G.order()) + " exceeds enumeration bound");
  const CayleyTable& t = G.table();
  std::vector<std::size_t> ggens = G.generators();
  std::vector<FiniteSubgroup<E>> out;
  for (const SubgroupBits& s : all_subgroups(t)) {
    if (t.normalizes(ggens, s.members, s.gens)) out.push_back(G.restrict_to(s.members, s.gens));
  }
  return out;
}

/// Every subgroup (not only normal ones), ordered by size.
template <GroupElement E>
std::vector<FiniteSubgroup<E>> subgroups(const FiniteSubgroup<E>& G, std::size_t bound = kSubgroupEnumerationBound) {
  if (G.order() > bound)
    throw Error(Errc::CapExceeded, "group order " + std::to_string(G.order()) + " exceeds enumeration bound");
  std::vector<FiniteSubgroup<E>> out;
  for (const SubgroupBits& s : all_subgroups(G.table())) out.push_back(G.restrict_to(s.members, s.gens));
  return out;
}

template <GroupElement E>
bool is_normal_in(const FiniteSubgroup<E>& G, const FiniteSubgroup<E>& N) {
  Members m = G.members_of(N);
  std::vector<std::size_t> ngens;
  for (std::size_t g : N.generators()) ngens.push_back(*G.index_of(N.elements()[g]));
  return G.table().normalizes(G.generators(), m, ngens);
}

/// Multiplication table of G/N on cosets; coset 0 is N itself.
template <GroupElement E>
CayleyTable quotient_table(const FiniteSubgroup<E>& G, const FiniteSubgroup<E>& N) {
  if (!is_normal_in(G, N)) throw Error(Errc::NotNormal, "subgroup is not normal");
  const CayleyTable& t = G.table();
  const std::size_t n = G.order();
  Members inN = G.members_of(N);
  std::vector<std::size_t> coset(n, n), reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset[g] != n) continue;
    const std::size_t id = reps.size();
    reps.push_back(g);
    for (std::size_t h = 0; h < n; ++h)
      if (inN[h]) coset[t.mul(g, h)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<std::uint32_t> mult(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      mult[a * m + b] = static_cast<std::uint32_t>(coset[t.mul(reps[a], reps[b])]);
  return CayleyTable(m, std::move(mult));
}

/// Abstract type of G/N. Throws NotNormal / NotSubgroup.
template <GroupElement E>
IsoType quotient_type(const FiniteSubgroup<E>& G, const FiniteSubgroup<E>& N) {
  return recognize_table(quotient_table(G, N), std::nullopt);
}

/// {g in ambient : g H g^-1 = H}.
template <GroupElement E>
FiniteSubgroup<E> normalizer_in(const FiniteSubgroup<E>& ambient, const FiniteSubgroup<E>& H) {
  const CayleyTable& t = ambient.table();
  Members inH = ambient.members_of(H);
  std::vector<std::size_t> hgens;
  for (std::size_t g : H.generators()) hgens.push_back(*ambient.index_of(H.elements()[g]));
  Members norm(ambient.order(), false);
  for (std::size_t g = 0; g < ambient.order(); ++g) norm[g] = t.normalizes({g}, inH, hgens);
  return ambient.restrict_to(norm, t.generating_set(norm));
}

/// Image under SU(2) -> SO(3).
template <GroupElement E>
FiniteSubgroup<Rotation<E>> project_so3(const FiniteSubgroup<E>& G) {
  if (G.ambient() != Ambient::SU2) throw Error(Errc::BadParam, "project_so3 needs an SU(2) subgroup");
  std::vector<Rotation<E>> gens;
  for (const E& g : G.generator_elements()) gens.emplace_back(g);
  return closure(gens, G.order(), Ambient::SO3);
}

// ---------------------------------------------------------------------------
// Standard copies.

/// <e^{2 pi i / k}>
inline FiniteSubgroup<Pin2Element> cyclic_group(int k) {
  if (k < 1) throw Error(Errc::BadParam, "Cyclic(k) needs k >= 1");
  return closure<Pin2Element>({Pin2Element::rotation(Rational(1, k))}, static_cast<std::size_t>(k));
}

/// <e^{i pi / m}, j>, order 4m.
inline FiniteSubgroup<Pin2Element> dicyclic_group(int m) {
  if (m < 2) throw Error(Errc::BadParam, "Dicyclic(m) needs m >= 2");
  return closure<Pin2Element>({Pin2Element::rotation(Rational(1, 2 * m)), Pin2Element::j()},
                              static_cast<std::size_t>(4 * m));
}

/// omega = -(1 + i + j + k)/2, of order 3.
inline UnitQuat omega() {
  const FieldElement h(Rational(-1, 2));
  return UnitQuat::from(h, h, h, h);
}

/// The quaternion group {+-1, +-i, +-j, +-k} = <i, j>.
inline FiniteSubgroup<UnitQuat> quaternion_group() { return closure<UnitQuat>({UnitQuat::i(), UnitQuat::j()}, 8); }

/// <i, j, omega>, order 24.
inline FiniteSubgroup<UnitQuat> binary_tetrahedral() {
  return closure<UnitQuat>({UnitQuat::i(), UnitQuat::j(), omega()}, 24);
}

/// (1 + i)/sqrt2, the extra generator taking T* to O*.
inline UnitQuat octahedral_generator() {
  const FieldElement h = FieldElement::sqrt2() * FieldElement(Rational(1, 2));
  return UnitQuat::from(h, h, 0, 0);
}

/// <i, j, omega, (1 + i)/sqrt2>, order 48.
inline FiniteSubgroup<UnitQuat> binary_octahedral() {
  return closure<UnitQuat>({UnitQuat::i(), UnitQuat::j(), omega(), octahedral_generator()}, 48);
}

/// Generator pair of I*: s = (1 + i + j + k)/2 (order 6) and
/// t = (phi + phi^-1 i + j)/2 (order 10), phi the golden ratio. Both are
/// icosians from the standard 120-element set.
inline std::pair<UnitQuat, UnitQuat> icosahedral_generators() {
  const FieldElement half(Rational(1, 2));
  const FieldElement phi = (FieldElement(1) + FieldElement::sqrt5()) * half;
  const FieldElement phi_inv = (FieldElement::sqrt5() - FieldElement(1)) * half;
  return {UnitQuat::from(half, half, half, half), UnitQuat::from(phi * half, phi_inv * half, half, 0)};
}

inline FiniteSubgroup<UnitQuat> binary_icosahedral() {
  auto [s, t] = icosahedral_generators();
  return closure<UnitQuat>({s, t}, 120);
}

// ---------------------------------------------------------------------------
// Type-erased catalog entry.

using AnySubgroup = std::variant<FiniteSubgroup<UnitQuat>, FiniteSubgroup<Pin2Element>,
                                 FiniteSubgroup<Rotation<UnitQuat>>, FiniteSubgroup<Rotation<Pin2Element>>>;

/// Standard copy of a catalog family. SU(2) tags: Trivial, Cyclic(k),
/// Dicyclic(m), BinTet, BinOct, BinIco. SO(3) tags are images of those:
/// Dihedral(m) of Dicyclic(m), Cyclic(k) in SO(3) of Cyclic(2k), Tet,
/// Oct, Ico, KleinFour.
inline AnySubgroup catalog(IsoType::Tag tag, int param = 0, Ambient ambient = Ambient::SU2) {
  using T = IsoType::Tag;
  if (ambient == Ambient::SO3) {
    switch (tag) {
      case T::Trivial: return project_so3(cyclic_group(1));
      case T::Cyclic:
        if (param < 1) throw Error(Errc::BadParam, "Cyclic(k) needs k >= 1");
        return project_so3(cyclic_group(2 * param));
      case T::Dihedral:
        if (param < 2) throw Error(Errc::BadParam, "Dihedral(m) needs m >= 2");
        return project_so3(dicyclic_group(param));
      case T::KleinFour: return project_so3(quaternion_group());
      case T::Tet: return project_so3(binary_tetrahedral());
      case T::Oct: return project_so3(binary_octahedral());
      case T::Ico: return project_so3(binary_icosahedral());
      default: throw Error(Errc::UnknownTag, "not an SO(3) family");
    }
  }
  switch (tag) {
    case T::Trivial: return cyclic_group(1);
    case T::Cyclic: return cyclic_group(param);
    case T::Dicyclic: return dicyclic_group(param);
    case T::BinTet: return binary_tetrahedral();
    case T::BinOct: return binary_octahedral();
    case T::BinIco: return binary_icosahedral();
    default: throw Error(Errc::UnknownTag, "not an SU(2) family");
  }
}

inline std::optional<IsoType::Tag> parse_tag(std::string_view s) {
  using T = IsoType::Tag;
  static const std::map<std::string, T, std::less<>> names{
      {"trivial", T::Trivial}, {"cyclic", T::Cyclic},    {"dicyclic", T::Dicyclic}, {"bintet", T::BinTet},
      {"binoct", T::BinOct},   {"binico", T::BinIco},    {"dihedral", T::Dihedral}, {"tet", T::Tet},
      {"oct", T::Oct},         {"ico", T::Ico},          {"klein", T::KleinFour},   {"kleinfour", T::KleinFour}};
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  auto it = names.find(lower);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

template <GroupElement E>
nlohmann::ordered_json to_json(const FiniteSubgroup<E>& G) {
  nlohmann::ordered_json j;
  j["ambient"] = to_string(G.ambient());
  j["order"] = G.order();
  j["iso_type"] = recognize(G).name();
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const E& g : G.generator_elements()) gens.push_back(serialize(g));
  j["generators"] = gens;
  nlohmann::ordered_json ms = nlohmann::ordered_json::object();
  for (auto [ord, cnt] : G.table().order_multiset()) ms[std::to_string(ord)] = cnt;
  j["element_order_multiset"] = ms;
  return j;
}

inline nlohmann::ordered_json to_json(const AnySubgroup& G) {
  return std::visit([](const auto& g) { return to_json(g); }, G);
}

}  // namespace eq5
