#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

inline constexpr int kMaxLabeledEnum = 6;
inline constexpr int kMaxIsoEnum = 7;

/// Specialization preorder of a finite space. Convention, fixed here once:
/// x <= y means every open set containing x also contains y, and the open
/// sets are exactly the up-sets (x in U and x <= y imply y in U). Row x of
/// the relation is then the minimal open neighborhood of x.
struct Preorder {
  int n = 0;
  std::array<PointSet, kMaxPoints> up{};

  bool rel(int x, int y) const { return up[x].contains(y); }

  bool is_reflexive() const {
    for (int i = 0; i < n; ++i)
      if (!up[i].contains(i)) return false;
    return true;
  }
  bool is_transitive() const {
    for (int i = 0; i < n; ++i)
      for (int j : up[i].points())
        if (!up[j].subset_of(up[i])) return false;
    return true;
  }

  static Preorder of_space(const FiniteSpace& s) {
    Preorder p;
    p.n = s.point_count();
    for (int i = 0; i < p.n; ++i) p.up[i] = s.min_nbhd(i);
    return p;
  }

  FiniteSpace to_space() const {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return FiniteSpace::from_min_neighborhoods(std::move(names), up);
  }
};

namespace detail {

/// Depth-first enumeration of all preorders on n points with the first row
/// pinned, rows assigned in index order and candidate masks tried in
/// ascending numeric order. Visitor returns false to stop; the function
/// returns the number of preorders visited.
inline std::uint64_t enumerate_preorders_row0(int n, PointSet row0,
                                              const std::function<bool(const Preorder&)>& visit) {
  Preorder pre;
  pre.n = n;
  pre.up[0] = row0;
  std::uint64_t count = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i == n) {
      ++count;
      if (!visit(pre)) stop = true;
      return;
    }
    PointSet ub = PointSet::full(n);
    for (int k = 0; k < i; ++k)
      if (pre.up[k].contains(i)) ub &= pre.up[k];
    if (!ub.contains(i)) return;
    for (std::uint32_t m = 0; m < (1u << n) && !stop; ++m) {
      const PointSet cand{m};
      if (!cand.contains(i) || !cand.subset_of(ub)) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j)
        if (cand.contains(j) && !pre.up[j].subset_of(cand)) { ok = false; break; }
      if (!ok) continue;
      pre.up[i] = cand;
      self(self, i + 1);
    }
    pre.up[i] = PointSet{};
  };
  if (n == 1) {
    ++count;
    visit(pre);
  } else {
    rec(rec, 1);
  }
  return count;
}

/// Chunk keys for one level: the admissible first rows in ascending order.
/// Enumerating the chunks in this order reproduces the plain stream order,
/// which is what makes partitioned runs merge deterministically.
inline std::vector<PointSet> enumeration_chunks(int n) {
  std::vector<PointSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (m & 1u) out.push_back(PointSet{m});
  return out;
}

inline void relabel_family(const std::vector<PointSet>& in, const int* perm,
                           std::vector<PointSet>& out) {
  out.clear();
  for (PointSet s : in) {
    PointSet r;
    for (int p : s.points()) r = r.with(perm[p]);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), canonical_less);
}

inline bool family_less(const std::vector<PointSet>& a, const std::vector<PointSet>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

}  // namespace detail

/// The lexicographically least relabeling of the space over all point
/// permutations, comparing canonical open-family serializations. Two
/// spaces are homeomorphic exactly when their canonical forms have equal
/// open families. Point names stay in place; only the structure moves.
inline FiniteSpace canonical_form(const FiniteSpace& s) {
  const int n = s.point_count();
  std::array<int, kMaxPoints> perm;
  std::iota(perm.begin(), perm.begin() + n, 0);
  const std::vector<PointSet>& orig = s.opens().members();
  std::vector<PointSet> best = orig, cur;
  cur.reserve(orig.size());
  while (std::next_permutation(perm.begin(), perm.begin() + n)) {
    detail::relabel_family(orig, perm.data(), cur);
    if (detail::family_less(cur, best)) best.swap(cur);
  }
  return FiniteSpace::from_min_neighborhoods(
      s.point_names(),
      [&] {
        std::array<PointSet, kMaxPoints> nb{};
        const SetFamily fam = SetFamily::of(n, best);
        for (int p = 0; p < n; ++p) {
          PointSet m = PointSet::full(n);
          for (PointSet o : fam)
            if (o.contains(p)) m &= o;
          nb[p] = m;
        }
        return nb;
      }());
}

namespace detail {

/// True when the space is the least relabeling of itself. Bails out at the
/// first strictly smaller relabeling, which is what keeps deduplication by
/// canonical form affordable during enumeration.
inline bool is_canonical_representative(const FiniteSpace& s) {
  const int n = s.point_count();
  std::array<int, kMaxPoints> perm;
  std::iota(perm.begin(), perm.begin() + n, 0);
  const std::vector<PointSet>& orig = s.opens().members();
  std::vector<PointSet> cur;
  cur.reserve(orig.size());
  while (std::next_permutation(perm.begin(), perm.begin() + n)) {
    relabel_family(orig, perm.data(), cur);
    if (family_less(cur, orig)) return false;
  }
  return true;
}

}  // namespace detail

/// Streams every labeled topology on n points exactly once (as up-set
/// families of the enumerated preorders, first row outermost, candidate
/// rows ascending), or one canonical representative per homeomorphism
/// class when up_to_iso is set. Returns the number of spaces emitted;
/// the visitor returns false to stop early.
inline std::uint64_t enumerate_topologies(int n, bool up_to_iso,
                                          const std::function<bool(const FiniteSpace&)>& visit) {
  if (n < 1 || n > (up_to_iso ? kMaxIsoEnum : kMaxLabeledEnum))
    throw BoundError("enumerate_topologies: point count " + std::to_string(n) +
                     " exceeds the supported bound");
  std::uint64_t emitted = 0;
  bool stop = false;
  for (PointSet row0 : detail::enumeration_chunks(n)) {
    if (stop) break;
    detail::enumerate_preorders_row0(n, row0, [&](const Preorder& p) {
      const FiniteSpace sp = p.to_space();
      if (up_to_iso && !detail::is_canonical_representative(sp)) return true;
      ++emitted;
      if (!visit(sp)) stop = true;
      return !stop;
    });
  }
  return emitted;
}

/// Slow cross-check oracle: counts topologies on n labeled points by
/// directly enumerating the families of subsets that contain {} and X and
/// are closed under pairwise union and intersection. Runs as a pruned
/// depth-first search over subsets in ascending mask order; including a
/// set checks its intersections against the decided prefix and forces its
/// unions further down the order.
inline std::uint64_t count_topologies_by_family_enumeration(int n) {
  if (n < 1 || n > 5)
    throw BoundError("count_topologies_by_family_enumeration: supported for 1..5 points");
  const std::uint32_t full = (1u << n) - 1u;
  std::uint64_t count = 0;
  // membership and forcing flags indexed by mask
  std::vector<char> in(full + 1, 0), forced(full + 1, 0);
  std::vector<std::uint32_t> members{0};
  in[0] = 1;
  forced[full] = 1;
  auto rec = [&](auto&& self, std::uint32_t m) -> void {
    if (m > full) {
      ++count;
      return;
    }
    // include m (mandatory when forced)
    bool can_include = true;
    for (std::uint32_t k : members)
      if (!in[m & k]) { can_include = false; break; }
    if (can_include) {
      std::vector<std::uint32_t> newly_forced;
      for (std::uint32_t k : members) {
        const std::uint32_t u = m | k;
        if (u != m && !forced[u]) {
          forced[u] = 1;
          newly_forced.push_back(u);
        }
      }
      in[m] = 1;
      members.push_back(m);
      self(self, m + 1);
      members.pop_back();
      in[m] = 0;
      for (std::uint32_t u : newly_forced) forced[u] = 0;
    }
    if (!forced[m]) self(self, m + 1);
  };
  rec(rec, 1);
  return count;
}

}  // namespace topolab
