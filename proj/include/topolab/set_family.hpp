#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <vector>

#include "topolab/point_set.hpp"

namespace topolab {

/// A deduplicated collection of subsets of an n-point ground set, kept in
/// canonical order, with O(1) membership keyed by bit pattern.
class SetFamily {
 public:
  SetFamily() = default;

  static SetFamily of(int n, std::vector<PointSet> sets) {
    SetFamily f;
    f.n_ = n;
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    f.members_ = std::move(sets);
    f.index_.assign((std::size_t{1} << n) / 64 + 1, 0);
    for (PointSet s : f.members_) {
      f.index_[s.bits() >> 6] |= std::uint64_t{1} << (s.bits() & 63);
    }
    return f;
  }

  int ground_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool contains(PointSet s) const {
    return (index_[s.bits() >> 6] >> (s.bits() & 63)) & 1u;
  }
  const std::vector<PointSet>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  SetFamily complements(PointSet universe) const {
    std::vector<PointSet> out;
    out.reserve(members_.size());
    for (PointSet s : members_) out.push_back(s.complement_in(universe));
    return of(n_, std::move(out));
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_ = 0;
  std::vector<PointSet> members_;
  std::vector<std::uint64_t> index_;
};

/// All 2^n subsets in canonical order. Cached per ground-set size; the
/// theorem lab walks this for every space it visits.
inline const std::vector<PointSet>& canonical_subset_order(int n) {
  static std::vector<PointSet> cache[kMaxPoints + 1];
  static std::mutex mu;
  std::scoped_lock lk(mu);
  auto& v = cache[n];
  if (v.empty()) {
    v.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) v.push_back(PointSet{m});
    std::sort(v.begin(), v.end(), canonical_less);
  }
  return v;
}

}  // namespace topolab
