#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace topolab {

inline constexpr int kMaxPoints = 16;

/// A subset of the ground set of a finite space, stored as a bitmask.
/// Point i of the owning space corresponds to bit i; bits at or above the
/// space's point count stay zero. The type itself carries no ground-set
/// size, so complements are taken relative to an explicit universe.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr PointSet empty_set() { return PointSet{0}; }
  static constexpr PointSet full(int n) {
    return PointSet{static_cast<std::uint32_t>((1u << n) - 1u)};
  }
  static constexpr PointSet singleton(int p) { return PointSet{1u << p}; }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }
  constexpr bool subset_of(PointSet o) const { return (bits_ & o.bits_) == bits_; }
  constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr PointSet with(int p) const { return PointSet{bits_ | (1u << p)}; }
  constexpr PointSet without(int p) const { return PointSet{bits_ & ~(1u << p)}; }
  constexpr PointSet complement_in(PointSet universe) const {
    return PointSet{universe.bits_ & ~bits_};
  }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet{a.bits_ | b.bits_}; }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet{a.bits_ & b.bits_}; }
  friend constexpr PointSet operator^(PointSet a, PointSet b) { return PointSet{a.bits_ ^ b.bits_}; }
  /// Set difference a \ b.
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(PointSet a, PointSet b) = default;

  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  /// Lowest point index in the set; undefined on the empty set.
  constexpr int min_point() const { return std::countr_zero(bits_); }

  /// Iterates the point indices of the set in ascending order.
  class PointRange {
   public:
    class iterator {
     public:
      constexpr iterator() = default;
      constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
      constexpr int operator*() const { return std::countr_zero(rest_); }
      constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
      constexpr bool operator==(const iterator&) const = default;
     private:
      std::uint32_t rest_ = 0;
    };
    constexpr explicit PointRange(std::uint32_t bits) : bits_(bits) {}
    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }
   private:
    std::uint32_t bits_;
  };
  constexpr PointRange points() const { return PointRange{bits_}; }

 private:
  std::uint32_t bits_ = 0;
};

/// Canonical order on subsets: cardinality ascending, then among equal
/// cardinalities the set containing the lowest point where the two differ
/// comes first. Families sorted this way serialize identically on every
/// run, so golden files are byte-stable.
constexpr bool canonical_less(PointSet a, PointSet b) {
  const int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  const std::uint32_t d = a.bits() ^ b.bits();
  if (d == 0) return false;
  const std::uint32_t low = d & (0u - d);
  return (a.bits() & low) != 0;
}

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Raised when input fails the topology axioms or wire-format grammar.
class ValidationError : public Error {
  using Error::Error;
};
/// Raised when a size/bound cap is exceeded.
class BoundError : public Error {
  using Error::Error;
};
/// Raised when an operation's stated precondition does not hold.
class PreconditionError : public Error {
  using Error::Error;
};
/// Raised when a proof-backed construction fails its runtime assertion.
class ConstructionError : public Error {
  using Error::Error;
};

}  // namespace topolab
