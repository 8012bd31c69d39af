#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "topolab/enumerate.hpp"
#include "topolab/io.hpp"
#include "topolab/locally_closed.hpp"

namespace topolab {

/// A membership predicate over (space, subset): either one of the openness
/// variants or one of the locally-closed families.
struct Predicate {
  enum class Kind { Variant, LocallyClosed };
  Kind kind = Kind::Variant;
  int idx = 0;

  static Predicate of(Variant v) { return {Kind::Variant, index_of(v)}; }
  static Predicate of(LCVariant v) { return {Kind::LocallyClosed, index_of(v)}; }

  bool holds(const FiniteSpace& s, PointSet a) const {
    if (kind == Kind::Variant)
      return variant_open_family(s, static_cast<Variant>(idx)).contains(a);
    return lc_family(s, static_cast<LCVariant>(idx)).contains(a);
  }

  std::string name() const {
    return std::string(kind == Kind::Variant ? name_of(static_cast<Variant>(idx))
                                             : name_of(static_cast<LCVariant>(idx)));
  }

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

inline std::optional<Predicate> parse_predicate(std::string_view s) {
  if (auto lc = parse_lc_variant(s)) return Predicate::of(*lc);
  if (auto v = parse_variant(s)) return Predicate::of(*v);
  return std::nullopt;
}

/// An implication "antecedent membership implies consequent membership",
/// checked per subset.
struct ClaimSpec {
  Predicate antecedent;
  Predicate consequent;

  std::string name() const { return antecedent.name() + "=>" + consequent.name(); }
};

inline std::optional<ClaimSpec> parse_claim(std::string_view s) {
  const auto arrow = s.find("=>");
  if (arrow == std::string_view::npos) return std::nullopt;
  auto a = parse_predicate(s.substr(0, arrow));
  auto c = parse_predicate(s.substr(arrow + 2));
  if (!a || !c) return std::nullopt;
  return ClaimSpec{*a, *c};
}

/// Outcome of a counterexample search: either a witnessing (space, subset)
/// pair, or a certificate that every space up to the bound was scanned.
struct CounterexampleRecord {
  ClaimSpec claim;
  enum class Status { Found, Exhausted } status = Status::Exhausted;
  std::optional<FiniteSpace> space;
  std::optional<PointSet> subset;
  std::uint64_t checked_spaces = 0;
  int max_n = 0;
  std::int64_t elapsed_ms = 0;
};

/// Re-evaluates a Found record from scratch; search results are
/// self-certifying.
inline bool recheck(const CounterexampleRecord& rec) {
  if (rec.status != CounterexampleRecord::Status::Found) return true;
  return rec.claim.antecedent.holds(*rec.space, *rec.subset) &&
         !rec.claim.consequent.holds(*rec.space, *rec.subset);
}

inline std::string status_string(const CounterexampleRecord& rec) {
  if (rec.status == CounterexampleRecord::Status::Found) return "Found";
  return "ExhaustedUpTo(" + std::to_string(rec.max_n) + ")";
}

/// Stable-keyed JSON rendering of a record. elapsed_ms is informational
/// and excluded from golden comparisons.
inline nlohmann::ordered_json record_to_json(const CounterexampleRecord& rec) {
  nlohmann::ordered_json j;
  j["claim"] = rec.claim.name();
  j["status"] = status_string(rec);
  j["space"] = rec.space ? nlohmann::ordered_json(format_space(*rec.space))
                         : nlohmann::ordered_json(nullptr);
  j["subset"] = rec.subset ? nlohmann::ordered_json(format_set(*rec.space, *rec.subset))
                           : nlohmann::ordered_json(nullptr);
  j["checked_spaces"] = rec.checked_spaces;
  j["max_n"] = rec.max_n;
  j["elapsed_ms"] = rec.elapsed_ms;
  return j;
}

namespace detail {

struct ChunkOutcome {
  std::uint64_t scanned = 0;               // spaces enumerated in this chunk
  std::optional<FiniteSpace> space;        // first hit, if any
  std::optional<PointSet> subset;
  std::uint64_t hit_index = 0;             // 1-based index of the hit within the chunk
};

inline ChunkOutcome scan_chunk(int n, PointSet row0, const ClaimSpec& claim,
                               const std::atomic<int>* cancel_below) {
  ChunkOutcome out;
  enumerate_preorders_row0(n, row0, [&](const Preorder& pre) {
    if (cancel_below && static_cast<int>(row0.bits()) > cancel_below->load()) return false;
    const FiniteSpace sp = pre.to_space();
    ++out.scanned;
    for (PointSet a : canonical_subset_order(n)) {
      if (claim.antecedent.holds(sp, a) && !claim.consequent.holds(sp, a)) {
        out.space = sp;
        out.subset = a;
        out.hit_index = out.scanned;
        return false;
      }
    }
    return true;
  });
  return out;
}

}  // namespace detail

/**
 * Searches spaces with n ascending, within each n in enumeration order,
 * and subsets in canonical order; returns the first counterexample or an
 * exhaustion certificate. checked_spaces counts every space up to and
 * including the hit. Chunks (grouped by the first preorder row) can be
 * scanned by several workers; the merge keeps the earliest chunk's hit, so
 * the record is identical for every worker count.
 */
inline CounterexampleRecord find_counterexample(const ClaimSpec& claim, int max_n,
                                                int workers = 1) {
  if (max_n < 1 || max_n > kMaxLabeledEnum)
    throw BoundError("find_counterexample: bound " + std::to_string(max_n) +
                     " exceeds the supported range");
  const auto t0 = std::chrono::steady_clock::now();
  CounterexampleRecord rec;
  rec.claim = claim;
  rec.max_n = max_n;
  std::uint64_t checked = 0;
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<PointSet> chunks = detail::enumeration_chunks(n);
    std::vector<detail::ChunkOutcome> outcomes(chunks.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < chunks.size(); ++i) {
        outcomes[i] = detail::scan_chunk(n, chunks[i], claim, nullptr);
        if (outcomes[i].space) break;  // later chunks cannot precede this hit
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::atomic<int> cancel_below{static_cast<int>(1u << n)};
      auto work = [&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= chunks.size()) return;
          outcomes[i] = detail::scan_chunk(n, chunks[i], claim, &cancel_below);
          if (outcomes[i].space) {
            int cur = cancel_below.load();
            const int mine = static_cast<int>(chunks[i].bits());
            while (mine < cur && !cancel_below.compare_exchange_weak(cur, mine)) {
            }
          }
        }
      };
      std::vector<std::thread> pool;
      const int nw = std::min<int>(workers, static_cast<int>(chunks.size()));
      pool.reserve(nw);
      for (int w = 0; w < nw; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      if (outcomes[i].space) {
        rec.status = CounterexampleRecord::Status::Found;
        rec.space = outcomes[i].space;
        rec.subset = outcomes[i].subset;
        rec.checked_spaces = checked + outcomes[i].hit_index;
        for (std::size_t k = 0; k < i; ++k) rec.checked_spaces += outcomes[k].scanned;
        rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return rec;
      }
      checked += outcomes[i].scanned;
    }
  }
  rec.status = CounterexampleRecord::Status::Exhausted;
  rec.checked_spaces = checked;
  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rec;
}

/// Both directions of the b-locally-closed / e-locally-closed comparison;
/// the pair is the empirical independence answer up to max_n (independent
/// iff both directions produce a counterexample). Nothing is assumed about
/// the outcome.
inline std::pair<CounterexampleRecord, CounterexampleRecord> question_3_10_search(
    int max_n, int workers = 1) {
  const ClaimSpec b_to_e{Predicate::of(LCVariant::BLC), Predicate::of(LCVariant::ELC)};
  const ClaimSpec e_to_b{Predicate::of(LCVariant::ELC), Predicate::of(LCVariant::BLC)};
  return {find_counterexample(b_to_e, max_n, workers),
          find_counterexample(e_to_b, max_n, workers)};
}

// ---------------------------------------------------------------------------
// Per-space theorem suite
// ---------------------------------------------------------------------------

struct TheoremCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first failing subset or pair
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t failed_count() const {
    std::size_t k = 0;
    for (const auto& c : checks)
      if (!c.passed) ++k;
    return k;
  }
};

/**
 * Model-checks every family-level statement the engine relies on, on one
 * space: the inclusion diagram between the openness variants and between
 * the locally-closed families, the lattice facts for the a-open family,
 * the intersection/union lemmas, both five-way characterizations, the
 * interpolation, sandwich, disjointness and separated-union constructions,
 * and the submaximality equivalence. Failures are reported, not thrown.
 */
inline TheoremReport verify_theorem_suite(const FiniteSpace& s, bool allow_large = false) {
  if (!allow_large && s.point_count() > 5)
    throw BoundError("verify_theorem_suite: spaces beyond 5 points need allow_large");
  TheoremReport rep;
  auto add = [&rep](std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(name), ok, ok ? "" : std::move(detail)});
  };
  const int n = s.point_count();
  const PointSet x = s.universe();
  const auto& subsets = canonical_subset_order(n);

  const SetFamily* fam[kVariantCount];
  const SetFamily* cfa[kVariantCount];
  for (Variant v : kAllVariants) {
    fam[index_of(v)] = &variant_open_family(s, v);
    cfa[index_of(v)] = &variant_closed_family(s, v);
  }
  const SetFamily* lcf[kLCVariantCount];
  for (LCVariant v : kAllLCVariants) lcf[index_of(v)] = &lc_family(s, v);

  auto incl = [&](const SetFamily& a, const SetFamily& b, std::string name) {
    for (PointSet m : a)
      if (!b.contains(m)) {
        add(std::move(name), false, format_set(s, m));
        return;
      }
    add(std::move(name), true);
  };
  auto F = [&](Variant v) -> const SetFamily& { return *fam[index_of(v)]; };
  auto C = [&](Variant v) -> const SetFamily& { return *cfa[index_of(v)]; };
  auto L = [&](LCVariant v) -> const SetFamily& { return *lcf[index_of(v)]; };

  // variant inclusion chains
  incl(F(Variant::Open), F(Variant::Alpha), "open-in-alpha");
  incl(F(Variant::Alpha), F(Variant::Semi), "alpha-in-semi");
  incl(F(Variant::Semi), F(Variant::BOpen), "semi-in-b");
  incl(F(Variant::Delta), F(Variant::AOpen), "delta-in-a");
  incl(F(Variant::AOpen), F(Variant::Alpha), "a-in-alpha");
  incl(F(Variant::AOpen), F(Variant::EOpen), "a-in-e");
  incl(F(Variant::AOpen), F(Variant::Feebly), "a-in-feebly");
  add("feebly-equals-alpha", F(Variant::Feebly) == F(Variant::Alpha));

  // a-open lattice facts and their closed duals
  {
    const SetFamily& ao = F(Variant::AOpen);
    const SetFamily& ac = C(Variant::AOpen);
    bool ok = ao.contains(PointSet::empty_set()) && ao.contains(x) &&
              ac.contains(PointSet::empty_set()) && ac.contains(x);
    std::string det;
    for (PointSet p : ao) {
      for (PointSet q : ao) {
        if (!ao.contains(p & q) || !ao.contains(p | q)) {
          ok = false;
          det = format_set(s, p) + "," + format_set(s, q);
          break;
        }
      }
      if (!ok) break;
    }
    add("a-open-lattice", ok, det);
    ok = true;
    det.clear();
    for (PointSet p : ac) {
      for (PointSet q : ac) {
        if (!ac.contains(p | q) || !ac.contains(p & q)) {
          ok = false;
          det = format_set(s, p) + "," + format_set(s, q);
          break;
        }
      }
      if (!ok) break;
    }
    add("a-closed-lattice", ok, det);
  }

  // semi-closure of an open set has a closed form
  {
    bool ok = true;
    std::string det;
    for (PointSet u : s.opens())
      if (semi_closure(s, u) != (u | interior(s, closure(s, u)))) {
        ok = false;
        det = format_set(s, u);
        break;
      }
    add("scl-of-open-identity", ok, det);
  }

  // meets of a-open with e-open, joins of a-closed with e-closed
  {
    bool ok = true;
    std::string det;
    for (PointSet p : F(Variant::AOpen)) {
      for (PointSet q : F(Variant::EOpen))
        if (!F(Variant::EOpen).contains(p & q)) {
          ok = false;
          det = format_set(s, p) + "," + format_set(s, q);
          break;
        }
      if (!ok) break;
    }
    add("a-e-open-meet", ok, det);
    ok = true;
    det.clear();
    for (PointSet p : C(Variant::AOpen)) {
      for (PointSet q : C(Variant::EOpen))
        if (!C(Variant::EOpen).contains(p | q)) {
          ok = false;
          det = format_set(s, p) + "," + format_set(s, q);
          break;
        }
      if (!ok) break;
    }
    add("a-e-closed-join", ok, det);
  }

  // closure/interior duality for the three closure-bearing variants
  for (Variant v : {Variant::Semi, Variant::AOpen, Variant::EOpen}) {
    bool ok = true;
    std::string det;
    for (PointSet a : subsets)
      if (variant_interior(s, v, a) !=
          variant_closure(s, v, a.complement_in(x)).complement_in(x)) {
        ok = false;
        det = format_set(s, a);
        break;
      }
    add(std::string(name_of(v)) + "-closure-duality", ok, det);
  }

  // locally-closed diagram
  incl(F(Variant::AOpen), L(LCVariant::ALC), "ao-in-alc");
  incl(C(Variant::AOpen), L(LCVariant::ALC), "ac-in-alc");
  incl(L(LCVariant::ALC), L(LCVariant::ELC), "arrow-alc-elc");
  incl(L(LCVariant::ALC), L(LCVariant::FLC), "arrow-alc-flc");
  incl(L(LCVariant::ALC), L(LCVariant::AlphaLC), "arrow-alc-alphalc");
  incl(L(LCVariant::LC), L(LCVariant::FLC), "arrow-lc-flc");
  incl(L(LCVariant::LC), L(LCVariant::AlphaLC), "arrow-lc-alphalc");
  incl(L(LCVariant::FLC), L(LCVariant::BLC), "arrow-flc-blc");
  incl(L(LCVariant::FLC), L(LCVariant::ELC), "arrow-flc-elc");
  incl(L(LCVariant::AlphaLC), L(LCVariant::ELC), "arrow-alphalc-elc");
  incl(L(LCVariant::AlphaLC), L(LCVariant::BLC), "arrow-alphalc-blc");
  add("flc-equals-alphalc", L(LCVariant::FLC) == L(LCVariant::AlphaLC));

  // intersection stability of aLC, and the mixed a/e statement
  {
    bool ok = true;
    std::string det;
    for (PointSet p : L(LCVariant::ALC)) {
      for (PointSet q : L(LCVariant::ALC))
        if (!L(LCVariant::ALC).contains(p & q)) {
          ok = false;
          det = format_set(s, p) + "," + format_set(s, q);
          break;
        }
      if (!ok) break;
    }
    add("alc-meet-closed", ok, det);
    ok = true;
    det.clear();
    for (PointSet p : L(LCVariant::ALC)) {
      for (PointSet q : L(LCVariant::ELC))
        if (!L(LCVariant::ELC).contains(p & q)) {
          ok = false;
          det = format_set(s, p) + "," + format_set(s, q);
          break;
        }
      if (!ok) break;
    }
    add("alc-elc-meet", ok, det);
  }

  // five-way characterizations agree, and the b-form witness is sound
  {
    bool ok = true, wok = true;
    std::string det, wdet;
    for (PointSet a : subsets) {
      const CharacterizationRecord r = characterize_alc(s, a);
      if (!r.all_agree()) {
        ok = false;
        det = format_set(s, a);
        break;
      }
      if (r.form_b) {
        if (!F(Variant::AOpen).contains(*r.witness) ||
            (*r.witness & a_closure(s, a)) != a) {
          wok = false;
          wdet = format_set(s, a);
        }
      }
    }
    add("alc-characterization", ok, det);
    add("alc-witness-b-form", wok, wdet);
    ok = true;
    det.clear();
    for (PointSet a : subsets) {
      if (!characterize_alo(s, a).all_agree()) {
        ok = false;
        det = format_set(s, a);
        break;
      }
    }
    add("alo-characterization", ok, det);
  }

  // disjointness construction from canonical witnesses
  {
    bool ok = true;
    std::string det;
    for (PointSet a : L(LCVariant::ALC)) {
      const auto w = lc_witness(s, LCVariant::ALC, a);
      const PointSet f = disjoint_aclosed_witness(s, *w);
      if (!C(Variant::AOpen).contains(f) || f.intersects(a)) {
        ok = false;
        det = format_set(s, a);
        break;
      }
    }
    add("disjoint-aclosed", ok, det);
  }

  // interpolation construction
  {
    bool ok = true;
    std::string det;
    for (PointSet p : F(Variant::AOpen)) {
      for (PointSet q : C(Variant::AOpen)) {
        const auto [e, f] = interpolation_witness(s, p, q);
        if (!F(Variant::AOpen).contains(e) || !C(Variant::AOpen).contains(f) ||
            !(p & q).subset_of(f) || !e.subset_of(p | q)) {
          ok = false;
          det = format_set(s, p) + "," + format_set(s, q);
          break;
        }
      }
      if (!ok) break;
    }
    add("interpolation", ok, det);
  }

  // sandwich construction for every W inside every a-locally closed H
  {
    bool ok = true;
    std::string det;
    for (PointSet h : L(LCVariant::ALC)) {
      std::uint32_t w = h.bits();
      while (true) {
        const PointSet ws{w};
        const PointSet k = sandwich_witness(s, ws, h);
        if (!L(LCVariant::ALC).contains(k) || !ws.subset_of(k) || !k.subset_of(h)) {
          ok = false;
          det = format_set(s, ws) + " in " + format_set(s, h);
          break;
        }
        if (w == 0) break;
        w = (w - 1) & h.bits();
      }
      if (!ok) break;
    }
    add("sandwich", ok, det);
  }

  // a-submaximal iff every subset is a-locally closed
  add("submaximal-iff-full-alc",
      is_variant_submaximal(s, Variant::AOpen) ==
          (L(LCVariant::ALC).size() == (std::size_t{1} << n)));

  // separated unions stay a-locally closed via the explicit witness
  {
    bool ok = true;
    std::string det;
    for (PointSet a : L(LCVariant::ALC)) {
      for (PointSet b : L(LCVariant::ALC)) {
        if (!are_a_separated(s, a, b)) continue;
        try {
          const LCWitness w = separated_union_witness(s, a, b);
          if (!L(LCVariant::ALC).contains(w.witnessed()) || w.witnessed() != (a | b))
            throw ConstructionError("bad witness");
        } catch (const Error&) {
          ok = false;
          det = format_set(s, a) + "," + format_set(s, b);
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    add("separated-union", ok, det);
  }

  // on regular e-spaces the three submaximality notions coincide
  {
    bool ok = true;
    if (is_regular(s) && is_variant_space(s, Variant::EOpen)) {
      const bool s0 = is_variant_submaximal(s, Variant::Open);
      const bool s1 = is_variant_submaximal(s, Variant::AOpen);
      const bool s2 = is_variant_submaximal(s, Variant::EOpen);
      ok = (s0 == s1) && (s1 == s2);
    }
    add("regular-espace-submaximal", ok);
  }

  return rep;
}

}  // namespace topolab
