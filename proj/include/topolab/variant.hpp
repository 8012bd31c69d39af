#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace topolab {

/// The openness notions the engine understands. The closed dual of each
/// tag is "complement is tag-open".
enum class Variant {
  Open,
  Delta,
  RegularOpen,
  Semi,
  Alpha,
  AOpen,
  BOpen,
  EOpen,
  Feebly,
};

inline constexpr int kVariantCount = 9;
inline constexpr std::array<Variant, kVariantCount> kAllVariants = {
    Variant::Open,  Variant::Delta, Variant::RegularOpen,
    Variant::Semi,  Variant::Alpha, Variant::AOpen,
    Variant::BOpen, Variant::EOpen, Variant::Feebly,
};

constexpr int index_of(Variant v) { return static_cast<int>(v); }

constexpr std::string_view name_of(Variant v) {
  switch (v) {
    case Variant::Open: return "open";
    case Variant::Delta: return "delta";
    case Variant::RegularOpen: return "regular";
    case Variant::Semi: return "semi";
    case Variant::Alpha: return "alpha";
    case Variant::AOpen: return "a";
    case Variant::BOpen: return "b";
    case Variant::EOpen: return "e";
    case Variant::Feebly: return "feebly";
  }
  return "?";
}

/// Locally-closed notions: sets of the form U ∩ V with U variant-open and
/// V variant-closed, one notion per underlying variant.
enum class LCVariant { LC, AlphaLC, ALC, BLC, ELC, FLC };

inline constexpr int kLCVariantCount = 6;
inline constexpr std::array<LCVariant, kLCVariantCount> kAllLCVariants = {
    LCVariant::LC,  LCVariant::AlphaLC, LCVariant::ALC,
    LCVariant::BLC, LCVariant::ELC,     LCVariant::FLC,
};

constexpr int index_of(LCVariant v) { return static_cast<int>(v); }

/// The variant pairing is total and fixed.
constexpr Variant underlying_variant(LCVariant v) {
  switch (v) {
    case LCVariant::LC: return Variant::Open;
    case LCVariant::AlphaLC: return Variant::Alpha;
    case LCVariant::ALC: return Variant::AOpen;
    case LCVariant::BLC: return Variant::BOpen;
    case LCVariant::ELC: return Variant::EOpen;
    case LCVariant::FLC: return Variant::Feebly;
  }
  return Variant::Open;
}

constexpr std::string_view name_of(LCVariant v) {
  switch (v) {
    case LCVariant::LC: return "LC";
    case LCVariant::AlphaLC: return "alphaLC";
    case LCVariant::ALC: return "aLC";
    case LCVariant::BLC: return "bLC";
    case LCVariant::ELC: return "eLC";
    case LCVariant::FLC: return "FLC";
  }
  return "?";
}

namespace detail {
inline bool iequal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i], y = b[i];
    if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
    if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
    if (x != y) return false;
  }
  return true;
}
}  // namespace detail

inline std::optional<Variant> parse_variant(std::string_view s) {
  for (Variant v : kAllVariants)
    if (detail::iequal(s, name_of(v))) return v;
  return std::nullopt;
}

inline std::optional<LCVariant> parse_lc_variant(std::string_view s) {
  for (LCVariant v : kAllLCVariants)
    if (detail::iequal(s, name_of(v))) return v;
  return std::nullopt;
}

}  // namespace topolab
