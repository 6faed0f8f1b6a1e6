#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lambdadd/letter.hpp"
#include "lambdadd/oracle.hpp"

namespace lambdadd {

/// An ordered model: a set of elementary letters plus an optional negation
/// letter. Models are partially ordered by inclusion of both components.
struct Model {
  std::uint8_t letters = 0;  // bitset over letter_bit()
  bool negation = false;

  static constexpr Model of(std::initializer_list<Letter> ls, bool neg) noexcept {
    Model m;
    for (Letter l : ls)
      if (is_elementary(l)) m.letters |= letter_bit(l);
    m.negation = neg;
    return m;
  }

  constexpr bool has(Letter l) const noexcept {
    return l == Letter::N ? negation : (letters & letter_bit(l)) != 0;
  }

  /// Compact identifier, unique per model (7 bits).
  constexpr std::uint32_t code() const noexcept {
    return letters | (negation ? 0x80u : 0u);
  }

  /// Preset name when the model matches one, otherwise "custom:..." form.
  std::string name() const;

  /// Accepts the preset names ("o-nucx", ...) and "custom:U,X,C00+neg".
  static std::optional<Model> parse(std::string_view text);

  friend constexpr bool operator==(const Model&, const Model&) = default;
};

namespace models {
inline constexpr Model S = Model::of({}, false);
inline constexpr Model SN = Model::of({}, true);
inline constexpr Model OU = Model::of({Letter::U}, false);
inline constexpr Model ONU = Model::of({Letter::U}, true);
inline constexpr Model OC10 = Model::of({Letter::C10}, false);
inline constexpr Model OUC10 = Model::of({Letter::U, Letter::C10}, false);
inline constexpr Model ONUC10C11 = Model::of({Letter::U, Letter::C10, Letter::C11}, true);
inline constexpr Model OUC0 = Model::of({Letter::U, Letter::C00, Letter::C10}, false);
inline constexpr Model OUC =
    Model::of({Letter::U, Letter::C00, Letter::C01, Letter::C10, Letter::C11}, false);
inline constexpr Model ONUC =
    Model::of({Letter::U, Letter::C00, Letter::C01, Letter::C10, Letter::C11}, true);
inline constexpr Model ONUCX = Model::of(
    {Letter::U, Letter::X, Letter::C00, Letter::C01, Letter::C10, Letter::C11}, true);
}  // namespace models

struct NamedModel {
  std::string_view name;
  Model model;
};

/// The eleven named presets, in catalog order.
std::span<const NamedModel> preset_models() noexcept;

/// Covering edges of the model lattice drawn for the named variants
/// (lower model first).
struct LatticeEdge {
  Model lower;
  Model upper;
};
std::span<const LatticeEdge> lattice_edges() noexcept;

/// ℓ_• : the letter such that ℓ.• ≡ •.ℓ_•. Throws ContractError for N.
Letter neg_conjugate(Letter l);

/// True iff the alphabet is closed under neg_conjugate.
bool is_stable(const Model& m) noexcept;

/// a ≤ b in the model lattice.
bool lattice_leq(const Model& a, const Model& b) noexcept;

/// Letter correspondence between Shannon- and Davio-based rules. Throws
/// ContractError for N.
Letter translate_letter(Combinator from, Combinator to, Letter l);

std::optional<Combinator> parse_combinator(std::string_view text) noexcept;

}  // namespace lambdadd
