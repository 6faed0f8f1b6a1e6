#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lambdadd {

/// Edge-label letter. The six elementary letters each prepend one typed
/// variable; N is output negation and preserves arity.
enum class Letter : std::uint8_t { U, X, C00, C01, C10, C11, N };

inline constexpr std::array<Letter, 6> kElementaryLetters = {
    Letter::U, Letter::X, Letter::C00, Letter::C01, Letter::C10, Letter::C11};

constexpr bool is_elementary(Letter l) noexcept { return l != Letter::N; }

constexpr bool is_canalizing(Letter l) noexcept {
  return l == Letter::C00 || l == Letter::C01 || l == Letter::C10 ||
         l == Letter::C11;
}

/// c_{branch,value}: the variable forces `value` when it equals `branch`.
constexpr Letter canalizing(bool branch, bool value) noexcept {
  if (!branch) return value ? Letter::C01 : Letter::C00;
  return value ? Letter::C11 : Letter::C10;
}

/// Only meaningful for canalizing letters.
constexpr bool canalizing_branch(Letter l) noexcept {
  return l == Letter::C10 || l == Letter::C11;
}
constexpr bool canalizing_value(Letter l) noexcept {
  return l == Letter::C01 || l == Letter::C11;
}

/// Bit position used by model alphabets.
constexpr std::uint8_t letter_bit(Letter l) noexcept {
  return static_cast<std::uint8_t>(1u << static_cast<unsigned>(l));
}

constexpr std::string_view token(Letter l) noexcept {
  switch (l) {
    case Letter::U: return "U";
    case Letter::X: return "X";
    case Letter::C00: return "C00";
    case Letter::C01: return "C01";
    case Letter::C10: return "C10";
    case Letter::C11: return "C11";
    case Letter::N: return "N";
  }
  return "?";
}

/// Case-insensitive; accepts "u", "x", "c00".."c11", "n".
std::optional<Letter> parse_letter(std::string_view text) noexcept;

}  // namespace lambdadd
