#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lambdadd {

/// Dense truth table of a Boolean function of arity n.
///
/// Bit i holds f(x0, ..., x_{n-1}) for the valuation whose binary
/// expansion (x0 most significant) equals i. Consequently the first half of
/// the table is the x0 = 0 cofactor and the second half the x0 = 1 cofactor.
/// Bits are packed little-endian into 64-bit words; unused high bits of the
/// last word are always zero.
class TruthTable {
 public:
  static constexpr unsigned kMaxArity = 24;

  /// Constant 0 of arity 0.
  TruthTable() : TruthTable(0) {}

  /// All-zero table of the given arity.
  explicit TruthTable(unsigned arity);

  static TruthTable constant(unsigned arity, bool value);
  /// x_index as a function of arity `arity`.
  static TruthTable projection(unsigned arity, unsigned index);
  static TruthTable from_bits(std::span<const bool> bits);
  static TruthTable from_bits(std::initializer_list<int> bits);
  /// Uniformly random table: consecutive 64-bit draws fill the packed words.
  static TruthTable random(unsigned arity, std::mt19937_64& rng);
  /// Table whose index-th entry is bit `index` of `code` (arity <= 6).
  static TruthTable from_code(unsigned arity, std::uint64_t code);

  /// Hex text form: the bits read as one binary number, entry 0 first
  /// (most significant), rendered in ceil(2^n / 4) hex digits.
  static TruthTable from_hex(unsigned arity, std::string_view hex);
  std::string to_hex() const;

  unsigned arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << arity_; }

  bool get(std::uint64_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void set(std::uint64_t index, bool value) noexcept;

  /// Throws ContractError unless valuation.size() == arity().
  bool eval(std::span<const bool> valuation) const;

  /// Restriction x0 = value; arity drops by one. Requires arity >= 1.
  TruthTable cofactor(bool value) const;

  /// (low ⋆ high): low on x0 = 0, high on x0 = 1.
  static TruthTable shannon(const TruthTable& low, const TruthTable& high);

  std::uint64_t popcount() const noexcept;
  bool is_constant(bool value) const noexcept;
  /// Packed value for arity <= 6 tables.
  std::uint64_t code() const noexcept { return words_[0]; }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::vector<bool> bits() const;

  TruthTable operator~() const;
  TruthTable operator&(const TruthTable& other) const;
  TruthTable operator|(const TruthTable& other) const;
  TruthTable operator^(const TruthTable& other) const;

  bool operator==(const TruthTable& other) const noexcept;

  std::size_t hash() const noexcept;

 private:
  void require_same_arity(const TruthTable& other) const;
  void clear_padding() noexcept;

  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

struct TruthTableHash {
  std::size_t operator()(const TruthTable& t) const noexcept { return t.hash(); }
};

/// Index of a valuation under the x0-most-significant convention.
std::uint64_t valuation_index(std::span<const bool> valuation);

}  // namespace lambdadd
