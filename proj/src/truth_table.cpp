#include "lambdadd/truth_table.hpp"

#include <algorithm>
#include <bit>

#include "lambdadd/error.hpp"
#include "lambdadd/simd/bit_kernels.hpp"

namespace lambdadd {
namespace {

std::size_t word_count(unsigned arity) {
  return arity <= 6 ? 1 : (std::size_t{1} << (arity - 6));
}

std::uint64_t low_mask(std::uint64_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

TruthTable::TruthTable(unsigned arity) : arity_(arity) {
  if (arity > kMaxArity)
    throw ContractError("truth tables are limited to arity " + std::to_string(kMaxArity));
  words_.assign(word_count(arity), 0);
}

TruthTable TruthTable::constant(unsigned arity, bool value) {
  TruthTable t(arity);
  if (value) {
    std::fill(t.words_.begin(), t.words_.end(), ~std::uint64_t{0});
    t.clear_padding();
  }
  return t;
}

TruthTable TruthTable::projection(unsigned arity, unsigned index) {
  if (index >= arity) throw ContractError("projection index out of range");
  TruthTable t(arity);
  const unsigned shift = arity - 1 - index;  // bit of the index carrying x_index
  for (std::uint64_t i = 0; i < t.size(); ++i)
    if ((i >> shift) & 1u) t.set(i, true);
  return t;
}

TruthTable TruthTable::from_bits(std::span<const bool> bits) {
  const auto n = bits.size();
  if (n == 0 || !std::has_single_bit(n))
    throw ContractError("truth table length must be a power of two");
  TruthTable t(static_cast<unsigned>(std::countr_zero(n)));
  for (std::uint64_t i = 0; i < n; ++i) t.set(i, bits[i]);
  return t;
}

TruthTable TruthTable::from_bits(std::initializer_list<int> bits) {
  const auto n = bits.size();
  if (n == 0 || !std::has_single_bit(n))
    throw ContractError("truth table length must be a power of two");
  TruthTable t(static_cast<unsigned>(std::countr_zero(n)));
  std::uint64_t i = 0;
  for (int b : bits) t.set(i++, b != 0);
  return t;
}

TruthTable TruthTable::random(unsigned arity, std::mt19937_64& rng) {
  TruthTable t(arity);
  for (auto& w : t.words_) w = rng();
  t.clear_padding();
  return t;
}

TruthTable TruthTable::from_code(unsigned arity, std::uint64_t code) {
  if (arity > 6) throw ContractError("from_code supports arity <= 6");
  TruthTable t(arity);
  t.words_[0] = code;
  t.clear_padding();
  if (t.words_[0] != code) throw ContractError("code has bits beyond the table size");
  return t;
}

TruthTable TruthTable::from_hex(unsigned arity, std::string_view hex) {
  TruthTable t(arity);
  const std::uint64_t n = t.size();
  const std::uint64_t digits = (n + 3) / 4;
  if (hex.size() != digits)
    throw ContractError("expected " + std::to_string(digits) + " hex digits for arity " +
                        std::to_string(arity));
  // The string is a big-endian number of 4*digits bits whose low n bits are
  // the table, entry 0 being the most significant of those n.
  const std::uint64_t total_bits = digits * 4;
  for (std::uint64_t d = 0; d < digits; ++d) {
    const int v = hex_value(hex[d]);
    if (v < 0) throw ContractError("invalid hex digit in truth table");
    for (int b = 0; b < 4; ++b) {
      if (!((v >> (3 - b)) & 1)) continue;
      const std::uint64_t pos = d * 4 + static_cast<std::uint64_t>(b);  // from the top
      const std::uint64_t pad = total_bits - n;
      if (pos < pad) throw ContractError("truth table value exceeds 2^(2^n)");
      t.set(pos - pad, true);
    }
  }
  return t;
}

std::string TruthTable::to_hex() const {
  const std::uint64_t n = size();
  const std::uint64_t digits = (n + 3) / 4;
  const std::uint64_t pad = digits * 4 - n;
  std::string out(digits, '0');
  for (std::uint64_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t pos = d * 4 + static_cast<std::uint64_t>(b);
      v <<= 1;
      if (pos >= pad && get(pos - pad)) v |= 1;
    }
    out[d] = "0123456789ABCDEF"[v];
  }
  return out;
}

void TruthTable::set(std::uint64_t index, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (value)
    words_[index >> 6] |= bit;
  else
    words_[index >> 6] &= ~bit;
}

bool TruthTable::eval(std::span<const bool> valuation) const {
  if (valuation.size() != arity_) throw ContractError("valuation length does not match arity");
  return get(valuation_index(valuation));
}

TruthTable TruthTable::cofactor(bool value) const {
  if (arity_ == 0) throw ContractError("cannot cofactor an arity-0 table");
  TruthTable r(arity_ - 1);
  const std::uint64_t half = size() / 2;
  if (arity_ <= 6) {
    r.words_[0] = (value ? (words_[0] >> half) : words_[0]) & low_mask(half);
  } else {
    const std::size_t hw = words_.size() / 2;
    const auto first = words_.begin() + (value ? static_cast<std::ptrdiff_t>(hw) : 0);
    std::copy(first, first + static_cast<std::ptrdiff_t>(hw), r.words_.begin());
  }
  return r;
}

TruthTable TruthTable::shannon(const TruthTable& low, const TruthTable& high) {
  low.require_same_arity(high);
  TruthTable r(low.arity_ + 1);
  const std::uint64_t half = low.size();
  if (r.arity_ <= 6) {
    r.words_[0] = low.words_[0] | (high.words_[0] << half);
  } else {
    std::copy(low.words_.begin(), low.words_.end(), r.words_.begin());
    std::copy(high.words_.begin(), high.words_.end(),
              r.words_.begin() + static_cast<std::ptrdiff_t>(low.words_.size()));
  }
  return r;
}

std::uint64_t TruthTable::popcount() const noexcept {
  return simd::active_kernels().popcount(words_.data(), words_.size());
}

bool TruthTable::is_constant(bool value) const noexcept {
  return popcount() == (value ? size() : 0);
}

std::vector<bool> TruthTable::bits() const {
  std::vector<bool> out(size());
  for (std::uint64_t i = 0; i < size(); ++i) out[i] = get(i);
  return out;
}

TruthTable TruthTable::operator~() const {
  TruthTable r(arity_);
  simd::active_kernels().not_words(r.words_.data(), words_.data(), words_.size());
  r.clear_padding();
  return r;
}

TruthTable TruthTable::operator&(const TruthTable& other) const {
  require_same_arity(other);
  TruthTable r(arity_);
  simd::active_kernels().and_words(r.words_.data(), words_.data(), other.words_.data(),
                                   words_.size());
  return r;
}

TruthTable TruthTable::operator|(const TruthTable& other) const {
  require_same_arity(other);
  TruthTable r(arity_);
  simd::active_kernels().or_words(r.words_.data(), words_.data(), other.words_.data(),
                                  words_.size());
  return r;
}

TruthTable TruthTable::operator^(const TruthTable& other) const {
  require_same_arity(other);
  TruthTable r(arity_);
  simd::active_kernels().xor_words(r.words_.data(), words_.data(), other.words_.data(),
                                   words_.size());
  return r;
}

bool TruthTable::operator==(const TruthTable& other) const noexcept {
  return arity_ == other.arity_ &&
         simd::active_kernels().equal(words_.data(), other.words_.data(), words_.size());
}

std::size_t TruthTable::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ arity_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void TruthTable::require_same_arity(const TruthTable& other) const {
  if (arity_ != other.arity_) throw ContractError("truth table arity mismatch");
}

void TruthTable::clear_padding() noexcept {
  if (arity_ < 6) words_[0] &= low_mask(size());
}

std::uint64_t valuation_index(std::span<const bool> valuation) {
  std::uint64_t index = 0;
  for (bool b : valuation) index = (index << 1) | (b ? 1u : 0u);
  return index;
}

}  // namespace lambdadd
