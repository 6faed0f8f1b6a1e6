#pragma once

#include <cstdint>

#include "lambdadd/graph.hpp"
#include "lambdadd/model.hpp"

namespace lambdadd::detail {

enum class MemoOp : std::uint32_t {
  Constant = 1,
  Reduce,
  Complement,
  CompileSmall,
  And,
  Xor,
};

inline std::uint32_t memo_tag(MemoOp op, const Model& m) noexcept {
  return (static_cast<std::uint32_t>(op) << 8) | m.code();
}

inline MemoKey memo_key(MemoOp op, const Model& m, std::uint32_t a, std::uint32_t b = 0) noexcept {
  return MemoKey{a, b, memo_tag(op, m)};
}

}  // namespace lambdadd::detail
