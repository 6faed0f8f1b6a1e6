#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lambdadd/letter.hpp"
#include "lambdadd/truth_table.hpp"

namespace lambdadd {

struct WordId {
  std::uint32_t value = 0;
  friend auto operator<=>(WordId, WordId) = default;
};
struct NodeId {
  std::uint32_t value = 0;
  friend auto operator<=>(NodeId, NodeId) = default;
};
struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

/// A function: an edge of some Manager together with its arity.
struct FuncHandle {
  EdgeId edge;
  std::uint32_t arity = 0;
  std::uint64_t owner = 0;  // Manager::id()
  friend bool operator==(const FuncHandle&, const FuncHandle&) = default;
};

/// Key of the per-Manager operation caches.
struct MemoKey {
  std::uint32_t a;
  std::uint32_t b;
  std::uint32_t tag;  // operation and model
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::uint64_t h = (std::uint64_t{k.a} << 32) | k.b;
    h ^= std::uint64_t{k.tag} * 0x9e3779b97f4a7c15ull;
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};

/// Instrumentation shared by the algorithm modules.
struct OpCounters {
  std::uint64_t andb_recursions = 0;       // memo misses that split both operands
  std::uint64_t xor_recursions = 0;
  std::uint64_t complement_recursions = 0; // negation by descent (negation-free models)
  std::uint64_t negb_recursions = 0;       // recursive steps taken by negb
  std::uint64_t sat_letters_touched = 0;   // letters inspected by is_sat / is_taut
};

/// Hash-consing authority for one universe of diagrams.
///
/// Words are interned as cons lists (head letter, tail word), edges as
/// (word, target node) pairs and diamond nodes as (lo edge, hi edge) pairs,
/// so structural equality of any of them is identity equality. Nothing is
/// ever freed. A Manager is single-owner: calls must be serialized.
class Manager {
 public:
  Manager();
  Manager(const Manager&) = delete;
  Manager& operator=(const Manager&) = delete;

  std::uint64_t id() const noexcept { return id_; }

  // -- words ---------------------------------------------------------------
  static constexpr WordId epsilon() noexcept { return WordId{0}; }
  WordId word_cons(Letter head, WordId tail);
  WordId make_word(std::span<const Letter> letters);
  std::vector<Letter> letters(WordId w) const;
  bool word_empty(WordId w) const noexcept { return w.value == 0; }
  Letter word_head(WordId w) const noexcept { return words_[w.value].head; }
  WordId word_tail(WordId w) const noexcept { return words_[w.value].tail; }
  std::uint32_t word_length(WordId w) const noexcept { return words_[w.value].length; }
  std::uint32_t word_elementary(WordId w) const noexcept { return words_[w.value].elementary; }

  // -- nodes ---------------------------------------------------------------
  static constexpr NodeId terminal(bool value) noexcept { return NodeId{value ? 1u : 0u}; }
  static constexpr bool is_terminal(NodeId n) noexcept { return n.value < 2; }
  static constexpr bool terminal_value(NodeId n) noexcept { return n.value == 1; }
  EdgeId node_lo(NodeId n) const noexcept { return nodes_[n.value].lo; }
  EdgeId node_hi(NodeId n) const noexcept { return nodes_[n.value].hi; }
  std::uint32_t node_arity(NodeId n) const noexcept { return nodes_[n.value].arity; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  // -- edges ---------------------------------------------------------------
  EdgeId edge(WordId word, NodeId target);
  EdgeId terminal_edge(bool value) { return edge(epsilon(), terminal(value)); }
  WordId edge_word(EdgeId e) const noexcept { return edges_[e.value].word; }
  NodeId edge_target(EdgeId e) const noexcept { return edges_[e.value].target; }
  std::uint32_t edge_arity(EdgeId e) const noexcept { return edges_[e.value].arity; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// First letter of the edge word, if any.
  std::optional<Letter> head_letter(EdgeId e) const noexcept;
  /// The edge with its first letter removed. Requires a non-empty word.
  EdgeId rest(EdgeId e);

  /// ε-labelled edge to the interned raw diamond lo ⋄ hi. No reduction.
  EdgeId intern_diamond(EdgeId lo, EdgeId hi);

  /// Word concatenation `word . edge_word(e)`; no normalization.
  EdgeId prepend(WordId word, EdgeId e);
  EdgeId prepend(Letter letter, EdgeId e);

  FuncHandle handle(EdgeId e) const noexcept { return {e, edge_arity(e), id_}; }
  /// Throws ContractError if h belongs to another Manager or is malformed.
  void check_owner(const FuncHandle& h) const;

  // -- operation caches ----------------------------------------------------
  using Memo = std::unordered_map<MemoKey, std::uint32_t, MemoKeyHash>;
  Memo& memo() noexcept { return memo_; }
  void clear_memo() { memo_.clear(); }
  /// Stores a cache entry. With a nonzero limit the whole cache is flushed
  /// once it reaches that many entries.
  void remember(const MemoKey& key, std::uint32_t value) {
    if (memo_limit_ != 0 && memo_.size() >= memo_limit_) memo_.clear();
    memo_.emplace(key, value);
  }
  void set_memo_limit(std::size_t entries) noexcept { memo_limit_ = entries; }

  OpCounters& counters() noexcept { return counters_; }
  const OpCounters& counters() const noexcept { return counters_; }

 private:
  struct WordCell {
    Letter head;
    WordId tail;
    std::uint32_t length;
    std::uint32_t elementary;
  };
  struct NodeCell {
    EdgeId lo;
    EdgeId hi;
    std::uint32_t arity;
  };
  struct EdgeCell {
    WordId word;
    NodeId target;
    std::uint32_t arity;
  };

  static std::uint64_t pack(std::uint32_t a, std::uint32_t b) noexcept {
    return (std::uint64_t{a} << 32) | b;
  }

  std::uint64_t id_;
  std::vector<WordCell> words_;
  std::vector<NodeCell> nodes_;
  std::vector<EdgeCell> edges_;
  std::unordered_map<std::uint64_t, std::uint32_t> word_table_;
  std::unordered_map<std::uint64_t, std::uint32_t> node_table_;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_table_;
  Memo memo_;
  std::size_t memo_limit_ = 0;
  OpCounters counters_;
};

/// Evaluates h at a valuation (x0 first). Throws on length mismatch.
bool eval(const Manager& mgr, const FuncHandle& h, std::span<const bool> valuation);

/// Semantics of h as a truth table (h.arity within the oracle limit).
TruthTable to_truth_table(const Manager& mgr, const FuncHandle& h);

/// Deterministic text form, e.g. "[U.U]0", "[N.X]0", "[e]([X]0,[C00.U]0)".
std::string signature(const Manager& mgr, const FuncHandle& h);
std::string signature(const Manager& mgr, EdgeId e);

/// Graphviz rendering: diamonds for ⋄ nodes, boxes for terminals, dashed lo
/// edges, solid hi edges, edge labels are the word tokens.
std::string dot_export(const Manager& mgr, const FuncHandle& h);

/// Recomputes every reachable arity bottom-up and compares with the stored
/// values.
bool arity_consistent(const Manager& mgr, const FuncHandle& h);

/// Visits every distinct diamond node reachable from e (children first).
void for_each_diamond(const Manager& mgr, EdgeId e, const std::function<void(NodeId)>& visit);

}  // namespace lambdadd

template <>
struct std::hash<lambdadd::EdgeId> {
  std::size_t operator()(lambdadd::EdgeId e) const noexcept { return e.value; }
};
template <>
struct std::hash<lambdadd::NodeId> {
  std::size_t operator()(lambdadd::NodeId n) const noexcept { return n.value; }
};
