#include "lambdadd/model.hpp"

#include <array>
#include <cctype>

#include "lambdadd/error.hpp"

namespace lambdadd {
namespace {

constexpr std::array<NamedModel, 11> kPresets = {{
    {"s", models::S},
    {"s-n", models::SN},
    {"o-u", models::OU},
    {"o-nu", models::ONU},
    {"o-c10", models::OC10},
    {"o-uc10", models::OUC10},
    {"o-nuc10c11", models::ONUC10C11},
    {"o-uc0", models::OUC0},
    {"o-uc", models::OUC},
    {"o-nuc", models::ONUC},
    {"o-nucx", models::ONUCX},
}};

constexpr std::array<LatticeEdge, 10> kLatticeEdges = {{
    {models::S, models::OU},
    {models::S, models::OC10},
    {models::S, models::SN},
    {models::SN, models::ONU},
    {models::OU, models::ONU},
    {models::OU, models::OUC10},
    {models::OC10, models::OUC10},
    {models::OUC10, models::OUC0},
    {models::ONU, models::ONUCX},
    {models::OUC0, models::ONUCX},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Row order follows the Shannon column: u, x, c00, c01, c10, c11.
struct DavioRow {
  Letter shannon;
  Letter davio_pos;
  Letter davio_neg;
};
constexpr std::array<DavioRow, 6> kDavioTable = {{
    {Letter::U, Letter::C10, Letter::C10},
    {Letter::X, Letter::C11, Letter::C11},
    {Letter::C00, Letter::C00, Letter::U},
    {Letter::C01, Letter::C01, Letter::X},
    {Letter::C10, Letter::U, Letter::C00},
    {Letter::C11, Letter::X, Letter::C01},
}};

Letter column(const DavioRow& row, Combinator c) {
  switch (c) {
    case Combinator::Shannon: return row.shannon;
    case Combinator::DavioPos: return row.davio_pos;
    case Combinator::DavioNeg: return row.davio_neg;
  }
  return row.shannon;
}

}  // namespace

std::span<const NamedModel> preset_models() noexcept { return kPresets; }

std::span<const LatticeEdge> lattice_edges() noexcept { return kLatticeEdges; }

std::string Model::name() const {
  for (const NamedModel& p : kPresets)
    if (p.model == *this) return std::string(p.name);
  std::string out = "custom:";
  bool first = true;
  for (Letter l : kElementaryLetters) {
    if (!has(l)) continue;
    if (!first) out += ',';
    first = false;
    out += token(l);
  }
  if (negation) out += "+neg";
  return out;
}

std::optional<Model> Model::parse(std::string_view text) {
  const std::string t = lower(text);
  for (const NamedModel& p : kPresets)
    if (p.name == t) return p.model;
  constexpr std::string_view prefix = "custom:";
  if (!t.starts_with(prefix)) return std::nullopt;
  std::string_view body = std::string_view(t).substr(prefix.size());
  Model m;
  if (body.ends_with("+neg")) {
    m.negation = true;
    body.remove_suffix(4);
  }
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto l = parse_letter(item);
    if (!l || !is_elementary(*l)) return std::nullopt;
    m.letters |= letter_bit(*l);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) return std::nullopt;
  }
  return m;
}

Letter neg_conjugate(Letter l) {
  switch (l) {
    case Letter::U: return Letter::U;
    case Letter::X: return Letter::X;
    case Letter::C00: return Letter::C01;
    case Letter::C01: return Letter::C00;
    case Letter::C10: return Letter::C11;
    case Letter::C11: return Letter::C10;
    case Letter::N: break;
  }
  throw ContractError("negation has no conjugate letter");
}

bool is_stable(const Model& m) noexcept {
  for (Letter l : kElementaryLetters)
    if (m.has(l) && !m.has(neg_conjugate(l))) return false;
  return true;
}

bool lattice_leq(const Model& a, const Model& b) noexcept {
  return (a.letters & ~b.letters) == 0 && (!a.negation || b.negation);
}

Letter translate_letter(Combinator from, Combinator to, Letter l) {
  if (!is_elementary(l)) throw ContractError("only elementary letters translate");
  for (const DavioRow& row : kDavioTable)
    if (column(row, from) == l) return column(row, to);
  throw ContractError("letter missing from the correspondence table");
}

std::optional<Combinator> parse_combinator(std::string_view text) noexcept {
  const std::string t = lower(text);
  if (t == "s") return Combinator::Shannon;
  if (t == "d+") return Combinator::DavioPos;
  if (t == "d-") return Combinator::DavioNeg;
  return std::nullopt;
}

}  // namespace lambdadd
