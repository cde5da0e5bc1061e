#include "omega/basis.hpp"

#include "omega/errors.hpp"

namespace omega {

std::string SignedBasis::str() const {
  std::string out = negative_ ? "-" : "";
  out += kBasisNames[basis_];
  return out;
}

std::optional<SignedBasis> SignedBasis::parse(std::string_view text) {
  int sign = 1;
  if (!text.empty() && text.front() == '-') {
    sign = -1;
    text.remove_prefix(1);
  } else if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  if (text.size() != 1) return std::nullopt;
  for (BasisIndex b = 0; b < kDim; ++b)
    if (text.front() == kBasisNames[b]) return SignedBasis(sign, b);
  return std::nullopt;
}

MultiplicationTable::MultiplicationTable(std::string name, const Grid& entries)
    : name_(std::move(name)), entries_(entries) {
  for (BasisIndex b = 0; b < kDim; ++b) {
    if (entries_[0][b] != SignedBasis(1, b))
      throw InvalidTable("table '" + name_ + "' is not unital: 1*" + kBasisNames[b] + " = " +
                         entries_[0][b].str());
    if (entries_[b][0] != SignedBasis(1, b))
      throw InvalidTable("table '" + name_ + "' is not unital: " + kBasisNames[b] + "*1 = " +
                         entries_[b][0].str());
  }
}

MultiplicationTable MultiplicationTable::from_strings(
    std::string name, const std::array<std::array<std::string, kDim>, kDim>& cells) {
  Grid grid;
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) {
      auto e = SignedBasis::parse(cells[r][c]);
      // Accept only the eight canonical spellings; "+i" is not one of them.
      if (!e || cells[r][c].front() == '+')
        throw InvalidTable("table '" + name + "': bad entry \"" + cells[r][c] + "\" at row " +
                           std::to_string(r) + ", column " + std::to_string(c));
      grid[r][c] = *e;
    }
  }
  return MultiplicationTable(std::move(name), grid);
}

std::array<std::uint8_t, kDim * kDim> MultiplicationTable::codes() const noexcept {
  std::array<std::uint8_t, kDim * kDim> out{};
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out[r * kDim + c] = entries_[r][c].code();
  return out;
}

std::array<std::array<std::string, kDim>, kDim> MultiplicationTable::to_strings() const {
  std::array<std::array<std::string, kDim>, kDim> out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out[r][c] = entries_[r][c].str();
  return out;
}

namespace {

MultiplicationTable make(std::string name, const std::array<std::array<const char*, kDim>, kDim>& rows) {
  std::array<std::array<std::string, kDim>, kDim> cells;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) cells[r][c] = rows[r][c];
  return MultiplicationTable::from_strings(std::move(name), cells);
}

// Startup self-check for Omega: the table must be unital (enforced by the
// constructor) and commutative.
MultiplicationTable make_omega() {
  MultiplicationTable t = make("omega", {{
                                            {"1", "i", "j", "k"},
                                            {"i", "-1", "-k", "j"},
                                            {"j", "-k", "-k", "j"},
                                            {"k", "j", "j", "k"},
                                        }});
  for (BasisIndex a = 0; a < kDim; ++a)
    for (BasisIndex b = 0; b < kDim; ++b)
      if (t(a, b) != t(b, a)) throw InvalidTable("built-in omega table is not commutative");
  return t;
}

}  // namespace

const MultiplicationTable& quaternion_table() {
  static const MultiplicationTable t = make("quaternion", {{
                                                              {"1", "i", "j", "k"},
                                                              {"i", "-1", "k", "-j"},
                                                              {"j", "-k", "-1", "i"},
                                                              {"k", "j", "-i", "-1"},
                                                          }});
  return t;
}

const MultiplicationTable& omega_table() {
  static const MultiplicationTable t = make_omega();
  return t;
}

const MultiplicationTable& complex_table() {
  // i^2 = j^2 = -1, k = ij = ji, k^2 = 1.
  static const MultiplicationTable t = make("complex", {{
                                                          {"1", "i", "j", "k"},
                                                          {"i", "-1", "k", "-j"},
                                                          {"j", "k", "-1", "-i"},
                                                          {"k", "-j", "-i", "1"},
                                                      }});
  return t;
}

std::optional<MultiplicationTable> builtin_table(std::string_view name) {
  if (name == "omega") return omega_table();
  if (name == "quaternion") return quaternion_table();
  if (name == "complex") return complex_table();
  return std::nullopt;
}

}  // namespace omega
