#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace omega {

/// Index of a basis element: 0 = 1, 1 = i, 2 = j, 3 = k.
using BasisIndex = std::uint8_t;

inline constexpr int kDim = 4;
inline constexpr std::array<char, kDim> kBasisNames = {'1', 'i', 'j', 'k'};

/// A signed basis element, i.e. one entry of a Cayley table.
///
/// Entries are totally ordered by `code()`, which follows the listing order
/// 1, -1, i, -i, j, -j, k, -k. Table enumeration and canonical forms use this order.
class SignedBasis {
 public:
  constexpr SignedBasis() = default;
  constexpr SignedBasis(int sign, BasisIndex basis) : negative_(sign < 0), basis_(basis) {}

  static constexpr SignedBasis from_code(std::uint8_t code) {
    return SignedBasis((code & 1U) ? -1 : 1, static_cast<BasisIndex>(code >> 1U));
  }

  constexpr int sign() const noexcept { return negative_ ? -1 : 1; }
  constexpr BasisIndex basis() const noexcept { return basis_; }
  constexpr std::uint8_t code() const noexcept {
    return static_cast<std::uint8_t>((basis_ << 1U) | (negative_ ? 1U : 0U));
  }

  constexpr SignedBasis negated() const noexcept { return SignedBasis(negative_ ? 1 : -1, basis_); }
  constexpr SignedBasis scaled(int sign) const noexcept { return sign < 0 ? negated() : *this; }

  constexpr bool operator==(const SignedBasis&) const = default;
  constexpr auto operator<=>(const SignedBasis& o) const noexcept { return code() <=> o.code(); }

  /// "1", "-1", "i", ..., "-k"
  std::string str() const;
  /// Inverse of str(); nullopt on anything outside the eight spellings.
  static std::optional<SignedBasis> parse(std::string_view text);

 private:
  bool negative_ = false;
  BasisIndex basis_ = 0;
};

/// 4x4 Cayley table over the basis (1, i, j, k).
///
/// Construction enforces unitality: row 0 and column 0 must be the identity.
/// Every entry being a signed basis element is guaranteed by the entry type.
class MultiplicationTable {
 public:
  using Grid = std::array<std::array<SignedBasis, kDim>, kDim>;

  /// Throws InvalidTable when the grid is not unital.
  MultiplicationTable(std::string name, const Grid& entries);

  /// Parses the 4x4 string form used by algebra definition files.
  static MultiplicationTable from_strings(std::string name,
                                          const std::array<std::array<std::string, kDim>, kDim>& cells);

  SignedBasis operator()(BasisIndex a, BasisIndex b) const noexcept { return entries_[a][b]; }
  const Grid& entries() const noexcept { return entries_; }
  const std::string& name() const noexcept { return name_; }

  /// Product of two signed basis elements under this table.
  SignedBasis product(SignedBasis x, SignedBasis y) const noexcept {
    return entries_[x.basis()][y.basis()].scaled(x.sign() * y.sign());
  }

  /// Row-major codes of all 16 entries; the key used for lexicographic ordering.
  std::array<std::uint8_t, kDim * kDim> codes() const noexcept;

  /// Tables compare by entries only; the name is a label.
  bool operator==(const MultiplicationTable& o) const noexcept { return entries_ == o.entries_; }
  std::strong_ordering operator<=>(const MultiplicationTable& o) const noexcept {
    return codes() <=> o.codes();
  }

  std::array<std::array<std::string, kDim>, kDim> to_strings() const;

 private:
  std::string name_;
  Grid entries_;
};

/// Hamilton quaternions H.
const MultiplicationTable& quaternion_table();
/// The bicomplex algebra Omega with subalgebras psi = span(1,i) and phi = span(j,k).
const MultiplicationTable& omega_table();
/// Complex numbers on span(1,i), completed to four dimensions by the tessarine product C (x) C.
const MultiplicationTable& complex_table();

/// Looks up "omega", "quaternion" or "complex"; nullopt for anything else.
std::optional<MultiplicationTable> builtin_table(std::string_view name);

}  // namespace omega
