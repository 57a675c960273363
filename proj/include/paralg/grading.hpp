#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace paralg {

// Two-bit grade (i,j) labeling the four subspaces L_ij of a Z_{2,2} graded
// algebra. Addition is componentwise mod 2; the dot product decides whether
// a graded bracket realizes as a commutator or an anticommutator.
struct Degree {
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;
};

enum class BracketKind { Commutator, Anticommutator };

constexpr Degree degree_add(Degree a, Degree b) {
  return {static_cast<std::uint8_t>((a.i + b.i) % 2), static_cast<std::uint8_t>((a.j + b.j) % 2)};
}

constexpr int degree_dot(Degree a, Degree b) { return a.i * b.i + a.j * b.j; }

// (-1)^{g(a).g(b)}: +1 selects the commutator, -1 the anticommutator.
constexpr int epsilon_sign(Degree a, Degree b) { return degree_dot(a, b) % 2 == 0 ? 1 : -1; }

constexpr BracketKind bracket_kind(Degree a, Degree b) {
  return epsilon_sign(a, b) > 0 ? BracketKind::Commutator : BracketKind::Anticommutator;
}

constexpr int epsilon_of(BracketKind k) { return k == BracketKind::Commutator ? 1 : -1; }

constexpr std::array<Degree, 4> all_degrees() {
  return {Degree{0, 0}, Degree{0, 1}, Degree{1, 0}, Degree{1, 1}};
}

inline std::string to_string(Degree d) {
  return "(" + std::to_string(int(d.i)) + "," + std::to_string(int(d.j)) + ")";
}

inline std::string to_string(BracketKind k) {
  return k == BracketKind::Commutator ? "comm" : "anticomm";
}

}  // namespace paralg
