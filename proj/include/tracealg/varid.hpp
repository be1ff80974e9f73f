#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tracealg {

enum class VarFamily : std::uint8_t { Xi = 0, U = 1, Aux = 2 };

/// A commuting variable: xi_{j,i,k} (entry (i,k) of generic matrix j),
/// u_{i,k} (group entry), or an auxiliary variable aux_{j,i,k}.
/// Ordered by (family, j, i, k).
struct VarId {
  VarFamily family = VarFamily::Xi;
  int j = 0;
  int i = 0;
  int k = 0;

  static VarId xi(int j, int i, int k) { return {VarFamily::Xi, j, i, k}; }
  static VarId u(int i, int k) { return {VarFamily::U, 0, i, k}; }
  static VarId aux(int j, int i = 0, int k = 0) { return {VarFamily::Aux, j, i, k}; }

  // Packed code preserving the (family, j, i, k) order; indices < 1024.
  std::uint32_t code() const {
    return (static_cast<std::uint32_t>(family) << 30) |
           (static_cast<std::uint32_t>(j) << 20) |
           (static_cast<std::uint32_t>(i) << 10) |
           static_cast<std::uint32_t>(k);
  }

  static VarId from_code(std::uint32_t c) {
    VarId v;
    v.family = static_cast<VarFamily>(c >> 30);
    v.j = static_cast<int>((c >> 20) & 0x3ff);
    v.i = static_cast<int>((c >> 10) & 0x3ff);
    v.k = static_cast<int>(c & 0x3ff);
    return v;
  }

  friend bool operator==(const VarId& a, const VarId& b) { return a.code() == b.code(); }
  friend bool operator<(const VarId& a, const VarId& b) { return a.code() < b.code(); }

  std::string str() const {
    switch (family) {
      case VarFamily::Xi:
        return "xi" + std::to_string(j) + "_" + std::to_string(i) + std::to_string(k);
      case VarFamily::U:
        return "u" + std::to_string(i) + std::to_string(k);
      case VarFamily::Aux:
        return "w" + std::to_string(j) +
               (i || k ? "_" + std::to_string(i) + std::to_string(k) : "");
    }
    throw std::logic_error("VarId::str: bad family");
  }
};

}  // namespace tracealg
