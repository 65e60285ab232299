#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starricci {

// Interned symbol name. Copies are pointer-sized; ordering is by name so that
// canonical forms do not depend on the order in which symbols were created.
class Var {
 public:
  explicit Var(std::string_view name);

  const std::string& name() const noexcept { return *name_; }

  friend bool operator==(Var a, Var b) noexcept { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Var a, Var b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return *a.name_ <=> *b.name_;
  }

 private:
  const std::string* name_;
};

enum class FrameIndex : int { E1 = 0, E2 = 1, E3 = 2 };

inline constexpr std::array<FrameIndex, 3> kFrame = {FrameIndex::E1, FrameIndex::E2, FrameIndex::E3};

constexpr int idx(FrameIndex i) noexcept { return static_cast<int>(i); }
std::string frame_name(FrameIndex i);                  // "e1", "e2", "e3"
std::optional<FrameIndex> parse_frame_name(std::string_view s);

enum class SymbolKind { GeometricFunction, Constant, FormalDerivative };

struct Symbol {
  Var var;
  SymbolKind kind;
  // Only meaningful for FormalDerivative.
  FrameIndex direction = FrameIndex::E1;
  std::optional<Var> base;
};

/// Names the scalars of a frame context and how they differentiate.
///
/// Declaring a geometric function also declares its three formal derivative
/// symbols `D(e1,f)`, `D(e2,f)`, `D(e3,f)`. Constants have no derivative
/// symbols; their derivatives are zero. Formal derivatives cannot be
/// differentiated again.
class SymbolTable {
 public:
  Var declare(std::string_view name, SymbolKind kind);
  Var declare_function(std::string_view name) { return declare(name, SymbolKind::GeometricFunction); }
  Var declare_constant(std::string_view name) { return declare(name, SymbolKind::Constant); }

  const Symbol* find(std::string_view name) const;
  const Symbol* find(Var v) const;
  bool contains(Var v) const { return find(v) != nullptr; }

  /// Formal derivative symbol D(dir, base); nullopt when base is a constant.
  /// Throws for unknown symbols and for formal-derivative bases.
  std::optional<Var> derivative(FrameIndex dir, Var base) const;

  std::vector<Var> symbols() const;
  std::vector<Var> formal_derivatives() const;

 private:
  std::map<Var, Symbol> symbols_;
  std::map<std::pair<int, Var>, Var> derivatives_;
};

std::string derivative_name(FrameIndex dir, std::string_view base);

}  // namespace starricci
