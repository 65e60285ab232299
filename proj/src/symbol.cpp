#include "starricci/symbol.hpp"

#include <mutex>
#include <unordered_set>

#include "starricci/error.hpp"

namespace starricci {

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::unordered_set<std::string> pool;
  std::lock_guard lock(mutex);
  return &*pool.emplace(name).first;
}

}  // namespace

Var::Var(std::string_view name) : name_(intern(name)) {}

std::string frame_name(FrameIndex i) { return "e" + std::to_string(idx(i) + 1); }

std::optional<FrameIndex> parse_frame_name(std::string_view s) {
  if (s == "e1") return FrameIndex::E1;
  if (s == "e2") return FrameIndex::E2;
  if (s == "e3") return FrameIndex::E3;
  return std::nullopt;
}

std::string derivative_name(FrameIndex dir, std::string_view base) {
  return "D(" + frame_name(dir) + "," + std::string(base) + ")";
}

Var SymbolTable::declare(std::string_view name, SymbolKind kind) {
  if (kind == SymbolKind::FormalDerivative)
    throw Error(ErrorCode::InvalidArgument, "formal derivatives are declared through their base symbol");
  Var v(name);
  if (symbols_.contains(v)) throw Error(ErrorCode::InvalidArgument, "symbol declared twice: " + std::string(name));
  symbols_.emplace(v, Symbol{v, kind, FrameIndex::E1, std::nullopt});
  if (kind == SymbolKind::GeometricFunction) {
    for (FrameIndex dir : kFrame) {
      Var d(derivative_name(dir, name));
      symbols_.emplace(d, Symbol{d, SymbolKind::FormalDerivative, dir, v});
      derivatives_.emplace(std::pair{idx(dir), v}, d);
    }
  }
  return v;
}

const Symbol* SymbolTable::find(std::string_view name) const { return find(Var(name)); }

const Symbol* SymbolTable::find(Var v) const {
  auto it = symbols_.find(v);
  return it == symbols_.end() ? nullptr : &it->second;
}

std::optional<Var> SymbolTable::derivative(FrameIndex dir, Var base) const {
  const Symbol* s = find(base);
  if (!s) throw Error(ErrorCode::UnknownSymbol, "unknown identifier: " + base.name());
  switch (s->kind) {
    case SymbolKind::Constant:
      return std::nullopt;
    case SymbolKind::FormalDerivative:
      throw Error(ErrorCode::InvalidArgument, "second formal derivatives are not modeled: " + base.name());
    case SymbolKind::GeometricFunction:
      break;
  }
  return derivatives_.at({idx(dir), base});
}

std::vector<Var> SymbolTable::symbols() const {
  std::vector<Var> out;
  for (const auto& [v, s] : symbols_) out.push_back(v);
  return out;
}

std::vector<Var> SymbolTable::formal_derivatives() const {
  std::vector<Var> out;
  for (const auto& [v, s] : symbols_)
    if (s.kind == SymbolKind::FormalDerivative) out.push_back(v);
  return out;
}

}  // namespace starricci
