#include "hjac/ring.hpp"

#include <cctype>
#include <set>

namespace hjac {

RingPtr RingContext::make(std::vector<std::string> variables, Field field) {
  if (variables.empty()) throw DomainError("a ring needs at least one variable");
  if (variables.size() > MultiIndex::kMaxVars) {
    throw DomainError("at most " + std::to_string(MultiIndex::kMaxVars) +
                      " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable '" + v + "'");
  }
  return RingPtr(new RingContext(std::move(variables), field));
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string RingContext::describe() const {
  std::string out = field_.name() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ",";
    out += names_[i];
  }
  return out + "]";
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b)) {
    throw DomainError(std::string(what) + ": operands live in different rings");
  }
}

}  // namespace hjac
