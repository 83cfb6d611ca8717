#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hjac/field.hpp"
#include "hjac/multi_index.hpp"

namespace hjac {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Polynomial ring k[x_1, ..., x_d] with x_1 > x_2 > ... > x_d.
/// Immutable; shared between every polynomial built over it.
class RingContext {
 public:
  /// Throws DomainError on an empty, duplicated, oversized or malformed
  /// variable list.
  static RingPtr make(std::vector<std::string> variables, Field field);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& variables() const { return names_; }
  const std::string& variable(std::size_t i) const { return names_[i]; }
  const Field& field() const { return field_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  std::string describe() const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  RingContext(std::vector<std::string> names, Field field)
      : names_(std::move(names)), field_(field) {}

  std::vector<std::string> names_;
  Field field_;
};

/// Same ring by identity or by value.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Throws DomainError unless the two rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what);

/// Total orders on monomials. GradedLex is global (1 is the smallest
/// monomial); LocalDegree is the negative degree order used in the local
/// ring at the origin, where the lowest-degree term leads.
enum class OrderKind { GradedLex, LocalDegree };

class MonomialOrder {
 public:
  constexpr explicit MonomialOrder(OrderKind kind = OrderKind::LocalDegree) : kind_(kind) {}

  static constexpr MonomialOrder global() { return MonomialOrder(OrderKind::GradedLex); }
  static constexpr MonomialOrder local() { return MonomialOrder(OrderKind::LocalDegree); }

  OrderKind kind() const { return kind_; }
  bool is_local() const { return kind_ == OrderKind::LocalDegree; }

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const MultiIndex& a, const MultiIndex& b) const {
    if (a.degree() != b.degree()) {
      const bool lower = a.degree() < b.degree();
      return (lower != is_local()) ? -1 : 1;
    }
    return a.lex_compare(b);
  }
  bool less(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) < 0; }

  const char* name() const { return is_local() ? "local-degree" : "graded-lex"; }

  friend bool operator==(MonomialOrder a, MonomialOrder b) { return a.kind_ == b.kind_; }

 private:
  OrderKind kind_;
};

}  // namespace hjac
