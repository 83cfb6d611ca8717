#include "hjac/multi_index.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hjac/field.hpp"

namespace hjac {

namespace {

void check_vars(std::size_t d) {
  if (d > MultiIndex::kMaxVars) {
    throw DomainError("at most " + std::to_string(MultiIndex::kMaxVars) +
                      " variables are supported");
  }
}

MultiIndex::Exponent checked_exponent(unsigned long value) {
  if (value > std::numeric_limits<MultiIndex::Exponent>::max()) {
    throw DomainError("exponent overflow (" + std::to_string(value) + ")");
  }
  return static_cast<MultiIndex::Exponent>(value);
}

}  // namespace

MultiIndex::MultiIndex(std::size_t d) : size_(static_cast<std::uint8_t>(d)) {
  check_vars(d);
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> exponents)
    : MultiIndex(std::vector<unsigned>(exponents)) {}

MultiIndex::MultiIndex(const std::vector<unsigned>& exponents)
    : MultiIndex(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

MultiIndex MultiIndex::unit(std::size_t d, std::size_t i, unsigned power) {
  MultiIndex m(d);
  m.set(i, power);
  return m;
}

void MultiIndex::set(std::size_t i, unsigned value) {
  const Exponent e = checked_exponent(value);
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

std::vector<unsigned> MultiIndex::to_vector() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + size_);
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool MultiIndex::coprime(const MultiIndex& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  MultiIndex out(*this);
  for (std::size_t i = 0; i < size_; ++i) {
    out.exps_[i] = checked_exponent(static_cast<unsigned long>(exps_[i]) + other.exps_[i]);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  MultiIndex out(*this);
  for (std::size_t i = 0; i < size_; ++i) out.exps_[i] = exps_[i] - other.exps_[i];
  out.degree_ = degree_ - other.degree_;
  return out;
}

MultiIndex MultiIndex::lcm(const MultiIndex& other) const {
  MultiIndex out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.set(i, std::max(exps_[i], other.exps_[i]));
  return out;
}

MultiIndex MultiIndex::gcd(const MultiIndex& other) const {
  MultiIndex out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.set(i, std::min(exps_[i], other.exps_[i]));
  return out;
}

int MultiIndex::lex_compare(const MultiIndex& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != other.exps_[i]) return exps_[i] < other.exps_[i] ? -1 : 1;
  }
  return 0;
}

int MultiIndex::grlex_compare(const MultiIndex& other) const {
  if (degree_ != other.degree_) return degree_ < other.degree_ ? -1 : 1;
  return lex_compare(other);
}

std::size_t MultiIndex::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

std::vector<MultiIndex> multi_indices_of_degree(std::size_t d, unsigned k) {
  check_vars(d);
  std::vector<MultiIndex> out;
  if (d == 0) {
    if (k == 0) out.emplace_back(0);
    return out;
  }
  // Recursive fill: larger leading exponents first gives lex descending.
  MultiIndex cur(d);
  auto fill = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == d) {
      cur.set(i, remaining);
      out.push_back(cur);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      cur.set(i, e);
      self(self, i + 1, remaining - e);
    }
    cur.set(i, 0);
  };
  fill(fill, 0, k);
  return out;
}

std::vector<MultiIndex> multi_indices_in_range(std::size_t d, unsigned lo, unsigned hi) {
  std::vector<MultiIndex> out;
  for (unsigned k = lo; k <= hi; ++k) {
    auto layer = multi_indices_of_degree(d, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace hjac
