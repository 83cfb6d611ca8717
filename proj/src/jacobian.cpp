#include "hjac/jacobian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hjac/polynomial_io.hpp"

namespace hjac {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> entries)
    : PolyMatrix(ring, entries.size(), entries.empty() ? 0 : entries.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (entries[r].size() != cols_) throw DomainError("ragged matrix");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, std::move(entries[r][c]));
  }
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
  require_same_ring(ring_, value.ring(), "matrix entry");
  data_[r * cols_ + c] = std::move(value);
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  }
  return out;
}

PolyMatrix PolyMatrix::with_permuted(const std::vector<std::size_t>& row_perm,
                                     const std::vector<std::size_t>& col_perm) const {
  PolyMatrix out(ring_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(row_perm[r], col_perm[c]));
  }
  return out;
}

std::pair<std::size_t, std::size_t> jac_matrix_shape(std::size_t d, unsigned n) {
  const auto rows = binomial(d - 1 + n, d).get_ui();
  const auto cols = binomial(d + n, d).get_ui() - 1;
  return {rows, cols};
}

JacobianMatrix jac_matrix(const Polynomial& f, unsigned n) {
  if (f.is_zero()) throw DomainError("Jacobian matrix of the zero polynomial");
  if (n == 0) throw DomainError("n must be >= 1");
  const std::size_t d = f.nvars();
  auto rows = multi_indices_in_range(d, 0, n - 1);
  auto cols = multi_indices_in_range(d, 1, n);
  PolyMatrix m(f.ring(), rows.size(), cols.size());
  std::map<std::vector<unsigned>, Polynomial> derivs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!cols[c].strictly_dominates(rows[r])) continue;
      const MultiIndex gamma = cols[c] - rows[r];
      auto key = gamma.to_vector();
      auto it = derivs.find(key);
      if (it == derivs.end()) it = derivs.emplace(key, hasse_derivative(f, gamma)).first;
      m.set(r, c, it->second);
    }
  }
  return JacobianMatrix{f, n, std::move(rows), std::move(cols), std::move(m)};
}

namespace {

// Colex rank of a sorted subset among all subsets of equal size.
class SubsetRanker {
 public:
  explicit SubsetRanker(std::size_t n) : table_(n + 1, std::vector<std::size_t>(n + 2, 0)) {
    for (std::size_t a = 0; a <= n; ++a) {
      table_[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) table_[a][b] = table_[a - 1][b - 1] + table_[a - 1][b];
    }
  }
  std::size_t choose(std::size_t a, std::size_t b) const { return b > a ? 0 : table_[a][b]; }

  // Rank of `subset` with position `skip` removed (skip == size: none).
  std::size_t rank(const std::vector<std::size_t>& subset, std::size_t skip) const {
    std::size_t r = 0, pos = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i == skip) continue;
      r += choose(subset[i], pos + 1);
      ++pos;
    }
    return r;
  }

 private:
  std::vector<std::vector<std::size_t>> table_;
};

bool next_combination(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

// All k x k minors on the fixed row set `rows`, column subsets in lex order.
void minors_for_rows(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const SubsetRanker& ranker, bool keep_zeros, std::vector<Polynomial>& out) {
  const std::size_t k = rows.size();
  const std::size_t n = m.cols();
  const RingPtr& ring = m.ring();
  // level[s]: minors of rows[k-s..k-1] indexed by colex rank of the column set.
  std::vector<Polynomial> prev{Polynomial::constant(ring, 1)};
  for (std::size_t s = 1; s <= k; ++s) {
    const std::size_t row = rows[k - s];
    const bool last = s == k;
    std::vector<Polynomial> cur(last ? 0 : ranker.choose(n, s), Polynomial(ring));
    auto subset = first_combination(s);
    do {
      Polynomial acc(ring);
      for (std::size_t idx = 0; idx < s; ++idx) {
        const Polynomial& entry = m.at(row, subset[idx]);
        if (entry.is_zero()) continue;
        const Polynomial& sub = prev[ranker.rank(subset, idx)];
        if (sub.is_zero()) continue;
        Polynomial prod = entry * sub;
        acc = (idx % 2 == 0) ? acc + prod : acc - prod;
      }
      if (last) {
        if (keep_zeros || !acc.is_zero()) out.push_back(std::move(acc));
      } else {
        cur[ranker.rank(subset, s)] = std::move(acc);
      }
    } while (next_combination(subset, n));
    prev = std::move(cur);
  }
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, bool keep_zeros) {
  if (k == 0 || k > m.rows() || k > m.cols()) {
    throw DomainError("minor size " + std::to_string(k) + " does not fit a " + std::to_string(m.rows()) +
                      "x" + std::to_string(m.cols()) + " matrix");
  }
  SubsetRanker ranker(m.cols());
  std::vector<Polynomial> out;
  auto rows = first_combination(k);
  do {
    minors_for_rows(m, rows, ranker, keep_zeros, out);
  } while (next_combination(rows, m.rows()));
  return out;
}

Ideal fitting_ideal(const PolyMatrix& m, long k) {
  if (k < 0) throw DomainError("Fitting ideal index must be >= 0");
  const long size = static_cast<long>(m.cols()) - k;
  if (size <= 0) return Ideal::unit(m.ring());
  if (static_cast<std::size_t>(size) > m.rows()) return Ideal::zero(m.ring());
  return Ideal(m.ring(), dedupe_generators(minors(m, static_cast<std::size_t>(size))));
}

Ideal higher_jacobian_ideal(const Polynomial& f, unsigned n) {
  JacobianMatrix jac = jac_matrix(f, n);
  const std::size_t k = jac.entries.rows();
  return Ideal(f.ring(), dedupe_generators(minors(jac.entries, k)));
}

Ideal jacobian_ideal(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("Jacobian ideal of the zero polynomial");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(partial(f, i));
  return Ideal(f.ring(), std::move(gens));
}

Ideal j2_plane_closed_form(const Polynomial& f) {
  if (f.nvars() != 2) throw DomainError("the closed form for J_2 needs exactly two variables");
  if (f.field().characteristic() == 2) {
    throw DomainError("the closed form for J_2 is not valid in characteristic 2; use the minors route");
  }
  if (f.is_zero()) throw DomainError("J_2 of the zero polynomial");
  const Polynomial fx = classical_derivative(f, {1, 0});
  const Polynomial fy = classical_derivative(f, {0, 1});
  const Polynomial fxx = classical_derivative(f, {2, 0});
  const Polynomial fxy = classical_derivative(f, {1, 1});
  const Polynomial fyy = classical_derivative(f, {0, 2});
  const Polynomial two = Polynomial::constant(f.ring(), 2);
  std::vector<Polynomial> gens{
      fx * fx * fx, fx * fx * fy, fx * fy * fy, fy * fy * fy,
      fxx * fy * fy - two * fxy * fx * fy + fx * fx * fyy,
  };
  return Ideal(f.ring(), std::move(gens));
}

std::string format_multi_index(const MultiIndex& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  return out + ")";
}

std::string render_matrix(const JacobianMatrix& jac) {
  const PolyMatrix& m = jac.entries;
  std::vector<std::string> col_labels, row_labels;
  for (const auto& a : jac.col_indices) col_labels.push_back(format_multi_index(a));
  for (const auto& b : jac.row_indices) row_labels.push_back(format_multi_index(b));

  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols());
  std::size_t label_width = 0;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  for (std::size_t c = 0; c < m.cols(); ++c) width[c] = col_labels[c].size();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = format_polynomial(m.at(r, c));
      width[c] = std::max(width[c], cells[r][c].size());
    }
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };

  std::ostringstream os;
  os << "Jac_" << jac.order << "(" << format_polynomial(jac.f) << "): " << m.rows() << " x " << m.cols() << "\n";
  os << pad("", label_width);
  for (std::size_t c = 0; c < m.cols(); ++c) os << "  " << pad(col_labels[c], width[c]);
  os << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << pad(row_labels[r], label_width);
    for (std::size_t c = 0; c < m.cols(); ++c) os << "  " << pad(cells[r][c], width[c]);
    os << "\n";
  }
  return os.str();
}

}  // namespace hjac
