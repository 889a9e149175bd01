#include "tracefield/linalg.hpp"

namespace tracefield::linalg {

namespace {

// Row-reduces [a | rhs] in place; returns pivot columns.
std::vector<std::size_t> reduce(const FieldCtx& f, Matrix& a, std::vector<Elem>* rhs) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    if (rhs) std::swap((*rhs)[piv], (*rhs)[r]);
    Elem s = f.inv(a[r][c]);
    for (auto& v : a[r]) v = f.mul(v, s);
    if (rhs) (*rhs)[r] = f.mul((*rhs)[r], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Elem factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
      if (rhs) (*rhs)[i] = f.sub((*rhs)[i], f.mul(factor, (*rhs)[r]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FieldCtx& f, Matrix a) { return reduce(f, a, nullptr).size(); }

std::optional<std::vector<Elem>> solve(const FieldCtx& f, Matrix a, std::vector<Elem> rhs) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = reduce(f, a, &rhs);
  for (std::size_t i = pivots.size(); i < rhs.size(); ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Elem> x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
  return x;
}

}  // namespace tracefield::linalg
