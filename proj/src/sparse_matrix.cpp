#include "kary/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "kary/errors.hpp"

namespace kary {

SparseIntMatrix SparseIntMatrix::from_columns(std::size_t rows, std::vector<Column> columns) {
  SparseIntMatrix m(rows, 0);
  for (Column& col : columns) {
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    Column merged;
    for (Entry& e : col) {
      if (e.row >= rows) throw InputError("matrix entry row out of range");
      if (!merged.empty() && merged.back().row == e.row) {
        merged.back().value += e.value;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
    m.columns_.push_back(std::move(merged));
  }
  return m;
}

std::size_t SparseIntMatrix::nnz() const {
  std::size_t n = 0;
  for (const Column& c : columns_) n += c.size();
  return n;
}

mpz_class SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const Column& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
  return it != col.end() && it->row == r ? it->value : mpz_class(0);
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  std::vector<Column> cols(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const Entry& e : columns_[c]) cols[e.row].push_back({c, e.value});
  SparseIntMatrix t(columns_.size(), 0);
  t.columns_ = std::move(cols);
  return t;
}

SparseIntMatrix SparseIntMatrix::submatrix(std::span<const std::size_t> row_ids,
                                           std::span<const std::size_t> col_ids) const {
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t i = 0; i < row_ids.size(); ++i) remap.emplace(row_ids[i], i);
  std::vector<Column> cols;
  cols.reserve(col_ids.size());
  for (std::size_t c : col_ids) {
    Column out;
    for (const Entry& e : columns_.at(c)) {
      auto it = remap.find(e.row);
      if (it != remap.end()) out.push_back({it->second, e.value});
    }
    cols.push_back(std::move(out));
  }
  return from_columns(row_ids.size(), std::move(cols));
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  std::vector<SparseIntMatrix::Column> cols;
  cols.reserve(b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::map<std::size_t, mpz_class> acc;
    for (const auto& eb : b.column(c))
      for (const auto& ea : a.column(eb.row)) acc[ea.row] += ea.value * eb.value;
    SparseIntMatrix::Column col;
    for (auto& [r, v] : acc)
      if (v != 0) col.push_back({r, v});
    cols.push_back(std::move(col));
  }
  return SparseIntMatrix::from_columns(a.rows(), std::move(cols));
}

void write_matrix_market(std::ostream& out, const SparseIntMatrix& m) {
  out << "%%MatrixMarket matrix coordinate integer general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) out << e.row + 1 << ' ' << c + 1 << ' ' << e.value.get_str() << '\n';
}

SparseIntMatrix read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
    throw InputError("missing MatrixMarket header");
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (object != "matrix" || format != "coordinate" || field != "integer" || symmetry != "general")
    throw InputError("only 'matrix coordinate integer general' is supported");
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '%') break;
  std::istringstream sizes(line);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(sizes >> rows >> cols >> nnz)) throw InputError("bad MatrixMarket size line");
  std::vector<SparseIntMatrix::Column> columns(cols);
  for (std::size_t i = 0; i < nnz; ++i) {
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value)) throw InputError("truncated MatrixMarket entry list");
    if (r < 1 || r > rows || c < 1 || c > cols) throw InputError("MatrixMarket entry out of range");
    mpz_class v;
    if (v.set_str(value, 10) != 0) throw InputError("bad MatrixMarket integer: " + value);
    columns[c - 1].push_back({r - 1, v});
  }
  return SparseIntMatrix::from_columns(rows, std::move(columns));
}

}  // namespace kary
