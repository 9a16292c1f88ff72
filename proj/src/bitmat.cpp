#include "bitmat.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace lrc {

bool BitVector::weight_support_less(const BitVector& a, const BitVector& b) {
  std::size_t wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.support() < b.support();
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  // Dense storage; one gigabyte of bits is already beyond any desk-scale
  // construction here.
  if (cols != 0 && rows > (std::uint64_t(1) << 33) / cols)
    fail(errc::invalid_argument, "matrix too large: " + std::to_string(rows) + " x " +
                                     std::to_string(cols));
  row_.assign(rows, BitVector(cols));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BitMatrix::append_row(BitVector v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) fail(errc::invalid_argument, "appended row has wrong length");
  row_.push_back(std::move(v));
  ++rows_;
}

std::size_t BitMatrix::col_weight(std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < rows_; ++i) c += at(i, j);
  return c;
}

std::size_t rank(const BitMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i)
      if (rows[i].test(c)) rows[i].xor_with(rows[r]);
    ++r;
  }
  return r;
}

std::pair<BitMatrix, std::vector<std::size_t>> rref(const BitMatrix& m) {
  BitMatrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < w.rows() && !w.at(pivot, c)) ++pivot;
    if (pivot == w.rows()) continue;
    std::swap(w.row(r), w.row(pivot));
    for (std::size_t i = 0; i < w.rows(); ++i)
      if (i != r && w.at(i, c)) w.row(i).xor_with(w.row(r));
    pivots.push_back(c);
    ++r;
  }
  return {std::move(w), std::move(pivots)};
}

BitMatrix nullspace_basis(const BitMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  BitMatrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t bi = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.set(bi, f);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      if (r.at(pi, f)) basis.set(bi, pivots[pi]);
    ++bi;
  }
  return basis;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::uint32_t j : m.row(i).support()) t.set(j, i);
  }
  return t;
}

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    auto sa = a.row(ia).support();
    for (std::size_t ib = 0; ib < b.rows(); ++ib) {
      auto sb = b.row(ib).support();
      BitVector& out = k.row(ia * b.rows() + ib);
      for (auto ja : sa)
        for (auto jb : sb) out.set(std::size_t(ja) * b.cols() + jb);
    }
  }
  return k;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& x) {
  if (x.size() != m.cols()) fail(errc::invalid_argument, "mat_vec dimension mismatch");
  BitVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row(i).dot(x)) y.set(i);
  return y;
}

std::string format_pchk(const BitMatrix& m) {
  std::string out;
  out.reserve((m.cols() + 1) * m.rows() + 24);
  out += std::to_string(m.rows());
  out += ' ';
  out += std::to_string(m.cols());
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += m.at(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

BitMatrix parse_pchk(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) fail(errc::parse_error, "pchk-v1: bad header line");
  std::string line;
  std::getline(in, line);  // rest of header line

  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) fail(errc::parse_error, "pchk-v1: missing row " + std::to_string(i));
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.size() != cols)
      fail(errc::parse_error, "pchk-v1: row " + std::to_string(i) + " has " +
                                  std::to_string(line.size()) + " chars, expected " +
                                  std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      if (line[j] == '1')
        m.set(i, j);
      else if (line[j] != '0')
        fail(errc::parse_error, "pchk-v1: invalid character in row " + std::to_string(i));
    }
  }
  return m;
}

BitMatrix read_pchk_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pchk(buf.str());
}

void write_pchk_file(const BitMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << format_pchk(m);
  if (!out) fail(errc::io_error, "write failed: " + path);
}

}  // namespace lrc
