#include "semicg/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace semicg {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw MatrixMarketError("matrix market: line " + std::to_string(line_no) + ": " + msg);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

SparseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) fail(1, "empty stream");
  ++line_no;
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (lower(tag) != "%%matrixmarket") fail(line_no, "missing %%MatrixMarket banner");
  if (lower(object) != "matrix") fail(line_no, "unsupported object '" + object + "'");
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (format != "coordinate")
    throw MatrixMarketError("matrix market: unsupported format '" + format + "'");
  if (field != "real")
    throw MatrixMarketError("matrix market: unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw MatrixMarketError("matrix market: unsupported symmetry '" + symmetry + "'");
  const bool symmetric = symmetry == "symmetric";

  // comments and blank lines up to the size line
  std::size_t nrows = 0, ncols = 0, nnz = 0;
  for (;;) {
    if (!std::getline(in, line)) fail(line_no + 1, "missing size line");
    ++line_no;
    if (blank(line) || line[0] == '%') continue;
    std::istringstream sz(line);
    long long r = -1, c = -1, z = -1;
    if (!(sz >> r >> c >> z) || r < 0 || c < 0 || z < 0) fail(line_no, "malformed size line");
    std::string rest;
    if (sz >> rest) fail(line_no, "trailing tokens on size line");
    nrows = static_cast<std::size_t>(r);
    ncols = static_cast<std::size_t>(c);
    nnz = static_cast<std::size_t>(z);
    break;
  }

  std::vector<Triplet> entries;
  entries.reserve(symmetric ? 2 * nnz : nnz);
  std::size_t seen = 0;
  while (seen < nnz) {
    if (!std::getline(in, line)) fail(line_no + 1, "unexpected end of file");
    ++line_no;
    if (blank(line) || line[0] == '%') continue;
    std::istringstream es(line);
    long long r = 0, c = 0;
    double v = 0.0;
    if (!(es >> r >> c >> v)) fail(line_no, "malformed entry");
    std::string rest;
    if (es >> rest) fail(line_no, "trailing tokens on entry");
    if (r < 1 || c < 1 || static_cast<std::size_t>(r) > nrows || static_cast<std::size_t>(c) > ncols)
      fail(line_no, "entry index out of range");
    const std::size_t i = static_cast<std::size_t>(r) - 1;
    const std::size_t j = static_cast<std::size_t>(c) - 1;
    entries.push_back({i, j, v});
    if (symmetric && i != j) entries.push_back({j, i, v});
    ++seen;
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line) && line[0] != '%') fail(line_no, "extra entries beyond declared count");
  }
  return SparseMatrix::from_triplets(nrows, ncols, entries);
}

SparseMatrix read_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixMarketError("matrix market: cannot open '" + path + "'");
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& a) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << a.nrows() << ' ' << a.ncols() << ' ' << a.nnz() << '\n';
  char buf[64];
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (std::size_t k = a.row_offsets()[i]; k < a.row_offsets()[i + 1]; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", a.values()[k]);
      out << (i + 1) << ' ' << (a.col_indices()[k] + 1) << ' ' << buf << '\n';
    }
  }
}

}  // namespace semicg
