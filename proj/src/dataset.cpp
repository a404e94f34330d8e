#include "scg/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace scg {

namespace {

std::string at_line(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

// from_chars rejects a leading '+', which LIBSVM labels routinely carry.
std::string_view strip_plus(std::string_view tok) {
  if (tok.size() > 1 && tok.front() == '+') tok.remove_prefix(1);
  return tok;
}

double parse_double_token(std::string_view raw, std::size_t line_no, const char* what) {
  const std::string_view tok = strip_plus(raw);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(at_line(line_no, std::string("non-numeric ") + what + " '" + std::string(raw) + "'"));
  return out;
}

long long parse_int_token(std::string_view raw, std::size_t line_no, const char* what) {
  const std::string_view tok = strip_plus(raw);
  long long out = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(at_line(line_no, std::string("non-numeric ") + what + " '" + std::string(raw) + "'"));
  return out;
}

}  // namespace

int LabelMap::apply(double raw, std::size_t line_no) const {
  const double rounded = std::nearbyint(raw);
  if (std::abs(raw - rounded) > 1e-9)
    throw ParseError(at_line(line_no, "non-integer label " + std::to_string(raw)));
  const auto it = entries.find(static_cast<long long>(rounded));
  if (it == entries.end())
    throw ParseError(at_line(line_no, "unmapped label " + std::to_string(static_cast<long long>(rounded))));
  if (it->second != -1 && it->second != 1)
    throw ParseError(at_line(line_no, "label map target must be -1 or +1"));
  return it->second;
}

LabelMap LabelMap::parse(const std::string& text) {
  LabelMap out;
  out.entries.clear();
  std::stringstream ss(text);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("label map entry '" + pair + "' is not raw:mapped");
    const long long raw = parse_int_token(std::string_view(pair).substr(0, colon), 0, "label");
    const long long mapped = parse_int_token(std::string_view(pair).substr(colon + 1), 0, "label");
    if (mapped != -1 && mapped != 1)
      throw std::invalid_argument("label map target must be -1 or +1");
    out.entries[raw] = static_cast<int>(mapped);
  }
  if (out.entries.empty()) throw std::invalid_argument("empty label map");
  return out;
}

SparseDataset SparseDataset::from_rows(const std::vector<std::vector<std::pair<Index, double>>>& rows,
                                       const std::vector<int>& labels, Index dim) {
  if (rows.size() != labels.size())
    throw std::invalid_argument("from_rows: rows and labels must have equal length");
  SparseDataset ds;
  ds.n_ = static_cast<Index>(rows.size());
  Index max_dim = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (labels[i] != -1 && labels[i] != 1)
      throw std::invalid_argument("from_rows: labels must be -1 or +1");
    Index prev = -1;
    for (const auto& [idx, val] : rows[i]) {
      if (idx < 0) throw std::invalid_argument("from_rows: negative feature index");
      if (idx <= prev) throw std::invalid_argument("from_rows: indices must be strictly increasing");
      prev = idx;
      if (val != 0.0) {
        ds.indices_.push_back(idx);
        ds.values_.push_back(val);
      }
      max_dim = std::max(max_dim, idx + 1);
    }
    ds.offsets_.push_back(static_cast<Index>(ds.indices_.size()));
    ds.labels_.push_back(static_cast<double>(labels[i]));
  }
  if (dim > 0 && dim < max_dim) throw std::invalid_argument("from_rows: dim override below max index");
  ds.d_ = dim > 0 ? dim : max_dim;
  return ds;
}

double SparseDataset::row_dot(Index i, const Vector& w) const {
  const auto idx = row_indices(i);
  const auto val = row_values(i);
  double acc = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) acc += val[k] * w[idx[k]];
  return acc;
}

void SparseDataset::add_row_scaled(Index i, double coef, Vector& out) const {
  const auto idx = row_indices(i);
  const auto val = row_values(i);
  for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] += coef * val[k];
}

double SparseDataset::row_norm(Index i) const {
  double acc = 0.0;
  for (const double v : row_values(i)) acc += v * v;
  return std::sqrt(acc);
}

SparseDataset parse_libsvm(std::istream& in, const ParseOptions& opts) {
  SparseDataset ds;
  std::string line;
  std::size_t line_no = 0;
  Index max_dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();

    std::size_t pos = 0;
    auto next_token = [&]() -> std::string_view {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      const std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      return std::string_view(line).substr(start, pos - start);
    };

    const auto label_tok = next_token();
    if (label_tok.empty()) continue;  // blank or comment-only line
    const double raw_label = parse_double_token(label_tok, line_no, "label");
    const int label = opts.labels.apply(raw_label, line_no);

    Index prev = 0;  // file indices are 1-based
    for (;;) {
      const auto tok = next_token();
      if (tok.empty()) break;
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(at_line(line_no, "feature token '" + std::string(tok) + "' is not idx:val"));
      const long long file_idx = parse_int_token(tok.substr(0, colon), line_no, "feature index");
      const double value = parse_double_token(tok.substr(colon + 1), line_no, "feature value");
      if (file_idx < 1) throw ParseError(at_line(line_no, "feature index must be >= 1"));
      if (file_idx <= prev) throw ParseError(at_line(line_no, "feature indices must be strictly increasing"));
      prev = static_cast<Index>(file_idx);
      if (value != 0.0) {
        ds.indices_.push_back(static_cast<Index>(file_idx - 1));
        ds.values_.push_back(value);
      }
      max_dim = std::max(max_dim, static_cast<Index>(file_idx));
    }
    ds.offsets_.push_back(static_cast<Index>(ds.indices_.size()));
    ds.labels_.push_back(static_cast<double>(label));
    ++ds.n_;
  }
  if (opts.dim_override > 0 && opts.dim_override < max_dim)
    throw std::invalid_argument("dim override below max observed index");
  ds.d_ = opts.dim_override > 0 ? opts.dim_override : max_dim;
  return ds;
}

SparseDataset parse_libsvm(const std::string& text, const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_libsvm(in, opts);
}

SparseDataset load_libsvm_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_libsvm(in, opts);
}

SparseDataset normalize_rows_l2(const SparseDataset& ds) {
  SparseDataset out = ds;
  for (Index i = 0; i < ds.num_examples(); ++i) {
    const double norm = ds.row_norm(i);
    if (norm == 0.0) continue;
    const auto a = static_cast<std::size_t>(out.offsets_[static_cast<std::size_t>(i)]);
    const auto b = static_cast<std::size_t>(out.offsets_[static_cast<std::size_t>(i) + 1]);
    for (std::size_t k = a; k < b; ++k) out.values_[k] /= norm;
  }
  return out;
}

std::string write_libsvm(const SparseDataset& ds) {
  std::string out;
  char buf[64];
  for (Index i = 0; i < ds.num_examples(); ++i) {
    out += ds.label(i) > 0 ? "+1" : "-1";
    const auto idx = ds.row_indices(i);
    const auto val = ds.row_values(i);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::snprintf(buf, sizeof(buf), " %lld:%.17g", static_cast<long long>(idx[k] + 1), val[k]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace scg
