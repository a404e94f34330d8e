#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace scg {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;

/// Thrown on malformed input data; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mapping from raw integer labels to {-1, +1}. LIBSVM files in the wild use
/// either +1/-1 or 0/1; both are accepted by default.
struct LabelMap {
  std::map<long long, int> entries{{-1, -1}, {0, -1}, {1, 1}};

  int apply(double raw, std::size_t line_no) const;

  /// Parses "raw:mapped,raw:mapped" (e.g. "0:-1,1:1").
  static LabelMap parse(const std::string& text);
};

struct ParseOptions {
  LabelMap labels;
  /// When positive, overrides the inferred feature dimension. Must be at least
  /// the largest index present (supports train/test splits with disjoint
  /// feature supports).
  Index dim_override = 0;
};

/// Immutable row-sparse classification data: n examples over d features with
/// labels in {-1, +1}. Storage is CSR; per-row indices are strictly increasing
/// and 0-based internally (files are 1-based). Safe to share read-only across
/// concurrent optimizer runs.
class SparseDataset {
 public:
  SparseDataset() = default;

  /// Builds from per-row (index, value) pairs; validates the invariants.
  static SparseDataset from_rows(const std::vector<std::vector<std::pair<Index, double>>>& rows,
                                 const std::vector<int>& labels, Index dim = 0);

  Index num_examples() const { return n_; }
  Index dim() const { return d_; }
  double label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }

  std::span<const Index> row_indices(Index i) const {
    const auto a = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(i)]);
    const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(i) + 1]);
    return {indices_.data() + a, b - a};
  }
  std::span<const double> row_values(Index i) const {
    const auto a = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(i)]);
    const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(i) + 1]);
    return {values_.data() + a, b - a};
  }

  double row_dot(Index i, const Vector& w) const;
  /// out += coef * row_i
  void add_row_scaled(Index i, double coef, Vector& out) const;
  double row_norm(Index i) const;

  /// b_i * <a_i, w>
  double margin(Index i, const Vector& w) const { return label(i) * row_dot(i, w); }

  std::int64_t nonzeros() const { return static_cast<std::int64_t>(values_.size()); }

 private:
  friend SparseDataset parse_libsvm(std::istream&, const ParseOptions&);
  friend SparseDataset normalize_rows_l2(const SparseDataset&);

  Index n_ = 0;
  Index d_ = 0;
  std::vector<Index> offsets_{0};
  std::vector<Index> indices_;
  std::vector<double> values_;
  std::vector<double> labels_;
};

/// Parses LIBSVM text: `<label> <idx>:<val> ...` per line, 1-based indices,
/// strictly increasing within a line. '#' starts a comment; blank lines are
/// skipped; LF and CRLF both accepted.
SparseDataset parse_libsvm(std::istream& in, const ParseOptions& opts = {});
SparseDataset parse_libsvm(const std::string& text, const ParseOptions& opts = {});
SparseDataset load_libsvm_file(const std::string& path, const ParseOptions& opts = {});

/// Divides every nonzero row by its l2 norm (zero rows unchanged), which also
/// bounds every entry into [-1, 1]. Idempotent.
SparseDataset normalize_rows_l2(const SparseDataset& ds);

/// Inverse of parse_libsvm up to float formatting (17 significant digits, so
/// values round-trip exactly).
std::string write_libsvm(const SparseDataset& ds);

}  // namespace scg
