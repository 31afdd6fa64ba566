#include "hyperent/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperent {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    // trim surrounding whitespace
    auto b = field.find_first_not_of(" \t\r");
    auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string()
                                         : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_cell(const std::string& cell, int row, std::size_t col) {
  if (cell.empty())
    fail(Errc::MalformedInput, "missing value at data row " +
                                   std::to_string(row) + ", column " +
                                   std::to_string(col + 1));
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != cell.size())
    fail(Errc::MalformedInput, "non-numeric value '" + cell +
                                   "' at data row " + std::to_string(row) +
                                   ", column " + std::to_string(col + 1));
  return v;
}

bool blank_line(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

TimeSeriesTable read_timeseries_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> names;
  while (std::getline(in, line))
    if (!blank_line(line)) {
      names = split_csv_line(line);
      break;
    }
  if (names.empty()) fail(Errc::MalformedInput, "empty time-series table");
  const std::size_t n = names.size();

  std::vector<std::vector<double>> rows;
  int row_no = 0;
  while (std::getline(in, line)) {
    if (blank_line(line)) continue;
    ++row_no;
    auto cells = split_csv_line(line);
    if (cells.size() != n)
      fail(Errc::MalformedInput,
           "ragged row " + std::to_string(row_no) + ": expected " +
               std::to_string(n) + " values, got " +
               std::to_string(cells.size()));
    std::vector<double> vals(n);
    for (std::size_t c = 0; c < n; ++c) vals[c] = parse_cell(cells[c], row_no, c);
    rows.push_back(std::move(vals));
  }
  if (rows.size() < 2)
    fail(Errc::MalformedInput, "need at least 2 observations per series");

  TimeSeriesTable table;
  table.names = std::move(names);
  table.samples.resize(static_cast<Eigen::Index>(n), rows.size());
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t v = 0; v < n; ++v) table.samples(v, t) = rows[t][v];
  return table;
}

Eigen::MatrixXd read_matrix_csv(std::istream& in) {
  std::string line;
  std::vector<std::vector<double>> rows;
  int row_no = 0;
  while (std::getline(in, line)) {
    if (blank_line(line)) continue;
    ++row_no;
    auto cells = split_csv_line(line);
    std::vector<double> vals(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      vals[c] = parse_cell(cells[c], row_no, c);
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) fail(Errc::MalformedInput, "empty matrix");
  const std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n)
      fail(Errc::MalformedInput, "matrix is not square");
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

Eigen::MatrixXd pearson_matrix(const TimeSeriesTable& data) {
  const int n = data.variable_count();
  const int t = data.sample_count();
  if (t < 2) fail(Errc::MalformedInput, "need at least 2 observations");

  Eigen::MatrixXd centered = data.samples;
  Eigen::VectorXd norms(n);
  for (int i = 0; i < n; ++i) {
    centered.row(i).array() -= centered.row(i).mean();
    norms[i] = centered.row(i).norm();
    if (norms[i] == 0.0)
      fail(Errc::ZeroVarianceSeries,
           "series '" + data.names[i] + "' has zero variance");
  }
  Eigen::MatrixXd c(n, n);
  for (int i = 0; i < n; ++i) {
    c(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      double v = centered.row(i).dot(centered.row(j)) / (norms[i] * norms[j]);
      v = std::clamp(v, -1.0, 1.0);
      c(i, j) = c(j, i) = v;
    }
  }
  return c;
}

MultiCorrelation multi_correlation(double c12, double c13, double c23) {
  for (double c : {c12, c13, c23})
    if (!(c >= -1.0 && c <= 1.0))
      fail(Errc::OutOfRangeCorrelation,
           "pairwise correlation " + std::to_string(c) + " outside [-1,1]");
  MultiCorrelation out;
  out.r_squared = c12 * c12 + c13 * c13 + c23 * c23 - 2.0 * c12 * c13 * c23;
  out.r = std::sqrt(std::max(0.0, out.r_squared));
  return out;
}

UniformHypergraph hypergraph_from_timeseries(const TimeSeriesTable& data,
                                             int k, double threshold,
                                             bool signed_mode) {
  if (k != 2 && k != 3)
    fail(Errc::UnsupportedOrder,
         "time-series construction supports k = 2 or 3, got " +
             std::to_string(k));
  if (!(threshold >= 0.0 && threshold <= 1.0))
    fail(Errc::OutOfRangeThreshold,
         "threshold " + std::to_string(threshold) + " outside [0,1]");
  const Eigen::MatrixXd c = pearson_matrix(data);
  const int n = data.variable_count();
  std::vector<Edge> edges;
  if (k == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double v = signed_mode ? c(i, j) : std::abs(c(i, j));
        if (v >= threshold) edges.push_back({i + 1, j + 1});
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int l = j + 1; l < n; ++l)
          if (multi_correlation(c(i, j), c(i, l), c(j, l)).r >= threshold)
            edges.push_back({i + 1, j + 1, l + 1});
  }
  return UniformHypergraph(n, k, std::move(edges));
}

UniformHypergraph hypergraph_from_weight_matrix(const Eigen::MatrixXd& w,
                                                double threshold) {
  if (w.rows() != w.cols())
    fail(Errc::AsymmetricMatrix, "weight matrix is not square");
  const int n = static_cast<int>(w.rows());
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(w(i, j) - w(j, i)) > 1e-12 * scale)
        fail(Errc::AsymmetricMatrix,
             "weight matrix differs at (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w(i, j) >= threshold) edges.push_back({i + 1, j + 1});
  return UniformHypergraph(n, 2, std::move(edges));
}

}  // namespace hyperent
