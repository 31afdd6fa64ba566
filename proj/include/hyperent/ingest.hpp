#pragma once

#include <istream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

// Named time series, one row per variable, one column per observation.
struct TimeSeriesTable {
  std::vector<std::string> names;
  Eigen::MatrixXd samples;  // n x T, T >= 2

  int variable_count() const { return static_cast<int>(samples.rows()); }
  int sample_count() const { return static_cast<int>(samples.cols()); }
};

// CSV with a header row of variable names followed by one row per time
// point. Ragged rows, non-numeric cells and T < 2 are rejected.
TimeSeriesTable read_timeseries_csv(std::istream& in);

// Square CSV, no header.
Eigen::MatrixXd read_matrix_csv(std::istream& in);

// Pearson coefficients with exact unit diagonal. Throws
// ZeroVarianceSeries naming the first offending series.
Eigen::MatrixXd pearson_matrix(const TimeSeriesTable& data);

struct MultiCorrelation {
  double r = 0.0;
  double r_squared = 0.0;
};

// r^2 = c1^2 + c2^2 + c3^2 - 2 c1 c2 c3 over the three pairwise
// coefficients of a triple; r = sqrt(max(0, r^2)). Inputs must lie in
// [-1, 1].
MultiCorrelation multi_correlation(double c12, double c13, double c23);

// k = 2: edge {i,j} iff |c_ij| >= threshold (or signed c_ij >= threshold
// with signed_mode). k = 3: edge {i,j,l} iff the multi-correlation of the
// raw pairwise coefficients reaches the threshold.
UniformHypergraph hypergraph_from_timeseries(const TimeSeriesTable& data,
                                             int k, double threshold,
                                             bool signed_mode = false);

// k = 2 graph from a symmetric nonnegative weight matrix:
// edge {i,j} iff W_ij >= threshold, i != j.
UniformHypergraph hypergraph_from_weight_matrix(const Eigen::MatrixXd& w,
                                                double threshold);

}  // namespace hyperent
