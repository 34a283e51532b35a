#ifndef OMA_TIMESERIES_HPP
#define OMA_TIMESERIES_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oma/core.hpp"
#include "oma/rng.hpp"

namespace oma {

struct ChannelInfo {
  std::string name;
  std::string location;
  std::string direction;
};

/// Multichannel sampled vibration record. Rows of `samples` are channels.
struct TimeSeriesSet {
  double fs = 0.0;  // sampling frequency [Hz]
  std::vector<ChannelInfo> channels;
  MatrixXd samples;  // n_channels x n_samples
  std::string unit = "m";

  int n_channels() const { return static_cast<int>(samples.rows()); }
  long n_samples() const { return samples.cols(); }

  void validate() const {
    require(fs > 0.0, "TimeSeriesSet: fs must be > 0");
    require(samples.cols() >= 2, "TimeSeriesSet: need at least 2 samples");
    require(static_cast<int>(channels.size()) == samples.rows(),
            "TimeSeriesSet: channel metadata count does not match sample rows");
    std::set<std::string> names;
    for (const auto& c : channels) {
      require(names.insert(c.name).second,
              "TimeSeriesSet: duplicate channel name '" + c.name + "'");
    }
  }
};

enum class NoiseDistribution { gaussian, uniform };

struct NoiseSpec {
  double level = 0.0;  // fraction of per-channel standard deviation
  std::uint64_t seed = 0;
  NoiseDistribution distribution = NoiseDistribution::gaussian;
};

namespace detail {

inline double parse_cell(const std::string& cell, long row, long col) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != cell.size() || cell.empty())
    throw Error("non-numeric cell at row " + std::to_string(row) + ", column " +
                std::to_string(col) + ": '" + cell + "'");
  return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

/// Reads a time-series CSV: header `t,<ch1>,<ch2>,...`, first column a
/// uniform time grid in seconds. fs is inferred from the mean time step;
/// relative jitter above 1e-6 is rejected.
inline TimeSeriesSet load_timeseries_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open '" + path + "' for reading");

  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "empty file: " + path);
  const auto header = detail::split_csv_line(line);
  require(header.size() >= 2, "need a time column and at least one channel");
  require(header[0] == "t", "first column must be named 't', got '" + header[0] + "'");

  const std::size_t n_cols = header.size();
  std::vector<double> t;
  std::vector<std::vector<double>> cols(n_cols - 1);
  long row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != n_cols)
      throw Error("ragged row " + std::to_string(row) + ": expected " +
                  std::to_string(n_cols) + " cells, got " +
                  std::to_string(cells.size()));
    t.push_back(detail::parse_cell(cells[0], row, 1));
    for (std::size_t c = 1; c < n_cols; ++c)
      cols[c - 1].push_back(detail::parse_cell(cells[c], row, static_cast<long>(c + 1)));
  }
  const long n = static_cast<long>(t.size());
  require(n >= 2, "need at least 2 data rows, got " + std::to_string(n));

  const double dt_mean = (t.back() - t.front()) / static_cast<double>(n - 1);
  require(dt_mean > 0.0, "time column must be strictly increasing");
  double max_jitter = 0.0;
  for (long i = 0; i + 1 < n; ++i) {
    const double dt = t[i + 1] - t[i];
    require(dt > 0.0, "time column must be strictly increasing (row " +
                          std::to_string(i + 2) + ")");
    max_jitter = std::max(max_jitter, std::abs(dt - dt_mean) / dt_mean);
  }
  if (max_jitter >= 1e-6)
    throw Error("non-uniform time grid: max relative jitter " +
                std::to_string(max_jitter));

  TimeSeriesSet ts;
  ts.fs = 1.0 / dt_mean;
  ts.samples.resize(static_cast<long>(n_cols) - 1, n);
  for (std::size_t c = 0; c + 1 < n_cols; ++c) {
    ts.channels.push_back({header[c + 1], "", ""});
    for (long i = 0; i < n; ++i) ts.samples(static_cast<long>(c), i) = cols[c][i];
  }
  ts.validate();
  return ts;
}

/// Writes the CSV counterpart of load_timeseries_csv at full double
/// precision (17 significant digits).
inline void write_timeseries_csv(const TimeSeriesSet& ts, const std::string& path) {
  require(!ts.channels.empty(), "no channels");
  ts.validate();
  std::ofstream out(path);
  require(out.good(), "cannot open '" + path + "' for writing");
  out << "t";
  for (const auto& c : ts.channels) out << "," << c.name;
  out << "\n";
  char buf[40];
  const double dt = 1.0 / ts.fs;
  for (long i = 0; i < ts.n_samples(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", static_cast<double>(i) * dt);
    out << buf;
    for (int c = 0; c < ts.n_channels(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", ts.samples(c, i));
      out << "," << buf;
    }
    out << "\n";
  }
  require(out.good(), "write failed for '" + path + "'");
}

/// Removes the per-channel mean. Metadata and fs are preserved.
inline TimeSeriesSet detrend(const TimeSeriesSet& ts) {
  TimeSeriesSet out = ts;
  for (int c = 0; c < out.n_channels(); ++c)
    out.samples.row(c).array() -= out.samples.row(c).mean();
  return out;
}

namespace detail {

/// Sample standard deviation (N-1 normalization).
inline double sample_std(const Eigen::Ref<const Eigen::RowVectorXd>& row) {
  const long n = row.size();
  if (n < 2) return 0.0;
  const double mean = row.mean();
  const double ss = (row.array() - mean).square().sum();
  return std::sqrt(ss / static_cast<double>(n - 1));
}

}  // namespace detail

/// Adds noise scaled by the per-channel sample standard deviation of the
/// clean signal: out[c] = in[c] + sigma_c * level * n(t). `gaussian` draws
/// standard normal samples, `uniform` draws from [0,1).
inline TimeSeriesSet add_noise(const TimeSeriesSet& ts, const NoiseSpec& spec) {
  require(spec.level >= 0.0, "noise level must be >= 0");
  if (spec.level == 0.0) return ts;
  TimeSeriesSet out = ts;
  Rng rng(spec.seed);
  for (int c = 0; c < out.n_channels(); ++c) {
    const double sigma = detail::sample_std(ts.samples.row(c));
    for (long i = 0; i < out.n_samples(); ++i) {
      const double n = spec.distribution == NoiseDistribution::gaussian
                           ? rng.gaussian()
                           : rng.uniform01();
      out.samples(c, i) += sigma * spec.level * n;
    }
  }
  return out;
}

}  // namespace oma

#endif  // OMA_TIMESERIES_HPP
