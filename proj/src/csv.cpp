#include "tbsample/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "tbsample/quantize.hpp"

namespace tbs {
namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = strip(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

struct Row {
  std::size_t line_no;
  std::vector<double> fields;
};

// Loads numeric rows, skipping blank lines, '#' comments and one header row.
std::vector<Row> load_rows(const std::string& path, std::size_t expect_fields) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open");
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = strip(line);
    if (t.empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(t);
    std::string cell;
    bool ok = true;
    while (std::getline(ss, cell, ',')) {
      double v = 0.0;
      if (!parse_double(cell, v)) {
        ok = false;
        break;
      }
      fields.push_back(v);
    }
    if (!ok) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw parse_error(path + ":" + std::to_string(line_no) + ": malformed row");
    }
    header_allowed = false;
    if (fields.size() != expect_fields)
      throw parse_error(path + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(expect_fields) + " fields");
    rows.push_back({line_no, std::move(fields)});
  }
  return rows;
}

}  // namespace

HybridSignal read_signal_csv(const SignalFileSpec& spec) {
  HybridSignal f;
  if (spec.format == SignalFormat::OneColumnCSV) {
    if (!(spec.rate_hz > 0.0)) throw parse_error(spec.path + ": --rate required for one-column input");
    const std::vector<Row> rows = load_rows(spec.path, 1);
    if (rows.empty()) throw parse_error(spec.path + ": no samples");
    f.t_start = 0.0;
    f.dt = 1.0 / spec.rate_hz;
    for (const Row& r : rows) f.samples.push_back(r.fields[0]);
  } else {
    const std::vector<Row> rows = load_rows(spec.path, 2);
    if (rows.empty()) throw parse_error(spec.path + ": no samples");
    if (rows.size() < 2) throw parse_error(spec.path + ": need at least two rows to infer dt");
    const double t1 = rows.front().fields[0];
    const double tn = rows.back().fields[0];
    const double dt = (tn - t1) / static_cast<double>(rows.size() - 1);
    if (!(dt > 0.0)) throw parse_error(spec.path + ": timestamps must increase");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double expected = t1 + static_cast<double>(i) * dt;
      if (std::fabs(rows[i].fields[0] - expected) > 1e-6 * dt)
        throw parse_error(spec.path + ":" + std::to_string(rows[i].line_no) +
                          ": non-uniform timestamp");
      f.samples.push_back(rows[i].fields[1]);
    }
    f.dt = dt;
    f.t_start = t1 - dt;
  }
  f.t_end = f.edge(f.samples.size());
  if (spec.impulses_path) read_impulses_csv(*spec.impulses_path, f);
  f.validate();
  return f;
}

void read_impulses_csv(const std::string& path, HybridSignal& f) {
  const std::vector<Row> rows = load_rows(path, 2);
  for (const Row& r : rows) {
    double t = r.fields[0];
    // snap near-edge times onto the exact grid edge
    const double rel = (t - f.t_start) / f.dt;
    const auto j = static_cast<long long>(std::llround(rel));
    if (j >= 0 && static_cast<std::size_t>(j) <= f.samples.size() &&
        std::fabs(t - f.edge(static_cast<std::size_t>(j))) <= 1e-9 * f.dt)
      t = f.edge(static_cast<std::size_t>(j));
    f.impulses.push_back({t, r.fields[1]});
  }
  std::sort(f.impulses.begin(), f.impulses.end(),
            [](const Impulse& a, const Impulse& b) { return a.time < b.time; });
  for (std::size_t i = 1; i < f.impulses.size(); ++i) {
    if (f.impulses[i].time == f.impulses[i - 1].time)
      throw parse_error(path + ": duplicate impulse time");
  }
}

SpikeTrain read_spikes_csv(const std::string& path, double theta, double eps) {
  const std::vector<Row> rows = load_rows(path, 2);
  SpikeTrain s;
  s.theta = theta;
  for (const Row& r : rows) {
    const std::int64_t k = quantize_multiple(r.fields[1], theta, 1e-6);
    if (k == 0 || std::fabs(r.fields[1] - theta * static_cast<double>(k)) >
                      1e-6 * std::fmax(1.0, std::fabs(r.fields[1])))
      throw parse_error(path + ":" + std::to_string(r.line_no) +
                        ": amplitude is not a nonzero multiple of theta");
    s.spikes.push_back({r.fields[0], theta * static_cast<double>(k)});
  }
  s.validate(eps);
  return s;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_signal_csv(const std::string& path, const HybridSignal& f) {
  std::ofstream out(path);
  if (!out) throw parse_error(path + ": cannot write");
  out << "t,value\n";
  for (std::size_t i = 1; i <= f.samples.size(); ++i)
    out << format_number(f.edge(i)) << "," << format_number(f.samples[i - 1]) << "\n";
}

void write_impulses_csv(const std::string& path, const HybridSignal& f) {
  std::ofstream out(path);
  if (!out) throw parse_error(path + ": cannot write");
  out << "t,weight\n";
  for (const Impulse& im : f.impulses)
    out << format_number(im.time) << "," << format_number(im.weight) << "\n";
}

void write_spikes_csv(const std::string& path, const SpikeTrain& s) {
  std::ofstream out(path);
  if (!out) throw parse_error(path + ": cannot write");
  out << "t,amplitude\n";
  for (const Spike& sp : s.spikes)
    out << format_number(sp.time) << "," << format_number(sp.amplitude) << "\n";
}

}  // namespace tbs
