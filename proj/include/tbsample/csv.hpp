#pragma once

#include <optional>
#include <string>

#include "tbsample/types.hpp"

namespace tbs {

enum class SignalFormat { TwoColumnCSV, OneColumnCSV };

struct SignalFileSpec {
  std::string path;
  SignalFormat format = SignalFormat::TwoColumnCSV;
  double rate_hz = 0.0;  // required for OneColumnCSV
  std::optional<std::string> impulses_path;
};

// Thrown on malformed input; what() carries a line-numbered message.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Reads a signal CSV. TwoColumnCSV rows are "t,value" with t the sample
// instants (right interval edges, uniform spacing); t_start = t_1 - dt.
// OneColumnCSV is one value per line with dt = 1/rate_hz and t_start = 0.
// A non-numeric first row is treated as a header. '#' starts a comment.
HybridSignal read_signal_csv(const SignalFileSpec& spec);

// Reads "t,weight" impulse rows into an existing signal (validating domain
// and ordering). Times bitwise equal to a grid edge stay on it; the reader
// snaps times within 1e-9*dt of an edge to the exact edge value.
void read_impulses_csv(const std::string& path, HybridSignal& f);

// Reads "t,amplitude" rows; amplitudes must be multiples of theta.
SpikeTrain read_spikes_csv(const std::string& path, double theta, double eps = 1e-12);

void write_signal_csv(const std::string& path, const HybridSignal& f);
void write_impulses_csv(const std::string& path, const HybridSignal& f);
void write_spikes_csv(const std::string& path, const SpikeTrain& s);

// 12 significant digits, '.' decimal, used for all file output.
std::string format_number(double v);

}  // namespace tbs
