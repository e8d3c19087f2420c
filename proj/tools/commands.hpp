#pragma once

#include "emit.hpp"

#include <brjuno/complex_brjuno.hpp>

#include <memory>
#include <string>
#include <vector>

namespace brjuno_cli {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kUnreliable = 3 };

struct Options {
  std::string format = "csv";
  std::string output, output_dir, sweep, set;
  int bits = 128;
  int threads = 0;

  // sweepable inputs; rho is stored in x
  std::string x, alpha = "1", eps = "1e-3", gamma = "0.4";

  int depth = 60;
  int order = 60;
  std::string f = "neglog";
  std::string map = "semi";
  double nu = 0.5;

  int n = 1024;
  double A = 1, B = 0;  // B = 0 picks 2A/(2^gamma - 2^-gamma)
  double tol = 1e-12;
  int max_terms = 1000;

  long q_max = 256;
  int n_max = 1000;
  bool extended = false;
  double jump = 0;
  double x0 = 0, x1 = 1;
  int samples = 200;
};

struct Inputs {
  std::string x, alpha, eps, gamma;
};

struct Outcome {
  json summary = json::object();
  std::vector<json> rows;  // per-index table for the commands that have one
  int status = kOk;
};

struct Command {
  std::string name;
  std::vector<std::string> sweepable;  // first entry is what --set sweeps
  bool needs_x = false;
  bool rows_in_csv = false;            // CSV shows the row table instead of the summary
  bool uses_complex = false;
  bool high_precision = false;         // Lindstedt work runs at >= 128 bits
};

const std::vector<Command>& commands();
const Command& find_command(const std::string& name);

// The complex commands share one precomputed monoid sum across the sweep.
struct Shared {
  std::unique_ptr<brjuno::ComplexBrjuno> complex;
};

Outcome run(const Command& cmd, const Options& o, const Inputs& in, const Shared& shared);

}  // namespace brjuno_cli
