#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace brjuno_cli {

// Value lists accepted by --set and --sweep:
//   a,b,c                  explicit list (each entry parsed by the command)
//   grid:start:stop:count  evenly spaced decimals, endpoints included
//   noble:N                1/(a + golden mean), a = 1 .. N, i.e. [0; a, 1, 1, ...]
//   metallic:N             [0; m, m, m, ...], m = 1 .. N
std::vector<std::string> expand_values(const std::string& spec);

struct SweepSpec {
  std::string variable;
  std::vector<std::string> values;
};

// "var=values"
SweepSpec parse_sweep(const std::string& text);

// fn(i) for every i < n on at most `workers` threads; workers = 0 means one per core.
void parallel_map(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace brjuno_cli
