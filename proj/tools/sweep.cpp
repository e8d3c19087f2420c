#include "sweep.hpp"

#include <brjuno/input.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace brjuno_cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int count_arg(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || n < 0) throw CLI::ValidationError(what, "expected a non-negative integer, got '" + s + "'");
  return n;
}

}  // namespace

std::vector<std::string> expand_values(const std::string& text) {
  if (text.rfind("grid:", 0) == 0) {
    auto p = split(text.substr(5), ':');
    if (p.size() != 3) throw CLI::ValidationError("grid", "use grid:start:stop:count");
    double a = std::stod(p[0]), b = std::stod(p[1]);
    int n = count_arg(p[2], "grid");
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
      double t = n == 1 ? a : a + (b - a) * i / (n - 1);
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", t);
      out.emplace_back(buf);
    }
    return out;
  }
  if (text.rfind("noble:", 0) == 0 || text.rfind("metallic:", 0) == 0) {
    bool noble = text[0] == 'n';
    int n = count_arg(text.substr(text.find(':') + 1), noble ? "noble" : "metallic");
    std::vector<std::string> out;
    for (int a = 1; a <= n; ++a) out.push_back((noble ? brjuno::noble(a) : brjuno::metallic(a)).str());
    return out;
  }
  if (text.empty()) return {};
  return split(text, ',');
}

SweepSpec parse_sweep(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw CLI::ValidationError("--sweep", "use VAR=VALUES, e.g. eps=1e-2,1e-3 or x=noble:10");
  return {text.substr(0, eq), expand_values(text.substr(eq + 1))};
}

void parallel_map(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  std::size_t w = workers > 0 ? static_cast<std::size_t>(workers) : std::max(1u, std::thread::hardware_concurrency());
  w = std::min(w, n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < w; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace brjuno_cli
