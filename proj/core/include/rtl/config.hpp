#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

namespace rtl {

/// Enumeration or search exceeded a configured cap (CLI exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
  int workers = default_workers();
  int cap_graphs = 10;                // max order for graph enumeration
  int cap_trees = 10;                 // max order for tree enumeration
  std::uint64_t contain_budget = 0;   // nodes per containment call, 0 = unlimited
  bool timestamp = true;
  std::string format = "json";

  static int default_workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
  }
};

}  // namespace rtl
