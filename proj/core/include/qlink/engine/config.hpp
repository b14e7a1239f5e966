#pragma once

#include <cstdint>
#include <string>

namespace qlink {

enum class EngineKind { kAuto, kBrute, kSweep };

struct EngineConfig {
  EngineKind engine = EngineKind::kAuto;
  int brute_max_crossings = 24;
  int sweep_max_width = 26;
  int threads = 1;
  // Evaluate twist regions by repeated squaring instead of one crossing at a time.
  bool twist_squaring = true;
};

struct EngineStats {
  std::string engine;
  std::int64_t states_evaluated = 0;
  int max_width = 0;
  int crossings = 0;
};

EngineKind parse_engine(const std::string& s);
std::string engine_name(EngineKind k);

}  // namespace qlink
