#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "trirain/family.hpp"

namespace trirain {

/// Search progress at work-item granularity. Text format:
///
///   ckpt 1
///   n <n>
///   mode set|multiset
///   target maximize|prove|enumerate
///   k <k>
///   split_depth <d>
///   items <count>
///   done <item> <item> ...
///   nodes <explored>
///   best <size>
///   found_item <item or -1>
///   witnesses <count>
///   witness
///   <TRIFAM v1 block>
///   ...
///   end
struct Checkpoint {
  int n = 0;
  Mode mode = Mode::Set;
  std::string target;
  int k = 0;
  int split_depth = 0;
  int items = 0;
  std::vector<int> done;
  std::uint64_t nodes = 0;
  int best = -1;
  int found_item = -1;
  std::vector<TriangleFamily> witnesses;
};

std::string serialize_checkpoint(const Checkpoint& c);
/// Throws std::runtime_error on malformed input.
Checkpoint parse_checkpoint(std::string_view text);

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c);
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace trirain
