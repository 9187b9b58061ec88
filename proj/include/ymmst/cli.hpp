#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ymmst/bigint.hpp"

namespace ymmst {

// One drawn instance of the size sweep behind `ymmst bench`.
struct BenchRow {
  std::string family;
  std::size_t size = 0;  // leaves for stars, nodes otherwise
  std::size_t nodes = 0;
  std::size_t depth = 0;
  std::size_t max_fanout = 0;
  BigInt width;
  BigInt height;
  std::uint64_t ops = 0;
};

// family is "star", "path" or "random". Stars sweep M = 1..max_size; the
// other families double from 1 up to max_size. Instances run concurrently,
// rows come back in size order.
std::vector<BenchRow> bench_family(const std::string& family, std::size_t max_size,
                                   std::size_t fanout = 3, std::uint64_t seed = 1);

std::string bench_csv(const std::vector<BenchRow>& rows);

// Entry point of the `ymmst` tool. args[0] is the program name. Exit codes:
// 0 success/certified, 1 refuted or disagreement, 2 ambiguous or
// indeterminate, 3 invalid input or refusal.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ymmst
