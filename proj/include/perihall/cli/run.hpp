#pragma once

// Command dispatch behind the perihall executable.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace perihall::cli {

enum class Format { Table, Json };

struct JobSpec {
  std::string quiver = "A1";  // spec file path or builtin "A<n>"
  std::optional<std::uint32_t> p;  // overrides the spec file's p; default 2
  std::vector<std::size_t> max_dim;  // per vertex, or one value for all; default 1
  std::uint64_t budget = 1'000'000;
  std::string command;
  std::vector<std::string> args;
  std::string out;  // empty: write to the given stream
  Format format = Format::Table;
  // "auto" or "X,Y,L"; test-only.
  std::optional<std::string> fault;
  std::size_t samples = 0;  // triples or pairs to sample; 0 = all
  std::size_t limit = 200;  // instance cap for lemma, orbit and decorated symmetry
};

// Exit status: 0 success, 1 a verified identity failed, 2 bad input or
// exhausted budget.  Internal errors propagate.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace perihall::cli
