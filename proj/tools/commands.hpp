#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace satlink::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalid = 2,   // input failed to parse or validate
  kInternal = 3,  // an invariant that holds for every valid input failed
};

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::size_t m = 2;
  std::vector<std::size_t> m_list{2, 4};
  Format format = Format::Text;
  std::uint64_t seed = 0;
  std::size_t jobs = 0;  // 0: hardware concurrency
  bool cross_checks = true;
};

/// Default property-test seed, overridable through HEDDEN_SEED.
std::uint64_t default_seed();

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compile(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_cover(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_linkings(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_obstruct(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_normalize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_corpus(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs a command, turning input errors into kInvalid and broken invariants
/// into kInternal, with a one-line message on err.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace satlink::cli
