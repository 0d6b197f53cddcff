#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nas/presentation.hpp"
#include "nas/solver.hpp"

namespace nas {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InstanceConfig {
  Int p = 5;
  int N = 2;
  int n0 = 1;
  std::string mode = "char_p"; // char_p | char_0
  std::optional<MultiIndex> cbar0;
  std::optional<MultiIndex> cbar2;
  std::vector<std::pair<MultiIndex, std::vector<Int>>> beta; // iota -> coefficient coords
  int class_bound = 2;
  std::string form = "lie"; // lie | group
  std::string format = "json";
  std::string out_path;
  std::vector<std::string> verify;
  std::uint64_t seed = 12345;
  std::string preset;
  // window overrides
  std::optional<MultiIndex> win_lex;
  std::vector<Int> win_box;
  std::vector<Int> gbox;
};

void apply_preset(InstanceConfig& cfg); // throws UsageError on unknown preset
void validate(const InstanceConfig& cfg);

// resolved objects derived from a config
struct Instance {
  const GF* f = nullptr;
  Int p = 0;
  int N = 0;
  int n0 = 1;
  MultiIndex cbar0;
  Omega omega;      // the power-series datum (char_p: given; char_0: synthetic with A = beta^p)
  Window win;
  std::vector<Int> gbox;
  PresForm form = PresForm::LieOverK;
  std::map<MultiIndex, GfElem> A;
  int class_bound = 2;

  SolverContext solver_context(int wt_max) const;
};

Instance resolve(const InstanceConfig& cfg);
Presentation build_presentation(const InstanceConfig& cfg);

// run the pipeline: write/print artifacts, run requested verification
// suites; returns the process exit code (0 ok, 1 verification failure,
// 2 usage error)
int run_instance(const InstanceConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace nas
