#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nas/presentation.hpp"

namespace nas {

struct InstanceConfig;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> suite_names();

// suite: one of suite_names() or "all"
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed,
                                   const InstanceConfig* cfg = nullptr);

// acceptance checks (one per criterion)
CheckResult check_ch_axioms(std::uint64_t seed);
CheckResult check_envelope_oracle(std::uint64_t seed);
CheckResult check_splitting(std::uint64_t seed);
CheckResult check_iteration();
CheckResult check_closed_form_vs_solver();
CheckResult check_paper_examples();
CheckResult check_commutator_depth();
CheckResult check_scope_sensitivity();
CheckResult check_determinism();

// worked-example fixtures, transcribed term by term (window-restricted)
Presentation expected_simplest_char_p(Int p, const std::vector<Int>& gbox);
Presentation expected_qp_zeta_group(Int p, const std::vector<Int>& gbox);

InstanceConfig preset_config(const std::string& preset, Int p);

} // namespace nas
