#pragma once

#include <string>

#include "nas/presentation.hpp"

namespace nas {

// deterministic serializations; json round-trips through parse_presentation
std::string emit_text(const Presentation& pres);
std::string emit_json(const Presentation& pres);
std::string emit_latex(const Presentation& pres);
std::string emit(const Presentation& pres, const std::string& format); // text | json | latex

Presentation parse_presentation(const std::string& json_text);

} // namespace nas
