#pragma once

#include <map>
#include <string>

#include "quiva/presentation.hpp"

namespace quiva::bundled {

/// The example presentations that ship with the tool, keyed by the names the
/// CLI and the golden suite use (e3_1, e3_2, e4_1, e4_2, ringel_dual_cycle,
/// apr_negative). The same texts are installed as data/*.quiv files.
const std::map<std::string, std::string>& presentations();

const std::string& text(const std::string& name);

Presentation load(const std::string& name);

}  // namespace quiva::bundled
