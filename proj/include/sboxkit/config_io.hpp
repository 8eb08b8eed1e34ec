#pragma once

#include <filesystem>
#include <string>

#include "sboxkit/chaos.hpp"

namespace sboxkit {

/// Flat key-value form: alpha1, alpha2, x01, x02, lags1, lags2, burn_in.
/// Lags are comma-separated lists; '#' starts a comment.
GeneratorConfig parse_config(const std::string& text);
std::string format_config(const GeneratorConfig& config);

GeneratorConfig load_config(const std::filesystem::path& path);
void save_config(const GeneratorConfig& config, const std::filesystem::path& path);

}  // namespace sboxkit
