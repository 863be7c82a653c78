#pragma once

#include <filesystem>
#include <string>

namespace mvl {

// $MVL_DATA_DIR if set, else the source tree's data/ directory.
std::filesystem::path data_dir();
std::string read_text(const std::filesystem::path& p);
// Resolves a path relative to data_dir() unless it already exists as given.
std::filesystem::path data_path(const std::string& relative);

}  // namespace mvl
