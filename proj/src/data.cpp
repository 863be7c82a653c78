#include "mvl/data.hpp"

#include "mvl/common.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mvl {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("MVL_DATA_DIR"); env && *env) return env;
    return MVL_DATA_DIR;
}

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw DomainError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path data_path(const std::string& relative) {
    std::filesystem::path p(relative);
    if (std::filesystem::exists(p)) return p;
    return data_dir() / p;
}

}  // namespace mvl
