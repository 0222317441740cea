#pragma once

#include <string>

namespace polariton {

// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace polariton
