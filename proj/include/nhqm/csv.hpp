#pragma once

// Deterministic table export. CSV uses 17 significant digits and \n line
// endings so repeated runs are byte-identical; complex columns split into
// <name>_re / <name>_im.

#include <string>

#include "nhqm/types.hpp"

namespace nhqm {

std::string to_csv(const Series& s);
std::string to_json(const Series& s);

void write_text(const std::string& path, const std::string& content);

}  // namespace nhqm
