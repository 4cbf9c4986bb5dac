#pragma once

// JSON file formats.
//
//   matrix:  {"rows": n, "cols": m, "re": [...], "im": [...]}   row-major, length n·m
//   channel: {"dim": d, "kraus": [matrix, ...]}

#include <filesystem>
#include <string>
#include <string_view>

#include "qsent/channel.hpp"
#include "qsent/matcore.hpp"

namespace qsent {

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(std::string_view text);

std::string channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(std::string_view text);

ComplexMatrix load_matrix(const std::filesystem::path& path);
KrausChannel load_channel(const std::filesystem::path& path);
void save_channel(const std::filesystem::path& path, const KrausChannel& ch);

} // namespace qsent
