#pragma once

#include <filesystem>

#include "maskbench/net/model.hpp"

namespace maskbench::net {

/// Little-endian layout: "MBCK", u32 version, model config fields as u32,
/// speaker list (u32 count, then u32 length + bytes each), then named blocks
/// (u32 name length, name, u32 rank, u32 dims, float32 values) for every
/// parameter and batch-norm running statistic.
void save_checkpoint(SeparationModel& model, const std::filesystem::path& path);

/// Throws DataError on a truncated or malformed file. When `expected` is
/// given, a config mismatch throws ConfigError naming the first differing
/// field. Nothing is returned unless every block loaded.
SeparationModel load_checkpoint(const std::filesystem::path& path, const ModelConfig* expected = nullptr);

}  // namespace maskbench::net
