#pragma once

#include <filesystem>

#include "excessd/pipeline.hpp"

namespace excessd {

void write_forecasts_csv(const PipelineResult& result, const std::filesystem::path& path);
void write_excess_csv(const PipelineResult& result, const std::filesystem::path& path);
void write_regressions_json(const PipelineResult& result, const std::filesystem::path& path);
void write_indexes_csv(const PipelineResult& result, const std::filesystem::path& path);
void write_summary_json(const PipelineResult& result, const std::filesystem::path& path);
void write_charts(const PipelineResult& result, const std::filesystem::path& dir);

}  // namespace excessd
