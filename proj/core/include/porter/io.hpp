#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "porter/model.hpp"

namespace porter {

inline constexpr int kInstanceSchemaVersion = 1;
inline constexpr int kSolutionSchemaVersion = 1;

// Instance documents store the depot pair in dedicated fields and the
// n real items and placeholders as coordinate lists; readers rebuild
// the index-0 convention, writers strip it.
Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

Solution read_solution(const std::filesystem::path& path);
void write_solution(const Solution& sol, const std::filesystem::path& path,
                    const std::string& instance_name = "");

// Reference costs keyed by instance name.
std::map<std::string, double> read_reference_costs(const std::filesystem::path& path);
void write_reference_costs(const std::map<std::string, double>& refs,
                           const std::filesystem::path& path);

// Uniform random instance on [0, extent)^2 with the depot at the
// center.  Coordinates are drawn from a fixed bit-level recipe, so one
// (n, seed, extent) triple yields the same instance everywhere.
Instance generate(int n, std::uint64_t seed, double extent = 1.0);

}  // namespace porter
