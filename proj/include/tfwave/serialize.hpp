#pragma once

#include <filesystem>
#include <string>

#include "tfwave/grid.hpp"

#include "json.hpp"

namespace tfwave {

/// Binary grid-function file: magic "TFWG", u32 version, u32 d, u32 n,
/// f64 l (all little-endian), then n^d complex128 (re, im) pairs row-major.
void save_binary(const GridFunction& f, const std::filesystem::path& path);
GridFunction load_binary(const std::filesystem::path& path, Domain domain = Domain::spatial);

/// Equivalent JSON form; values are nested arrays of [re, im]
/// (one level per axis, row-major).
nlohmann::json to_json(const GridFunction& f);
GridFunction from_json(const nlohmann::json& j, Domain domain = Domain::spatial);
void save_json(const GridFunction& f, const std::filesystem::path& path);
GridFunction load_json(const std::filesystem::path& path, Domain domain = Domain::spatial);

namespace detail {
/// Write-temp-then-rename; the visible file is never partially written.
void atomic_write(const std::filesystem::path& path, const std::string& content);
}  // namespace detail

}  // namespace tfwave
