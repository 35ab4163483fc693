#pragma once

#include <filesystem>
#include <string_view>

#include "pvshare/sim.hpp"

namespace pvshare {

// The configuration every key falls back to: 12 V / 200 Ah batteries starting
// at 90 % and 75 % SOC, the bundled load banks and measurement profile,
// threshold 50 %, no hysteresis, dt 60 s, 6 h starting at 09:00.
SystemConfig default_config();

// Parses the flat `section.key = value` config format ('#' comment lines,
// blank lines ignored). Unknown keys, type mismatches, duplicate keys, and
// invariant violations raise ParseError naming the key and line. Profile
// paths are resolved against base_dir; unreadable files raise IoError.
SystemConfig parse_config(std::string_view text,
                          const std::filesystem::path& base_dir = ".");

// Reads and parses a config file; profile paths resolve against its directory.
SystemConfig load_config_file(const std::filesystem::path& path);

} // namespace pvshare
