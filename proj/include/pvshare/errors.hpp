#pragma once

#include <stdexcept>
#include <string>

namespace pvshare {

// Malformed input text: config files, profile CSV, telemetry CSV.
// The message always starts with "line N: ".
class ParseError : public std::runtime_error {
public:
    ParseError(long line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

// Filesystem-level failure: unreadable config, unwritable output.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A simulation step aborted; the message names the step index.
class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pvshare
