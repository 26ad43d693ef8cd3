#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace records {

inline constexpr const char* format_version = "1";
inline constexpr const char* software_version = "0.1.0";

// Reproducibility metadata written next to every output file.
struct RunLedger {
    std::string format_version = records::format_version;
    std::string command;
    std::size_t dim = 0;
    std::size_t target_records = 0;
    std::uint64_t seed = 0;
    std::string variant = "none";
    std::string timestamp; // UTC ISO-8601, stamped when written
    std::string software_version = records::software_version;

    friend bool operator==(const RunLedger&, const RunLedger&) = default;
};

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

} // namespace records
