#pragma once

#include "records/expectation.hpp"
#include "records/generators.hpp"
#include "records/ledger.hpp"
#include "records/sampler.hpp"

#include "json.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace records::io {

using Json = nlohmann::ordered_json;

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

// record_index, c1..cd, records_broken, rho_after, gamma_after, rejections
void write_record_stream_csv(std::ostream& out, std::size_t dim, std::span<const HistoryEntry> entries);

Json ledger_to_json(const RunLedger& ledger);
RunLedger ledger_from_json(const Json& j);

// {dim, gamma, generators: [[coords]...]}
Json snapshot_to_json(const GeneratorSet& g);
GeneratorSet snapshot_from_json(const Json& j);

// {dim, records: [[coords]...]}; used to replay oracle mismatches.
Json instance_to_json(std::size_t dim, std::span<const Point> records);
std::vector<Point> instance_from_json(const Json& j, std::size_t& dim);

struct Table1Row {
    std::size_t k = 0;
    std::size_t count = 0;  // N_k
    double proportion = 0;  // N_k / m
};

struct Table1Summary {
    std::size_t records = 0; // m
    std::vector<Table1Row> rows; // k = 0 .. max observed k, zero rows included
};

Table1Summary table1_summary(std::span<const HistoryEntry> entries);

// k, N_k, p_tilde_k
void write_table1_csv(std::ostream& out, const Table1Summary& summary);

// d, n, I_exact, G_exact, I_poissonized, G_asymptotic, abs_gap; columns that
// were not requested are left empty.
void write_expectation_csv(std::ostream& out, const ExpectationTable& table);

// Writes text to path, throwing std::runtime_error on failure.
void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

// Sidecar path for an output file.
inline std::string ledger_path(const std::string& output) { return output + ".ledger.json"; }

} // namespace records::io
