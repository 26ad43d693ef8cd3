#include "records/io.hpp"

#include "records/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace records::io {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_record_stream_csv(std::ostream& out, std::size_t dim, std::span<const HistoryEntry> entries)
{
    out << "record_index";
    for (std::size_t j = 1; j <= dim; ++j) out << ",c" << j;
    out << ",records_broken,rho_after,gamma_after,rejections\r\n";
    std::size_t index = 0;
    for (const auto& e : entries) {
        out << ++index;
        for (Coord c : e.record.coords()) out << ',' << format_double(c.value());
        out << ',' << e.update.records_broken << ',' << e.rho_after << ',' << e.gamma_after << ','
            << e.rejections << "\r\n";
    }
}

Json ledger_to_json(const RunLedger& ledger)
{
    Json j;
    j["format_version"] = ledger.format_version;
    j["command"] = ledger.command;
    j["dim"] = ledger.dim;
    j["target_records"] = ledger.target_records;
    j["seed"] = ledger.seed;
    j["variant"] = ledger.variant;
    j["timestamp"] = ledger.timestamp;
    j["software_version"] = ledger.software_version;
    return j;
}

RunLedger ledger_from_json(const Json& j)
{
    RunLedger l;
    l.format_version = j.at("format_version").get<std::string>();
    l.command = j.at("command").get<std::string>();
    l.dim = j.at("dim").get<std::size_t>();
    l.target_records = j.at("target_records").get<std::size_t>();
    l.seed = j.at("seed").get<std::uint64_t>();
    l.variant = j.at("variant").get<std::string>();
    l.timestamp = j.at("timestamp").get<std::string>();
    l.software_version = j.at("software_version").get<std::string>();
    return l;
}

namespace {

// Coordinates as plain numbers, plus their complements 1 - x so that values
// closer to 1 than a double can resolve survive a round trip.
void points_to_json(Json& j, const std::string& key, std::span<const Point> points)
{
    Json values = Json::array(), complements = Json::array();
    for (const auto& p : points) {
        values.push_back(p.values());
        std::vector<double> c;
        for (Coord x : p.coords()) c.push_back(x.complement());
        complements.push_back(std::move(c));
    }
    j[key] = std::move(values);
    j[key + "_complements"] = std::move(complements);
}

std::vector<Point> points_from_json(const Json& j, const std::string& key, std::size_t dim)
{
    const auto& values = j.at(key);
    const auto complements = j.find(key + "_complements");
    const bool exact = complements != j.end();
    if (exact && complements->size() != values.size()) throw UsageError("complement list length mismatch");
    std::vector<Point> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto coords = values[i].get<std::vector<double>>();
        const auto comp = exact ? (*complements)[i].get<std::vector<double>>() : std::vector<double>{};
        if (coords.size() != dim || (exact && comp.size() != dim)) {
            throw UsageError("point has wrong dimension in JSON input");
        }
        std::vector<Coord> c(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            if (exact && comp[k] > 0.0 && comp[k] <= 0.5) {
                c[k] = Coord::from_complement(comp[k]);
            } else if (coords[k] >= 0.0 && coords[k] < 1.0) {
                c[k] = Coord(coords[k]);
            } else {
                throw UsageError("point coordinate " + format_double(coords[k]) + " outside [0,1)");
            }
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

} // namespace

Json snapshot_to_json(const GeneratorSet& g)
{
    Json j;
    j["dim"] = g.dim();
    j["gamma"] = g.size();
    points_to_json(j, "generators", g.items());
    return j;
}

GeneratorSet snapshot_from_json(const Json& j)
{
    const auto dim = j.at("dim").get<std::size_t>();
    auto items = points_from_json(j, "generators", dim);
    if (items.size() != j.at("gamma").get<std::size_t>()) throw UsageError("snapshot gamma does not match");
    return GeneratorSet::from_items(dim, std::move(items));
}

Json instance_to_json(std::size_t dim, std::span<const Point> records)
{
    Json j;
    j["dim"] = dim;
    points_to_json(j, "records", records);
    return j;
}

std::vector<Point> instance_from_json(const Json& j, std::size_t& dim)
{
    dim = j.at("dim").get<std::size_t>();
    return points_from_json(j, "records", dim);
}

Table1Summary table1_summary(std::span<const HistoryEntry> entries)
{
    Table1Summary s;
    s.records = entries.size();
    for (const auto& e : entries) {
        const std::size_t k = e.update.records_broken;
        if (s.rows.size() <= k) s.rows.resize(k + 1);
        ++s.rows[k].count;
    }
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
        s.rows[k].k = k;
        s.rows[k].proportion = static_cast<double>(s.rows[k].count) / static_cast<double>(s.records);
    }
    return s;
}

void write_table1_csv(std::ostream& out, const Table1Summary& summary)
{
    out << "k,N_k,p_tilde_k\r\n";
    for (const auto& row : summary.rows) {
        out << row.k << ',' << row.count << ',' << format_double(row.proportion) << "\r\n";
    }
}

void write_expectation_csv(std::ostream& out, const ExpectationTable& table)
{
    out << "d,n,I_exact,G_exact,I_poissonized,G_asymptotic,abs_gap\r\n";
    for (const auto& row : table.rows) {
        out << table.dim << ',' << row.n << ',' << format_double(row.interior_exact) << ','
            << format_double(row.generators_exact) << ',';
        if (row.interior_poissonized) out << format_double(*row.interior_poissonized);
        out << ',';
        if (row.generators_asymptotic) {
            out << format_double(*row.generators_asymptotic) << ','
                << format_double(std::abs(row.generators_exact - *row.generators_asymptotic));
        } else {
            out << ',';
        }
        out << "\r\n";
    }
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << contents;
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace records::io
