#include "records/cli.hpp"

#include "records/bounds.hpp"
#include "records/errors.hpp"
#include "records/expectation.hpp"
#include "records/generators.hpp"
#include "records/io.hpp"
#include "records/oracle.hpp"
#include "records/sampler.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace records::cli {

namespace {

struct SimulateOptions {
    std::size_t dim = 0;
    std::size_t records = 0;
    std::uint64_t seed = 0;
    std::string variant = "efficient";
    std::string out;
    std::string snapshot;
};

struct Table1Options {
    std::size_t dim = 0;
    std::size_t records = 0;
    std::uint64_t seed = 0;
    std::string variant = "efficient";
    std::string out;
    std::string series;
    std::size_t series_every = 1000;
};

struct ExpectedOptions {
    std::size_t dim = 0;
    std::vector<std::uint64_t> ns;
    bool asymptotic = false;
    bool poissonized = false;
    std::string out;
};

struct BoundsOptions {
    std::size_t dim = 0;
    std::size_t rho = 0;
    bool census = false;
    bool witness = false;
};

struct OracleOptions {
    std::size_t dim = 0;
    std::size_t rho = 0;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    bool example = false;
    std::string instance;
    std::string failure_out;
};

RunLedger stamped(RunLedger ledger)
{
    ledger.timestamp = utc_timestamp();
    return ledger;
}

// Writes `contents` to `path` together with its ledger sidecar.
void write_with_ledger(const std::string& path, const std::string& contents, const RunLedger& ledger)
{
    io::write_file(path, contents);
    io::write_file(io::ledger_path(path), io::ledger_to_json(stamped(ledger)).dump(2) + "\n");
}

std::string set_to_string(const std::set<std::uint64_t>& s)
{
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += std::to_string(*it);
    }
    return out + "}";
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err)
{
    const auto variant = parse_variant(opt.variant);
    const auto stream = run_simulation(opt.dim, opt.records, opt.seed, variant);

    std::ostringstream csv;
    io::write_record_stream_csv(csv, opt.dim, stream.entries);
    std::ostream& summary = opt.out.empty() ? err : out;
    if (opt.out.empty()) {
        out << csv.str();
    } else {
        write_with_ledger(opt.out, csv.str(), stream.ledger);
    }
    if (!opt.snapshot.empty()) {
        auto ledger = stream.ledger;
        ledger.command = "simulate-snapshot";
        write_with_ledger(opt.snapshot, io::snapshot_to_json(stream.final_generators).dump(2) + "\n", ledger);
    }

    double rejections = 0.0;
    std::size_t zero_kills = 0;
    double max_ratio = 0.0;
    for (const auto& e : stream.entries) {
        rejections += static_cast<double>(e.rejections);
        if (e.update.records_broken == 0) ++zero_kills;
        max_ratio = std::max(max_ratio, static_cast<double>(e.gamma_after) / static_cast<double>(e.rho_after));
    }
    const double m = static_cast<double>(stream.entries.size());
    summary << "dim=" << opt.dim << " records=" << opt.records << " seed=" << opt.seed
            << " variant=" << opt.variant << "\n";
    summary << "rho=" << stream.final_records.size() << " gamma=" << stream.final_generators.size()
            << " mean_rejections=" << io::format_double(m > 0 ? rejections / m : 0.0)
            << " zero_kill_fraction=" << io::format_double(m > 0 ? static_cast<double>(zero_kills) / m : 0.0)
            << " max_gamma_over_rho=" << io::format_double(max_ratio) << "\n";
    return exit_ok;
}

int cmd_table1(const Table1Options& opt, std::ostream& out, std::ostream& err)
{
    const auto variant = parse_variant(opt.variant);
    if (opt.series_every == 0) throw UsageError("--series-every must be positive");
    const auto stream = run_simulation(opt.dim, opt.records, opt.seed, variant);
    const auto summary = io::table1_summary(stream.entries);

    std::ostringstream csv;
    io::write_table1_csv(csv, summary);
    auto ledger = stream.ledger;
    ledger.command = "table1";
    if (opt.out.empty()) {
        out << csv.str();
    } else {
        write_with_ledger(opt.out, csv.str(), ledger);
    }

    if (!opt.series.empty()) {
        std::ostringstream series;
        series << "m,f_dm\r\n";
        std::size_t zero = 0;
        for (std::size_t i = 0; i < stream.entries.size(); ++i) {
            if (stream.entries[i].update.records_broken == 0) ++zero;
            if ((i + 1) % opt.series_every == 0 || i + 1 == stream.entries.size()) {
                series << (i + 1) << ',' << io::format_double(static_cast<double>(zero) / static_cast<double>(i + 1))
                       << "\r\n";
            }
        }
        ledger.command = "table1-series";
        write_with_ledger(opt.series, series.str(), ledger);
    }

    std::ostream& info = opt.out.empty() ? err : out;
    const double f = summary.rows.empty() ? 0.0 : summary.rows.front().proportion;
    info << "dim=" << opt.dim << " records=" << opt.records << " seed=" << opt.seed
         << " f_dm=" << io::format_double(f) << "\n";
    return exit_ok;
}

int cmd_expected(const ExpectedOptions& opt, std::ostream& out, std::ostream&)
{
    const auto table = expectation_table(opt.dim, opt.ns, opt.poissonized, opt.asymptotic);
    std::ostringstream csv;
    io::write_expectation_csv(csv, table);
    if (opt.out.empty()) {
        out << csv.str();
    } else {
        RunLedger ledger;
        ledger.command = "expected";
        ledger.dim = opt.dim;
        write_with_ledger(opt.out, csv.str(), ledger);
        out << "wrote " << table.rows.size() << " rows to " << opt.out << "\n";
    }
    return exit_ok;
}

int cmd_bounds_check(const BoundsOptions& opt, std::ostream& out, std::ostream& err)
{
    const auto b = bounds(opt.rho, opt.dim);
    out << "d=" << opt.dim << " rho=" << opt.rho << " lower=" << b.lower << " upper=" << b.upper << "\n";
    int status = exit_ok;

    if (opt.witness) {
        const auto witness = lower_bound_witness(opt.dim, opt.rho);
        GeneratorSet naive(opt.dim), efficient(opt.dim);
        for (std::size_t i = 0; i < witness.size(); ++i) {
            naive = update_naive(naive, witness[i]).generators;
            efficient = update_efficient(efficient, witness[i]).generators;
            const auto expected = bounds(i + 1, opt.dim).lower;
            if (naive.size() != expected || efficient.size() != expected || !oracle::same_set(naive, efficient)) {
                err << "witness mismatch after " << (i + 1) << " records: naive gamma=" << naive.size()
                    << " efficient gamma=" << efficient.size() << " expected " << expected << "\n";
                return exit_failure;
            }
        }
        std::map<std::size_t, std::size_t> by_dimension;
        for (const auto& g : efficient.items()) {
            ++by_dimension[static_cast<std::size_t>(std::count_if(g.coords().begin(), g.coords().end(),
                                                                  [](Coord c) { return !c.is_zero(); }))];
        }
        out << "witness gamma=" << efficient.size() << " (lower bound " << b.lower << ") confirmed;";
        for (const auto& [k, count] : by_dimension) out << " dim" << k << "=" << count;
        out << "\n";
    }

    if (opt.census) {
        const auto brute = census_two_records(opt.dim);
        const auto formula = attainable_gammas_two_records(opt.dim);
        out << "rho=2 census d=" << opt.dim << ": brute-force " << set_to_string(brute) << " formula "
            << set_to_string(formula) << "\n";
        if (brute != formula) {
            err << "census mismatch\n";
            status = exit_failure;
        }
    }
    return status;
}

std::vector<Point> example_records()
{
    return {Point{0.2, 0.8, 0.3, 0.7}, Point{0.5, 0.1, 0.4, 0.6}};
}

struct Comparison {
    bool ok = true;
    std::size_t gamma = 0;
    std::string detail;
};

Comparison compare_all(std::size_t dim, std::span<const Point> sequence)
{
    GeneratorSet naive(dim), efficient(dim);
    std::optional<BivariateFrontier> frontier;
    if (dim == 2) frontier.emplace();
    for (const auto& r : sequence) {
        naive = update_naive(naive, r).generators;
        efficient = update_efficient(efficient, r).generators;
        if (frontier) *frontier = update_bivariate(*frontier, r);
    }
    const auto current = oracle::current_records(sequence);
    const auto partitions = oracle::generators_via_partitions(dim, current);
    const auto projection = oracle::generators_via_projection(dim, current);

    Comparison c;
    c.gamma = efficient.size();
    auto check = [&](const GeneratorSet& g, const char* name) {
        if (!oracle::same_set(g, naive)) {
            c.ok = false;
            c.detail += std::string(name) + " (gamma=" + std::to_string(g.size()) + ") differs from naive (gamma=" +
                        std::to_string(naive.size()) + "); ";
        }
    };
    check(efficient, "efficient");
    check(partitions, "partitions");
    check(projection, "projection");
    if (frontier) check(frontier->generator_set(), "bivariate");
    return c;
}

int report_mismatch(const OracleOptions& opt, std::size_t dim, std::span<const Point> sequence,
                    const Comparison& c, std::ostream& err)
{
    const auto instance = io::instance_to_json(dim, sequence).dump() + "\n";
    err << "mismatch: " << c.detail << "\n";
    if (opt.failure_out.empty()) {
        err << "instance: " << instance;
    } else {
        io::write_file(opt.failure_out, instance);
        err << "instance written to " << opt.failure_out << "\n";
    }
    return exit_failure;
}

int cmd_oracle_compare(const OracleOptions& opt, std::ostream& out, std::ostream& err)
{
    if (opt.example || !opt.instance.empty()) {
        std::size_t dim = 4;
        std::vector<Point> sequence;
        if (opt.example) {
            sequence = example_records();
        } else {
            sequence = io::instance_from_json(io::Json::parse(io::read_file(opt.instance)), dim);
        }
        const auto c = compare_all(dim, sequence);
        if (!c.ok) return report_mismatch(opt, dim, sequence, c, err);
        out << "instance d=" << dim << " rho=" << oracle::current_records(sequence).size() << " gamma=" << c.gamma
            << ": all methods agree\n";
        return exit_ok;
    }

    if (opt.rho > 10) throw UsageError("--rho must be at most 10");
    if (opt.dim == 0) throw UsageError("--dim is required");
    std::size_t passed = 0;
    std::set<std::uint64_t> gammas;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        RandomSource rng(derive_seed(opt.seed, t));
        const auto sequence = oracle::random_record_sequence(opt.dim, opt.rho, rng);
        const auto c = compare_all(opt.dim, sequence);
        if (!c.ok) {
            out << "trials=" << opt.trials << " passed=" << passed << " failed=1 (stopped at trial " << t << ")\n";
            return report_mismatch(opt, opt.dim, sequence, c, err);
        }
        ++passed;
        gammas.insert(c.gamma);
    }
    out << "trials=" << opt.trials << " passed=" << passed << " failed=0 gammas=" << set_to_string(gammas) << "\n";
    return exit_ok;
}

std::vector<std::uint64_t> parse_n_list(const std::string& text)
{
    std::vector<std::uint64_t> ns;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("--n-list expects comma-separated non-negative integers, got '" + text + "'");
        }
        ns.push_back(std::stoull(item));
    }
    if (ns.empty()) throw UsageError("--n-list is empty");
    return ns;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Simulation and analysis of multivariate Pareto records", "records"};
    app.require_subcommand(1);

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Generate records by importance sampling");
    simulate->add_option("--dim", sim.dim, "Dimension d")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--records", sim.records, "Number of records m")->required();
    simulate->add_option("--seed", sim.seed, "Random seed")->required();
    simulate->add_option("--variant", sim.variant, "naive|efficient|bivariate")
        ->check(CLI::IsMember({"naive", "efficient", "bivariate"}));
    simulate->add_option("--out", sim.out, "CSV output path (stdout if omitted)");
    simulate->add_option("--snapshot", sim.snapshot, "Write final generator set as JSON");

    Table1Options t1;
    auto* table1 = app.add_subcommand("table1", "Distribution of the number of records broken");
    table1->add_option("--dim", t1.dim, "Dimension d")->required()->check(CLI::PositiveNumber);
    table1->add_option("--records", t1.records, "Number of records m")->required();
    table1->add_option("--seed", t1.seed, "Random seed")->required();
    table1->add_option("--variant", t1.variant, "naive|efficient|bivariate")
        ->check(CLI::IsMember({"naive", "efficient", "bivariate"}));
    table1->add_option("--out", t1.out, "CSV output path (stdout if omitted)");
    table1->add_option("--series", t1.series, "Write running zero-kill fraction to this CSV");
    table1->add_option("--series-every", t1.series_every, "Series checkpoint spacing");

    ExpectedOptions ex;
    std::string n_list;
    auto* expected = app.add_subcommand("expected", "Exact, Poissonized and asymptotic expected generator counts");
    expected->add_option("--dim", ex.dim, "Dimension d")->required()->check(CLI::PositiveNumber);
    expected->add_option("--n-list", n_list, "Comma-separated observation counts")->required();
    expected->add_flag("--asymptotic", ex.asymptotic, "Include the asymptotic expansion");
    expected->add_flag("--poissonized", ex.poissonized, "Include the Poissonized interior count");
    expected->add_option("--out", ex.out, "CSV output path (stdout if omitted)");

    BoundsOptions bo;
    auto* bounds_check = app.add_subcommand("bounds-check", "Deterministic generator-count bounds");
    bounds_check->add_option("--dim", bo.dim, "Dimension d")->required()->check(CLI::PositiveNumber);
    bounds_check->add_option("--rho", bo.rho, "Number of current records");
    bounds_check->add_flag("--census-rho2", bo.census, "Brute-force attainable counts for two records");
    bounds_check->add_flag("--witness", bo.witness, "Verify the lower-bound construction");

    OracleOptions oc;
    auto* oracle_compare = app.add_subcommand("oracle-compare", "Cross-check all generator computations");
    oracle_compare->add_option("--dim", oc.dim, "Dimension d")->check(CLI::PositiveNumber);
    oracle_compare->add_option("--rho", oc.rho, "Current records per instance (≤ 10)");
    oracle_compare->add_option("--trials", oc.trials, "Number of random instances");
    oracle_compare->add_option("--seed", oc.seed, "Random seed");
    oracle_compare->add_flag("--example", oc.example, "Run the fixed four-dimensional two-record instance");
    oracle_compare->add_option("--instance", oc.instance, "Replay an instance JSON file");
    oracle_compare->add_option("--failure-out", oc.failure_out, "Write a mismatching instance here");

    std::vector<const char*> argv;
    argv.push_back("records");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim, out, err);
        if (table1->parsed()) return cmd_table1(t1, out, err);
        if (expected->parsed()) {
            ex.ns = parse_n_list(n_list);
            return cmd_expected(ex, out, err);
        }
        if (bounds_check->parsed()) return cmd_bounds_check(bo, out, err);
        if (oracle_compare->parsed()) return cmd_oracle_compare(oc, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

} // namespace records::cli
