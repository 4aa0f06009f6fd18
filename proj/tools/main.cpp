#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "kvalent/bfile.hpp"
#include "kvalent/enumerator.hpp"
#include "kvalent/oracle.hpp"
#include "kvalent/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

kvalent::SeriesSelector selector_from_name(const std::string& name) {
    if (name == "centered") return kvalent::SeriesSelector::Centered;
    if (name == "bicentered") return kvalent::SeriesSelector::Bicentered;
    if (name == "total") return kvalent::SeriesSelector::Total;
    return kvalent::SeriesSelector::All;
}

bool verify_against_oracle(const kvalent::CensusTable& table, int verify_to,
                           bool check_breakdown) {
    bool ok = true;
    for (int n = 1; n <= verify_to; ++n) {
        const kvalent::OracleCensus oracle = kvalent::oracle_census(n, table.k);
        const kvalent::CensusRow& row = table.rows[static_cast<std::size_t>(n - 1)];
        bool row_ok = oracle.centered == row.centered &&
                      oracle.bicentered == row.bicentered;
        if (check_breakdown &&
            oracle.per_diameter != table.by_diameter[static_cast<std::size_t>(n - 1)])
            row_ok = false;
        if (row_ok) {
            std::cout << "verify n=" << n << " PASS\n";
        } else {
            std::cout << "verify n=" << n << " FAIL: oracle ("
                      << oracle.centered.get_str() << ", "
                      << oracle.bicentered.get_str() << ") vs census ("
                      << row.centered.get_str() << ", "
                      << row.bicentered.get_str() << ")\n";
            ok = false;
        }
    }
    return ok;
}

bool compare_against_bfile(const kvalent::BFile& computed,
                           const kvalent::BFile& reference) {
    bool ok = true;
    for (const auto& entry : reference.entries) {
        const kvalent::BFileEntry* mine = nullptr;
        for (const auto& e : computed.entries)
            if (e.index == entry.index) {
                mine = &e;
                break;
            }
        if (mine == nullptr) {
            std::cout << "compare index " << entry.index
                      << " MISMATCH: no computed value\n";
            ok = false;
        } else if (mine->value != entry.value) {
            std::cout << "compare index " << entry.index << " MISMATCH: computed "
                      << mine->value.get_str() << ", reference "
                      << entry.value.get_str() << "\n";
            ok = false;
        } else {
            std::cout << "compare index " << entry.index << " MATCH\n";
        }
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact census of k-valent unlabeled trees (alkanes for k=4), "
                 "split into centered and bicentered counts"};

    int k = 4;
    int max_n = 22;
    std::string series = "all";
    std::string format = "table";
    long long offset = 1;
    bool breakdown = false;
    std::optional<int> verify_to;
    std::optional<std::string> compare_path;

    app.add_option("--k", k, "Valency bound (maximum node degree), >= 2");
    app.add_option("--max-n", max_n, "Largest node count to tabulate")
        ->check(CLI::PositiveNumber);
    app.add_option("--series", series, "Which sequence to emit")
        ->check(CLI::IsMember({"centered", "bicentered", "total", "all"}));
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));
    app.add_option("--offset", offset, "Starting index for b-file output");
    app.add_flag("--breakdown", breakdown, "Add per-diameter columns");
    app.add_option("--verify-oracle", verify_to,
                   "Cross-check rows n <= this against the brute-force generator");
    app.add_option("--compare", compare_path,
                   "Compare the selected series against a reference b-file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (k < 2) {
        std::cerr << "error: --k must be at least 2\n";
        return kExitUsage;
    }
    const kvalent::SeriesSelector sel = selector_from_name(series);
    if (format == "bfile" && sel == kvalent::SeriesSelector::All) {
        std::cerr << "error: --format bfile carries a single sequence; pick "
                     "--series centered|bicentered|total\n";
        return kExitUsage;
    }
    if (compare_path && sel == kvalent::SeriesSelector::All) {
        std::cerr << "error: --compare needs a single sequence; pick "
                     "--series centered|bicentered|total\n";
        return kExitUsage;
    }
    if (verify_to) {
        if (*verify_to < 1 || *verify_to > max_n) {
            std::cerr << "error: --verify-oracle must be in [1, max-n]\n";
            return kExitUsage;
        }
        if (*verify_to > kvalent::kOracleNodeLimit) {
            std::cerr << "error: --verify-oracle is limited to n <= "
                      << kvalent::kOracleNodeLimit << "\n";
            return kExitUsage;
        }
    }

    const bool need_breakdown = breakdown || verify_to.has_value();
    const kvalent::CensusTable table = kvalent::census(k, max_n, need_breakdown);
    kvalent::CensusTable rendered = table;
    rendered.has_breakdown = breakdown;
    if (!breakdown) rendered.by_diameter.clear();

    if (format == "table")
        std::cout << kvalent::render_table(rendered);
    else if (format == "csv")
        std::cout << kvalent::render_csv(rendered);
    else if (format == "json")
        std::cout << kvalent::render_json(rendered);
    else
        std::cout << kvalent::render_bfile(kvalent::census_bfile(rendered, sel, offset));

    bool all_ok = true;
    if (verify_to) all_ok &= verify_against_oracle(table, *verify_to, true);

    if (compare_path) {
        std::ifstream in(*compare_path);
        if (!in) {
            std::cerr << "error: cannot read " << *compare_path << "\n";
            return kExitIo;
        }
        kvalent::BFile reference;
        try {
            reference = kvalent::parse_bfile(in);
        } catch (const std::exception& e) {
            std::cerr << "error: " << *compare_path << ": " << e.what() << "\n";
            return kExitIo;
        }
        all_ok &= compare_against_bfile(kvalent::census_bfile(table, sel, offset),
                                        reference);
    }

    return all_ok ? kExitOk : kExitMismatch;
}
