#include "cli.hpp"

#include "sytstrip/enumerate.hpp"
#include "sytstrip/errors.hpp"
#include "sytstrip/formulas.hpp"
#include "sytstrip/suites.hpp"
#include "sytstrip/symbolic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace sytstrip::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

struct RunConfig {
    std::string command;
    std::string shape;
    std::string method = "dp";
    std::string suite;
    std::string family;
    Format format = Format::Plain;
    long max_rows = 6;
    long max_width = 6;
    std::optional<long> limit;
    long count = 10;
    int hardin_width = 5;
    std::uint64_t seed = 20240601;
    std::uint64_t samples = 1'000'000;
    long max_cells = 400;
    long backtrack_cells = 25;
    long matrix_cells = 12;
    bool timing = true;

    CountLimits limits() const {
        CountLimits l;
        l.backtrack_max_cells = static_cast<std::size_t>(backtrack_cells);
        l.matrix_max_cells = static_cast<std::size_t>(matrix_cells);
        return l;
    }
};

long default_cell_budget(std::ostream& err) {
    if (const char* env = std::getenv(kCellBudgetEnv)) {
        try {
            const long v = std::stol(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        err << "warning: ignoring invalid " << kCellBudgetEnv << "='" << env << "'\n";
    }
    return 400;
}

void require_dp_budget(long cells, const RunConfig& config) {
    if (cells > config.max_cells) {
        throw BudgetExceeded("shape has " + std::to_string(cells) + " cells, cell budget is " +
                             std::to_string(config.max_cells));
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// ---- count ----------------------------------------------------------------

BigCount count_strip_formula(const StripSpec& spec) {
    if (auto v = closed_form(spec)) return *v;
    if (spec.width == 5) return theorem3_seq(static_cast<unsigned>(spec.rows));
    if (spec.rows == 3) return g3_by_theorem1(static_cast<unsigned>(spec.width));
    throw std::invalid_argument("no closed form or recurrence covers " + to_string(ShapeSpec(spec)));
}

BigCount count_strip_symbolic(const StripSpec& spec) {
    if (spec.rows == 1 || spec.width == 1) return 1;
    if (spec.width == 4) return width4_count(static_cast<unsigned>(spec.rows));
    if (spec.width == 5) return width5_count(static_cast<unsigned>(spec.rows));
    if (spec.rows == 3) return g3_via_integration(static_cast<unsigned>(spec.width));
    throw std::invalid_argument("no symbolic integration route covers " + to_string(ShapeSpec(spec)) +
                                " (supported: 3 rows, width 4, width 5)");
}

BigCount dispatch_count(const ShapeSpec& shape, const RunConfig& config) {
    const auto* strip = std::get_if<StripSpec>(&shape);
    const auto limits = config.limits();
    if (config.method == "dp") {
        const CellPoset poset = build_poset(shape);
        require_dp_budget(static_cast<long>(poset.size()), config);
        return count_ideal_dp(poset, limits);
    }
    if (config.method == "backtrack") return count_backtrack(build_poset(shape), limits);
    if (config.method == "matrix") {
        if (!strip) throw std::invalid_argument("the matrix model applies to strips only");
        return count_matrix_model(*strip, limits);
    }
    if (config.method == "formula") {
        if (strip) return count_strip_formula(*strip);
        return product_formula(std::get<StrictPartition>(shape));
    }
    if (config.method == "symbolic") {
        if (!strip) throw std::invalid_argument("symbolic integration applies to strips only");
        return count_strip_symbolic(*strip);
    }
    throw std::invalid_argument("unknown method '" + config.method + "'");
}

int run_count(const RunConfig& config, std::ostream& out) {
    const ShapeSpec shape = parse_shape(config.shape);
    const auto start = std::chrono::steady_clock::now();
    const BigCount count = dispatch_count(shape, config);
    const double elapsed =
        config.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() : 0.0;
    const std::string shape_text = to_string(shape);
    switch (config.format) {
        case Format::Plain:
            out << count.get_str() << '\n';
            break;
        case Format::Csv:
            out << "shape,method,count\n" << shape_text << ',' << config.method << ',' << count.get_str() << '\n';
            break;
        case Format::Json: {
            ordered_json j;
            j["shape"] = shape_text;
            j["method"] = config.method;
            j["count"] = count.get_str();
            j["elapsed_ms"] = elapsed;
            out << j.dump() << '\n';
            break;
        }
    }
    return kSuccess;
}

// ---- table ----------------------------------------------------------------

int run_table(const RunConfig& config, std::ostream& out) {
    if (config.max_rows < 1 || config.max_width < 1) throw std::invalid_argument("--max-rows and --max-width must be >= 1");
    struct Entry {
        long rows, width;
        std::optional<BigCount> count;
    };
    std::vector<Entry> entries;
    for (long r = 1; r <= config.max_rows; ++r) {
        for (long w = 1; w <= config.max_width; ++w) {
            Entry e{r, w, std::nullopt};
            if (r * w <= config.max_cells) {
                e.count = count_ideal_dp(build_strip({static_cast<int>(r), static_cast<int>(w)}), config.limits());
            }
            entries.push_back(std::move(e));
        }
    }
    constexpr const char* kMarker = "budget_exceeded";
    switch (config.format) {
        case Format::Csv:
            out << "rows,width,count\n";
            for (const auto& e : entries) {
                out << e.rows << ',' << e.width << ',' << (e.count ? e.count->get_str() : kMarker) << '\n';
            }
            break;
        case Format::Json: {
            ordered_json cells = ordered_json::array();
            for (const auto& e : entries) {
                ordered_json j;
                j["rows"] = e.rows;
                j["width"] = e.width;
                if (e.count) {
                    j["count"] = e.count->get_str();
                } else {
                    j["count"] = nullptr;
                    j["status"] = kMarker;
                }
                cells.push_back(std::move(j));
            }
            ordered_json j;
            j["max_rows"] = config.max_rows;
            j["max_width"] = config.max_width;
            j["cells"] = std::move(cells);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Plain: {
            // one line per row count, widths across
            out << "rows\\width";
            for (long w = 1; w <= config.max_width; ++w) out << ' ' << w;
            out << '\n';
            for (long r = 1; r <= config.max_rows; ++r) {
                out << r;
                for (long w = 1; w <= config.max_width; ++w) {
                    const auto& e = entries[static_cast<std::size_t>((r - 1) * config.max_width + (w - 1))];
                    out << ' ' << (e.count ? e.count->get_str() : std::string(kMarker));
                }
                out << '\n';
            }
            break;
        }
    }
    return kSuccess;
}

// ---- verify ---------------------------------------------------------------

void print_report(const std::string& suite, const SequenceReport& report, Format format, std::ostream& out) {
    switch (format) {
        case Format::Plain:
            out << "suite " << suite << " (" << report.family << "): " << (report.verdict() ? "PASS" : "FAIL") << ", "
                << report.rows.size() << " checks";
            for (const auto& tag : report.tags) out << " [" << tag << "]";
            out << '\n';
            for (const auto& row : report.rows) {
                out << row.index << ' ' << (row.pass ? "ok  " : "FAIL") << " expected=" << row.expected
                    << " actual=" << row.actual;
                if (!row.note.empty()) out << "  # " << row.note;
                out << '\n';
            }
            break;
        case Format::Csv:
            out << "index,expected,actual,pass,note\n";
            for (const auto& row : report.rows) {
                out << row.index << ',' << csv_escape(row.expected) << ',' << csv_escape(row.actual) << ','
                    << (row.pass ? "true" : "false") << ',' << csv_escape(row.note) << '\n';
            }
            break;
        case Format::Json: {
            ordered_json rows = ordered_json::array();
            for (const auto& row : report.rows) {
                ordered_json j;
                j["index"] = row.index;
                j["expected"] = row.expected;
                j["actual"] = row.actual;
                j["pass"] = row.pass;
                j["note"] = row.note;
                rows.push_back(std::move(j));
            }
            ordered_json j;
            j["suite"] = suite;
            j["family"] = report.family;
            j["first_index"] = report.first_index;
            j["last_index"] = report.last_index;
            j["verdict"] = report.verdict();
            j["tags"] = report.tags;
            j["rows"] = std::move(rows);
            out << j.dump(2) << '\n';
            break;
        }
    }
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
        throw std::invalid_argument("unknown suite '" + config.suite + "'");
    }
    SuiteOptions options;
    options.limit = config.limit;
    options.hardin_width = config.hardin_width;
    options.samples = config.samples;
    options.seed = config.seed;
    options.limits = config.limits();
    const SequenceReport report = run_suite(config.suite, options);
    print_report(config.suite, report, config.format, out);
    if (const ReportRow* bad = report.first_failure()) {
        err << "verify " << config.suite << ": first failure at index " << bad->index << " (" << bad->note
            << "): expected " << bad->expected << ", got " << bad->actual << '\n';
        for (const auto& tag : report.tags) err << "verify " << config.suite << ": " << tag << '\n';
        return kVerificationFailed;
    }
    return kSuccess;
}

// ---- sequence -------------------------------------------------------------

int run_sequence(const RunConfig& config, std::ostream& out) {
    if (config.count < 1) throw std::invalid_argument("--count must be >= 1");
    std::vector<BigCount> values;
    const auto& f = config.family;
    const long count = config.count;
    if (f == "g2n") {
        for (long n = 1; n <= count; ++n) values.push_back(catalan(static_cast<unsigned>(n - 1)));
    } else if (f == "g3n") {
        BigCount g = 1;
        values.push_back(g);
        for (long n = 1; n < count; ++n) values.push_back(g = theorem1_step(static_cast<unsigned>(n), g));
    } else if (f == "gn4") {
        for (long n = 1; n <= count; ++n) values.push_back(pell(static_cast<unsigned>(2 * n - 1)));
    } else if (f == "gn5") {
        for (long n = 1; n <= count; ++n) {
            if (n <= 3) {
                values.push_back(theorem3_seq(static_cast<unsigned>(n)));
            } else {
                const std::size_t k = values.size();
                values.push_back(24 * values[k - 1] - 40 * values[k - 2] - 8 * values[k - 3]);
            }
        }
    } else if (f == "gn6" || f == "gn7") {
        const int width = f == "gn6" ? 6 : 7;
        require_dp_budget(count * width, config);
        for (long n = 1; n <= count; ++n) values.push_back(count_ideal_dp(build_strip({static_cast<int>(n), width})));
    } else {
        throw std::invalid_argument("unknown family '" + f + "' (expected g2n, g3n, gn4, gn5, gn6, gn7)");
    }
    switch (config.format) {
        case Format::Plain:
            for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ' ' << values[i].get_str() << '\n';
            break;
        case Format::Csv:
            out << "n,value\n";
            for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ',' << values[i].get_str() << '\n';
            break;
        case Format::Json: {
            ordered_json j;
            j["family"] = f;
            j["offset"] = 1;
            ordered_json arr = ordered_json::array();
            for (const auto& v : values) arr.push_back(v.get_str());
            j["values"] = std::move(arr);
            out << j.dump() << '\n';
            break;
        }
    }
    return kSuccess;
}

void add_format(CLI::App* cmd, Format& format) {
    const std::map<std::string, Format> formats{{"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
    cmd->add_option("--format", format, "Output format: plain, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_budget(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--max-cells", config.max_cells, "Cell budget for DP-backed work (env SYTSTRIP_CELL_BUDGET)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    config.max_cells = default_cell_budget(err);

    CLI::App app{"Counts standard Young tableaux of truncated shifted strips and checks the known formulas."};
    app.require_subcommand(1);

    auto* count = app.add_subcommand("count", "Exact tableau count of one shape");
    count->add_option("--shape", config.shape, "strip:RxW or shifted:l1,l2,...")->required();
    count->add_option("--method", config.method, "dp, backtrack, matrix, formula or symbolic")
        ->check(CLI::IsMember({"dp", "backtrack", "matrix", "formula", "symbolic"}));
    count->add_option("--backtrack-cells", config.backtrack_cells, "Cell cap for backtracking")->check(CLI::PositiveNumber);
    count->add_option("--matrix-cells", config.matrix_cells, "Cell cap for the matrix model")->check(CLI::PositiveNumber);
    count->add_flag("!--no-timing", config.timing, "Report elapsed_ms as 0 (byte-identical JSON)");
    add_format(count, config.format);
    add_budget(count, config);

    auto* table = app.add_subcommand("table", "Table of g(rows, width) computed by the ideal DP");
    table->add_option("--max-rows", config.max_rows, "Largest row count")->required();
    table->add_option("--max-width", config.max_width, "Largest width")->required();
    add_format(table, config.format);
    add_budget(table, config);

    auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 on any failed check");
    verify->add_option("--suite", config.suite, "oracle, pell, theorem1, theorem3, hardin, lemma1, theorem2, width5, "
                                                "identities, product-formula or montecarlo")
        ->required();
    verify->add_option("--limit", config.limit, "Largest index (or cell count) to check");
    verify->add_option("--k", config.hardin_width, "Width for the hardin suite (4..7)")->check(CLI::Range(4, 7));
    verify->add_option("--samples", config.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "Monte Carlo seed");
    verify->add_option("--backtrack-cells", config.backtrack_cells, "Cell cap for backtracking")->check(CLI::PositiveNumber);
    add_format(verify, config.format);

    auto* sequence = app.add_subcommand("sequence", "Export a sequence as `n a(n)` lines, starting at n = 1");
    sequence->add_option("--family", config.family, "g2n, g3n, gn4, gn5, gn6 or gn7")->required();
    sequence->add_option("--count", config.count, "Number of terms")->required();
    add_format(sequence, config.format);
    add_budget(sequence, config);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("sytstrip");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (count->parsed()) return run_count(config, out);
        if (table->parsed()) return run_table(config, out);
        if (verify->parsed()) return run_verify(config, out, err);
        if (sequence->parsed()) return run_sequence(config, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ExactnessError& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kVerificationFailed;
    }
    err << "error: no command given\n";
    return kUsageError;
}

}  // namespace sytstrip::cli
