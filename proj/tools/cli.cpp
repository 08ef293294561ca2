#include "cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

namespace qcert::cli {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 5> kNames = {"e4", "e3", "e2", "e1", "e0"};

struct Token {
    std::string text;
    std::size_t offset = 0;
};

// "-1", "-.5", "-3/4" are coefficients, not options.
bool looks_numeric(const std::string& arg) {
    return arg.size() > 1 && arg[0] == '-' && (std::isdigit(static_cast<unsigned char>(arg[1])) || arg[1] == '.');
}

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> tokens;
    const std::size_t end = std::min(line.find('#'), line.size());
    std::size_t i = 0;
    while (i < end) {
        while (i < end && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back({line.substr(start, i - start), start});
        }
    }
    return tokens;
}

struct LineResult {
    std::size_t line = 0;
    json record;
    int exit_code = 0;
    bool parse_error = false;
    std::optional<Definiteness> verdict;
};

LineResult process_line(std::size_t number, const std::vector<Token>& tokens, const ReportOptions& options) {
    LineResult result;
    result.line = number;
    if (tokens.size() != kNames.size()) {
        result.parse_error = true;
        result.exit_code = exit_code::parse_error;
        result.record = {{"line", number},
                         {"error", "expected 5 coefficients, found " + std::to_string(tokens.size())},
                         {"position", tokens.size() > kNames.size() ? tokens[kNames.size()].offset : 0}};
        return result;
    }
    PlainQuartic form;
    std::array<Rational*, 5> slots = {&form.e4, &form.e3, &form.e2, &form.e1, &form.e0};
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        try {
            *slots[k] = Rational::parse(tokens[k].text);
        } catch (const ParseError& e) {
            result.parse_error = true;
            result.exit_code = exit_code::parse_error;
            result.record = {{"line", number},
                             {"error", std::string(kNames[k]) + ": " + e.what()},
                             {"position", tokens[k].offset + e.position()}};
            return result;
        }
    }
    Report report = build_report(form, options);
    result.record = json{{"line", number}};
    result.record.update(report.json);
    result.exit_code = report.exit_code;
    result.verdict = report.verdict;
    return result;
}

} // namespace

std::optional<PlainQuartic> parse_coefficients(const std::vector<std::string>& tokens, std::string& error) {
    if (tokens.size() != kNames.size()) {
        error = "expected 5 coefficients (e4 e3 e2 e1 e0), got " + std::to_string(tokens.size());
        return std::nullopt;
    }
    PlainQuartic form;
    std::array<Rational*, 5> slots = {&form.e4, &form.e3, &form.e2, &form.e1, &form.e0};
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        try {
            *slots[k] = Rational::parse(tokens[k]);
        } catch (const ParseError& e) {
            error = std::string("coefficient ") + kNames[k] + ": " + e.what() + "\n  " + tokens[k] + "\n  " +
                    std::string(e.position(), ' ') + "^";
            return std::nullopt;
        }
    }
    return form;
}

int run_batch(std::istream& in, std::ostream& out, const ReportOptions& options, unsigned threads) {
    std::vector<std::pair<std::size_t, std::vector<Token>>> jobs;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        auto tokens = split_line(line);
        if (!tokens.empty()) {
            jobs.emplace_back(number, std::move(tokens));
        }
    }

    std::vector<LineResult> results(jobs.size());
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < jobs.size(); i = next++) {
                    results[i] = process_line(jobs[i].first, jobs[i].second, options);
                }
            });
        }
    }

    std::map<std::string, int> counts;
    for (Definiteness cls : {Definiteness::positive_definite, Definiteness::positive_semidefinite,
                             Definiteness::indefinite, Definiteness::negative_definite,
                             Definiteness::negative_semidefinite, Definiteness::identically_zero}) {
        counts[std::string(to_string(cls))] = 0;
    }
    int parse_errors = 0;
    int disagreements = 0;
    for (const LineResult& r : results) {
        out << r.record.dump() << '\n';
        if (r.parse_error) {
            ++parse_errors;
        } else if (r.exit_code == exit_code::disagreement) {
            ++disagreements;
        }
        if (r.verdict) {
            ++counts[std::string(to_string(*r.verdict))];
        }
    }
    out << json{{"summary",
                 {{"forms", results.size()},
                  {"counts", counts},
                  {"parse_errors", parse_errors},
                  {"disagreements", disagreements}}}}
               .dump()
        << '\n';
    if (disagreements > 0) {
        return exit_code::disagreement;
    }
    return parse_errors > 0 ? exit_code::parse_error : 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    // CLI11 would read "-1" or "-.5" as unknown options, so coefficients are
    // separated out here and only the flags go through the parser.
    std::vector<std::string> flags;
    std::vector<std::string> coefficients;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "--") {
            coefficients.insert(coefficients.end(), args.begin() + static_cast<std::ptrdiff_t>(i) + 1, args.end());
            break;
        }
        if (arg.empty() || arg[0] != '-' || looks_numeric(arg)) {
            coefficients.push_back(arg);
            continue;
        }
        flags.push_back(arg);
        if ((arg == "--batch" || arg == "--precision") && i + 1 < args.size()) {
            flags.push_back(args[++i]);
        }
    }

    ReportOptions options;
    bool as_json = false;
    bool no_crosscheck = false;
    std::string batch_path;
    CLI::App app{"Decide definiteness of e4 x^4 + e3 x^3 y + e2 x^2 y^2 + e1 x y^3 + e0 y^4 with an exact certificate.",
                 "quartic-certify"};
    app.usage("quartic-certify [FLAGS] e4 e3 e2 e1 e0");
    app.footer("Coefficients are integers, fractions p/q or finite decimals.\n"
               "Exit: 0 definite, 1 semidefinite, 2 indefinite, 64 usage/parse error, 70 internal disagreement.");
    app.add_flag("--json", as_json, "Write the JSON report to stdout");
    app.add_option("--batch", batch_path, "Process one form per line of FILE (JSON lines)")->option_text("FILE");
    app.add_flag("--no-crosscheck", no_crosscheck, "Skip the classical and sampling cross-checks");
    app.add_option("--precision", options.precision, "Significant digits in decimal renderings")
        ->check(CLI::Range(1, 200))
        ->capture_default_str();
    app.add_flag("--case,!--no-case", options.include_case, "Include the root-configuration case (default on)");
    try {
        std::vector<std::string> reversed(flags.rbegin(), flags.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "quartic-certify: " << e.what() << '\n';
        return exit_code::parse_error;
    }
    options.crosscheck = !no_crosscheck;

    if (!batch_path.empty()) {
        if (!coefficients.empty()) {
            err << "quartic-certify: --batch does not take coefficients on the command line\n";
            return exit_code::parse_error;
        }
        std::ifstream file(batch_path);
        if (!file) {
            err << "quartic-certify: cannot open '" << batch_path << "'\n";
            return exit_code::parse_error;
        }
        return run_batch(file, out, options);
    }

    std::string error;
    const auto form = parse_coefficients(coefficients, error);
    if (!form) {
        err << "quartic-certify: " << error << '\n';
        return exit_code::parse_error;
    }
    const Report report = build_report(*form, options);
    if (as_json) {
        out << report.json.dump(2) << '\n';
    } else {
        write_text(out, report);
    }
    return report.exit_code;
}

} // namespace qcert::cli
