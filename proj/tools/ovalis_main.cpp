// ovalis — exact congruence checks for topological schemes of real plane
// algebraic curves.
//
// Exit codes: 0 consistent / check passed, 2 input error, 3 prohibited,
// 4 not applicable.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ovalis/arf.hpp"
#include "ovalis/json_io.hpp"
#include "ovalis/prohibit.hpp"
#include "ovalis/scheme.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitProhibited = 3;
constexpr int kExitNotApplicable = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

struct InputSpec {
    std::string inline_text;
    std::size_t inline_count = 0;
    std::string input_path;

    std::string scheme_text() const {
        if (!input_path.empty()) {
            if (inline_count > 0)
                throw std::runtime_error("pass the scheme inline or with --input, not both");
            return read_file(input_path);
        }
        if (inline_count == 0)
            throw std::runtime_error("missing scheme (pass it inline or with --input)");
        return inline_text;
    }

    std::string file_path() const {
        if (!input_path.empty()) {
            if (inline_count > 0)
                throw std::runtime_error("pass the file positionally or with --input, not both");
            return input_path;
        }
        if (inline_count == 0) throw std::runtime_error("missing input file");
        return inline_text;
    }
};

void require_even_degree(int degree) {
    if (degree < 2 || degree % 2 != 0)
        throw std::runtime_error("--degree must be an even integer >= 2 (got " +
                                 std::to_string(degree) + ")");
}

void print_json(const ordered_json& j) {
    std::cout << j.dump(2) << '\n';
}

std::string join_parities(const std::vector<int>& par) {
    if (par.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < par.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(par[i]);
    }
    return out;
}

void print_stats_text(const ordered_json& j) {
    std::cout << "scheme: " << j["scheme"].get<std::string>() << '\n'
              << "ovals: " << j["ovals"] << " (p = " << j["p"] << ", n = " << j["n"] << ")\n"
              << "components: " << j["components"] << ", double points: " << j["double_points"]
              << '\n';
    if (j["signed"].get<bool>()) {
        std::cout << "pi+ = " << j["pi_plus"] << ", pi- = " << j["pi_minus"] << ", d = " << j["d"]
                  << ", D+ = " << j["d_plus"] << ", D- = " << j["d_minus"] << '\n'
                  << "mu = " << j["mu"].get<std::string>() << '\n';
    } else {
        std::cout << "orientation: unsigned\n";
    }
    std::cout << "odd curve: " << (j["odd_curve"].get<bool>() ? "yes" : "no")
              << ", even curve: " << (j["even_curve"].get<bool>() ? "yes" : "no") << '\n';
    std::cout << "B+ parities: " << join_parities(j["bplus_parities"].get<std::vector<int>>())
              << '\n';
    std::cout << "B- parities: " << join_parities(j["bminus_parities"].get<std::vector<int>>())
              << '\n';
}

void print_report_text(const ovalis::VerdictReport& report) {
    std::cout << "scheme: " << report.scheme << '\n'
              << "degree: " << report.degree << " (k = " << report.degree / 2 << ")\n";
    for (const ovalis::CheckResult& c : report.results) {
        std::string name = c.name;
        name.resize(26, ' ');
        const char* status = !c.applicable ? "n/a " : c.passed ? "pass" : "FAIL";
        std::cout << "  " << name << status << "  " << c.details << '\n';
    }
    std::cout << "verdict: " << ovalis::verdict_name(report.verdict) << '\n';
}

int verdict_exit(ovalis::Verdict v) {
    switch (v) {
        case ovalis::Verdict::Consistent: return kExitOk;
        case ovalis::Verdict::Prohibited: return kExitProhibited;
        case ovalis::Verdict::NotApplicable: return kExitNotApplicable;
    }
    return kExitNotApplicable;
}

int run_stats(const InputSpec& in, const std::string& format) {
    const ovalis::Scheme s = ovalis::parse_scheme(in.scheme_text());
    const ordered_json j = ovalis::stats_report_json(s);
    if (format == "json")
        print_json(j);
    else
        print_stats_text(j);
    return kExitOk;
}

int run_check(const InputSpec& in, int degree, bool search, const std::string& format) {
    require_even_degree(degree);
    const int k = degree / 2;
    const ovalis::Scheme s = ovalis::parse_scheme(in.scheme_text());

    if (!search) {
        const ovalis::VerdictReport report = ovalis::full_verdict(s, k);
        if (format == "json")
            print_json(ovalis::report_to_json(report));
        else
            print_report_text(report);
        return verdict_exit(report.verdict);
    }

    const auto classes = ovalis::enumerate_orientations(s, k);
    bool any_consistent = false;
    bool any_prohibited = false;
    if (format == "json") {
        auto arr = ordered_json::array();
        for (const auto& [scheme, report] : classes) arr.push_back(ovalis::report_to_json(report));
        print_json(arr);
    } else {
        std::cout << "orientation classes: " << classes.size() << '\n';
        for (const auto& [scheme, report] : classes) {
            std::cout << '\n';
            print_report_text(report);
        }
    }
    for (const auto& [scheme, report] : classes) {
        any_consistent = any_consistent || report.verdict == ovalis::Verdict::Consistent;
        any_prohibited = any_prohibited || report.verdict == ovalis::Verdict::Prohibited;
    }
    if (any_consistent) return kExitOk;
    if (any_prohibited) return kExitProhibited;
    return kExitNotApplicable;
}

int run_brown(const InputSpec& in, const std::string& format) {
    const ovalis::QuadraticForm form = ovalis::form_from_json(parse_json_file(in.file_path()));
    const ovalis::BrownValue b = ovalis::brown(form);  // improper forms throw
    if (format == "json") {
        ordered_json j;
        j["brown"] = b.value;
        print_json(j);
    } else {
        std::cout << "brown = " << b.value << '\n';
    }
    return kExitOk;
}

int run_arf(const InputSpec& in, int degree, bool degree_given, const std::string& format) {
    const ovalis::SurfaceData data = ovalis::surface_from_json(parse_json_file(in.file_path()));
    const ovalis::ArfValue value = ovalis::arf_from_surface(data);

    if (!degree_given) {
        if (format == "json") {
            ordered_json j;
            j["arf_quarters"] = value.quarters();
            j["arf"] = value.to_string();
            print_json(j);
        } else {
            std::cout << "arf = " << value.to_string() << " (mod 8)\n";
        }
        return kExitOk;
    }

    require_even_degree(degree);
    const int k = degree / 2;
    const ovalis::CheckResult res = ovalis::check_arf_congruence(value, k);
    const ovalis::ArfValue required =
        ovalis::ArfValue::from_halves(static_cast<std::int64_t>(k) * k);
    if (format == "json") {
        ordered_json j;
        j["arf_quarters"] = value.quarters();
        j["arf"] = value.to_string();
        j["degree"] = degree;
        j["required"] = required.to_string();
        j["passed"] = res.passed;
        j["verdict"] = res.passed ? "consistent" : "prohibited";
        print_json(j);
    } else {
        std::cout << "arf = " << value.to_string() << " (mod 8), required "
                  << required.to_string() << " → " << (res.passed ? "CONSISTENT" : "PROHIBITED")
                  << '\n';
    }
    return res.passed ? kExitOk : kExitProhibited;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact congruence checks for schemes of real plane algebraic curves"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    InputSpec stats_in, check_in, brown_in, arf_in;
    int check_degree = 0;
    int arf_degree = 0;
    bool search = false;

    CLI::App* stats_cmd = app.add_subcommand("stats", "scheme statistics and classifications");
    stats_cmd->fallthrough();
    stats_cmd->add_option("scheme", stats_in.inline_text, "scheme text");
    stats_cmd->add_option("--input", stats_in.input_path, "read the scheme from a file");

    CLI::App* check_cmd = app.add_subcommand("check", "run the congruence battery");
    check_cmd->fallthrough();
    check_cmd->add_option("scheme", check_in.inline_text, "scheme text");
    check_cmd->add_option("--input", check_in.input_path, "read the scheme from a file");
    check_cmd->add_option("--degree", check_degree, "curve degree 2k")->required();
    check_cmd->add_flag("--search", search, "enumerate semi-orientations of unsigned ovals");

    CLI::App* brown_cmd = app.add_subcommand("brown", "Brown invariant of a form file");
    brown_cmd->fallthrough();
    brown_cmd->add_option("file", brown_in.inline_text, "form JSON file");
    brown_cmd->add_option("--input", brown_in.input_path, "form JSON file");

    CLI::App* arf_cmd = app.add_subcommand("arf", "Arf invariant from a surface-data file");
    arf_cmd->fallthrough();
    arf_cmd->add_option("file", arf_in.inline_text, "surface JSON file");
    arf_cmd->add_option("--input", arf_in.input_path, "surface JSON file");
    CLI::Option* arf_degree_opt =
        arf_cmd->add_option("--degree", arf_degree, "check the degree-2k Arf congruence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    stats_in.inline_count = stats_cmd->count("scheme");
    check_in.inline_count = check_cmd->count("scheme");
    brown_in.inline_count = brown_cmd->count("file");
    arf_in.inline_count = arf_cmd->count("file");

    try {
        if (stats_cmd->parsed()) return run_stats(stats_in, format);
        if (check_cmd->parsed()) return run_check(check_in, check_degree, search, format);
        if (brown_cmd->parsed()) return run_brown(brown_in, format);
        if (arf_cmd->parsed())
            return run_arf(arf_in, arf_degree, arf_degree_opt->count() > 0, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
