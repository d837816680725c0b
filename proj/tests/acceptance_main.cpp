#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

// Drives the CLI end to end: runs the full verification suite, then prints one
// line per acceptance criterion from the emitted report.
int main() {
    const std::string cli = PLURIPOT_CLI_PATH;
    const std::string report_path = "acceptance_report.json";
    const std::string cmd =
        "\"" + cli + "\" verify --out " + report_path + " > acceptance_stdout.json 2>&1";
    const int rc = std::system(cmd.c_str());

    std::ifstream in(report_path);
    if (!in) {
        std::cerr << "verification produced no report (command exit " << rc << ")\n";
        return 1;
    }
    nlohmann::json report;
    try {
        in >> report;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "unreadable report: " << e.what() << "\n";
        return 1;
    }

    int failures = 0;
    for (const auto& c : report.at("criteria")) {
        const bool pass = c.at("pass").get<bool>();
        if (!pass) ++failures;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.at("id").get<int>()
                  << "  " << c.at("name").get<std::string>()
                  << "  measured=" << c.at("measured").dump()
                  << "  tolerance=" << c.at("tolerance").dump() << "\n";
    }
    if (failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
