#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "reeskit/dsl.hpp"
#include "reeskit/verify.hpp"

namespace {

int cmd_run(const std::string& path, bool json) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return reeskit::dsl::run_script(buf.str(), std::cout, std::cerr, json);
}

int cmd_verify() {
    auto checks = reeskit::run_verify_checks();
    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "ok " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
    for (const auto& c : checks) all = all && c.pass;
    std::cout << (all ? "verify: all checks passed" : "verify: MISMATCH") << "\n";
    return all ? 0 : 2;
}

int cmd_repl() {
    reeskit::dsl::Env env;
    std::string line;
    std::cout << "reeskit repl -- statements end with ';', Ctrl-D quits\n";
    while (true) {
        std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line.empty()) continue;
        try {
            reeskit::dsl::Script script = reeskit::dsl::parse(line);
            reeskit::dsl::execute(script, env, std::cout, std::cerr, false);
        } catch (const reeskit::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
        }
    }
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Rees algebras, torsionless quotients and total blow-ups"};
    app.require_subcommand(1);

    std::string path;
    bool json = false;
    auto* run = app.add_subcommand("run", "execute a script file");
    run->add_option("file", path, "script file")->required();
    run->add_flag("--json", json, "structured output");

    auto* verify = app.add_subcommand("verify", "replay the built-in worked computations");
    auto* repl = app.add_subcommand("repl", "interactive session");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(path, json);
        if (verify->parsed()) return cmd_verify();
        if (repl->parsed()) return cmd_repl();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
