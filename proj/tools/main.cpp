#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nac/commands.hpp"
#include "nac/verify.hpp"

namespace {

nac::Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nac::error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return nac::parse(buffer.str());
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite non-Archimedean spaces: closures, completions, Cauchy filters"};
    app.require_subcommand(1);

    std::string file, name, set_arg;
    bool emit_flag = false;

    auto* check = app.add_subcommand("check", "print t0 / complete / intersection-closed");
    check->add_option("file", file)->required();
    check->add_option("name", name)->required();

    auto* closure = app.add_subcommand("closure", "print the zeta-closure of a point set");
    closure->add_option("file", file)->required();
    closure->add_option("name", name)->required();
    closure->add_option("--set", set_arg, "comma-separated point labels")->required();

    auto* complete_cmd = app.add_subcommand("complete", "construct the completion");
    complete_cmd->add_option("file", file)->required();
    complete_cmd->add_option("name", name)->required();
    complete_cmd->add_flag("--emit", emit_flag, "emit the completed space and the embedding");

    auto* extend = app.add_subcommand("extend", "extend a map along the completion embedding");
    extend->add_option("file", file)->required();
    extend->add_option("name", name, "map name")->required();

    auto* cauchy = app.add_subcommand("cauchy", "list minimal Cauchy filters");
    cauchy->add_option("file", file)->required();
    cauchy->add_option("name", name)->required();

    nac::VerifyOptions vopts;
    std::string suites_arg;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--max-size", vopts.budget.max_carrier, "carrier size for sampled legs");
    verify->add_option("--exhaustive-to", vopts.budget.exhaustive_to,
                       "carrier size for exhaustive legs");
    verify->add_option("--samples", vopts.budget.sample_count, "sampled instance count");
    verify->add_option("--seed", vopts.budget.seed, "sampling seed");
    verify->add_option("--suite", suites_arg, "comma-separated suite names (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            vopts.suites = split_commas(suites_arg);
            return nac::run_verify(vopts, std::cout, std::cerr);
        }
        nac::Document doc = load(file);
        if (check->parsed()) return nac::cmd_check(doc, name, std::cout, std::cerr);
        if (closure->parsed()) {
            return nac::cmd_closure(doc, name, split_commas(set_arg), std::cout, std::cerr);
        }
        if (complete_cmd->parsed()) {
            return nac::cmd_complete(doc, name, emit_flag, std::cout, std::cerr);
        }
        if (extend->parsed()) return nac::cmd_extend(doc, name, std::cout, std::cerr);
        if (cauchy->parsed()) return nac::cmd_cauchy(doc, name, std::cout, std::cerr);
    } catch (const nac::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
