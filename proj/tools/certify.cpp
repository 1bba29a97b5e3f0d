// certify: command-line front end for the endomorphism certifier.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilcert/builtins.hpp"
#include "nilcert/document.hpp"

namespace {

struct Flags {
    std::string format = "text";
    std::string pi;
    bool pi_given = false;
    bool no_oracle = false;
    std::uint64_t seed = 1;
};

void add_check_flags(CLI::App* cmd, Flags& flags)
{
    cmd->add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--pi", flags.pi, "Comma-separated prime list overriding the document's pi");
    cmd->add_flag("--no-oracle", flags.no_oracle, "Skip the surjectivity oracle");
    cmd->add_option("--seed", flags.seed, "Seed for the randomized cross-checks");
}

int run_document(const std::string& text, const Flags& flags, CLI::App* cmd)
{
    nilcert::CheckOptions options;
    options.format = flags.format == "json" ? nilcert::CheckOptions::Format::json : nilcert::CheckOptions::Format::text;
    options.run_oracle = !flags.no_oracle;
    options.seed = flags.seed;
    if (cmd->count("--pi") > 0) {
        try {
            options.pi_override = nilcert::parse_prime_list(flags.pi);
        } catch (const nilcert::InputError& e) {
            std::cerr << "malformed input: " << e.what() << "\n";
            return nilcert::exit_malformed;
        }
    }
    return nilcert::run_check(text, options, std::cout, std::cerr);
}

void print_listing(std::ostream& os)
{
    for (const auto& e : nilcert::builtin_examples())
        os << e.name << "  " << e.summary << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certify that an injective endomorphism of a pattern group is an automorphism"};
    app.require_subcommand(1);

    Flags check_flags;
    std::string file;
    CLI::App* check = app.add_subcommand("check", "Check the endomorphism described by a JSON document");
    check->add_option("FILE", file, "Input document")->required();
    add_check_flags(check, check_flags);

    CLI::App* example = app.add_subcommand("example", "Built-in examples");
    example->require_subcommand(1);
    example->add_subcommand("list", "List built-in examples");
    Flags run_flags;
    std::string name;
    CLI::App* run = example->add_subcommand("run", "Check a built-in example");
    run->add_option("NAME", name, "Example name")->required();
    add_check_flags(run, run_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : nilcert::exit_malformed;
    }

    if (check->parsed()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "malformed input: cannot read " << file << "\n";
            return nilcert::exit_malformed;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return run_document(buf.str(), check_flags, check);
    }
    if (run->parsed()) {
        const auto found = nilcert::find_builtin(name);
        if (!found) {
            std::cerr << "unknown example \"" << name << "\"; available:\n";
            print_listing(std::cerr);
            return nilcert::exit_malformed;
        }
        return run_document(found->document, run_flags, run);
    }
    print_listing(std::cout);
    return nilcert::exit_ok;
}
