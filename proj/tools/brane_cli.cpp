#include "brane/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Sullivan-model brane operations on sphere mapping spaces"};
    app.require_subcommand(1);
    brane::CommandOptions opt;
    std::string format = "text";

    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("model", opt.model_path, "model file")->required()->check(CLI::ExistingFile);
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "tsv"}));
        return sub;
    };
    auto k_opt = [&](CLI::App* sub) { sub->add_option("--k", opt.k, "sphere dimension k")->check(CLI::Range(1, 64)); };

    CLI::App* check = add("check-dga", "check d^2 = 0 on every basis monomial");
    check->add_option("--max-degree", opt.max_degree, "degree cutoff")->check(CLI::Range(0, 200));
    CLI::App* coh = add("cohomology", "cohomology basis per degree");
    coh->add_option("--max-degree", opt.max_degree, "degree cutoff")->check(CLI::Range(0, 200));
    for (const char* name : {"sphere-model", "disk-model"}) k_opt(add(name, std::string("generator table of the ") + name));
    add("path-model", "generator table of the path model");
    for (const char* name : {"brane-product", "brane-coproduct"}) {
        CLI::App* sub = add(name, std::string("dual ") + (name[6] == 'p' ? "product" : "coproduct") + " matrices per degree");
        k_opt(sub);
        sub->add_option("--max-degree", opt.max_degree, "degree cutoff")->check(CLI::Range(0, 200));
        sub->add_flag("--homology", opt.homology, "dualize to the shifted homology");
    }
    CLI::App* verify = add("verify", "run a verification suite");
    k_opt(verify);
    verify->add_option("--max-degree", opt.max_degree, "degree cutoff")->check(CLI::Range(0, 200));
    verify->add_option("--suite", opt.suite, "suite")
        ->required()
        ->check(CLI::IsMember({"assoc", "comm", "frobenius", "thm12", "thm13", "signs"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : brane::kUsageOrModelError;
    }
    opt.command = app.get_subcommands().front()->get_name();
    opt.tsv = format == "tsv";
    return brane::run_command(opt, std::cout, std::cerr);
}
