// qh: quadratic hulls of linear codes, multiplication reduction
// verification, and exhaustive minimal-algorithm search.

#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "quadhull/cli.hpp"

namespace {

int finish(const qh::CmdResult& res, bool as_json) {
    if (as_json)
        std::cout << res.report.dump(2) << std::endl;
    else
        std::cout << res.human;
    return res.exit_code;
}

unsigned default_workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic hulls of linear codes and multiplication algorithms"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the JSON report instead of the human summary");

    std::string algebra, target, phi_file, code_file;
    size_t length = 0;
    int table = 1;
    bool long_flag = false;
    unsigned workers = default_workers();
    uint32_t ext = 1;

    auto* verify = app.add_subcommand("verify", "verify a multiplication reduction");
    verify->add_option("--algebra", algebra, "source algebra spec")->required();
    verify->add_option("--target", target, "target algebra spec")->required();
    verify->add_option("--phi", phi_file, "phi matrix file")->required();

    uint32_t q_check = 0;
    auto* hull = app.add_subcommand("hull", "quadratic hull of a code over F_q^n");
    hull->add_option("--code", code_file, "generator matrix file")->required();
    hull->add_option("--q", q_check, "expected base field order (checked against the file)");
    hull->add_option("--ext", ext, "point counts up to F_{q^ext}");

    auto* search = app.add_subcommand("search", "exhaustive algorithm-subspace search");
    search->add_option("--algebra", algebra, "algebra spec")->required();
    search->add_option("--length", length, "algorithm length n")->required();
    search->add_flag("--long", long_flag, "allow long runs");
    search->add_option("--workers", workers, "worker threads");
    search->add_option("--ext", ext, "per-W point counts up to F_{q^ext}");

    auto* tables = app.add_subcommand("tables", "reproduce a results table");
    tables->add_option("--table", table, "table number 1..4")->required();
    tables->add_flag("--long", long_flag, "include long rows");
    tables->add_option("--workers", workers, "worker threads");

    app.add_subcommand("delpezzo", "rebuild the length-13 algorithm for F_32");

    auto* supercode = app.add_subcommand("supercode", "search a supercode witness for a code");
    supercode->add_option("--code", code_file, "code file")->required();
    supercode->add_option("--algebra", algebra, "source algebra spec")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return finish(qh::cmd_verify(algebra, target, qh::load_file(phi_file)), as_json);
        if (hull->parsed())
            return finish(qh::cmd_hull(qh::load_file(code_file), ext, q_check), as_json);
        if (search->parsed())
            return finish(qh::cmd_search(algebra, length, long_flag, workers, ext), as_json);
        if (tables->parsed()) return finish(qh::cmd_tables(table, long_flag, workers), as_json);
        if (app.get_subcommand("delpezzo")->parsed()) return finish(qh::cmd_delpezzo(), as_json);
        if (supercode->parsed())
            return finish(qh::cmd_supercode(qh::load_file(code_file), algebra), as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
