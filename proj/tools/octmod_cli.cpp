// Command-line front end: exact octonion arithmetic, regular composition of
// serialized maps, batch identity checking, and para-linear dimension counts.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <octmod/octmod.hpp>

namespace {

using namespace octmod;

[[nodiscard]] std::string unit_label(int i) {
    return i == 0 ? std::string("1") : "e" + std::to_string(i);
}

[[nodiscard]] std::string cell_label(const BasisProduct& p) {
    std::string s = p.sign < 0 ? "-" : "";
    return s + unit_label(p.index);
}

int cmd_table() {
    std::ostringstream out;
    out << std::left << std::setw(6) << "";
    for (int j = 0; j < 8; ++j) out << std::setw(6) << unit_label(j);
    out << "\n";
    for (int i = 0; i < 8; ++i) {
        out << std::setw(6) << unit_label(i);
        for (int j = 0; j < 8; ++j) out << std::setw(6) << cell_label(basis_mul(i, j));
        out << "\n";
    }
    std::cout << out.str();
    return 0;
}

int cmd_mul(const std::string& lhs, const std::string& rhs) {
    const Octonion a = parse_octonion(lhs);
    const Octonion b = parse_octonion(rhs);
    std::cout << render_octonion(a * b) << "\n";
    return 0;
}

int cmd_compose(const std::string& mode, const std::string& f_path, const std::string& g_path,
                const std::string& out_path) {
    const ParaLinearMap f = map_from_json(read_json_file(f_path));
    const ParaLinearMap g = map_from_json(read_json_file(g_path));
    const ParaLinearMap h =
        mode == "left" ? regular_compose_left(f, g) : regular_compose_right(f, g);
    write_json_file(out_path, to_json(h));
    return 0;
}

void print_report_line(const IdentityReport& r) {
    std::cout << std::left << std::setw(15) << to_string(r.status) << r.name << "\n";
    if (!r.counterexample.is_null())
        std::cout << "    counterexample: " << r.counterexample.dump() << "\n";
    if (!r.note.empty()) std::cout << "    note: " << r.note << "\n";
}

int cmd_check(const std::string& target, int trials, std::uint64_t seed, int max_rank,
              int coeff_bound, bool as_json) {
    std::vector<IdentityReport> reports;
    if (target == "all") {
        reports = run_all(trials, seed, max_rank, coeff_bound);
    } else {
        reports.push_back(run_check(target, trials, seed, max_rank, coeff_bound));
    }

    bool hard = false;
    int pass = 0, fail = 0, discovery = 0;
    for (const auto& r : reports) {
        hard = hard || r.hard_failure();
        if (r.status == CheckStatus::Pass) ++pass;
        else if (r.status == CheckStatus::Fail) ++fail;
        else ++discovery;
    }

    if (as_json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report_line(r);
        std::cout << reports.size() << " checks: " << pass << " pass, " << fail << " fail, "
                  << discovery << " discovery-fail (trials=" << trials << ", seed=" << seed
                  << ")\n";
    }
    return hard ? 1 : 0;
}

int cmd_hom_dim(std::size_t n, std::size_t m) {
    const ModuleShape dom{n, false}, cod{m, false};
    const std::size_t expected = 8 * n * m;
    const std::size_t left = para_linear_dimension(dom, cod, Chirality::Left);
    const std::size_t right = para_linear_dimension(dom, cod, Chirality::Right);
    const bool consistent = left == expected && right == expected;
    std::cout << "dim Hom_para(O^" << n << ", O^" << m << ") = " << expected << "\n";
    std::cout << "constraint-rank cross-check: left " << left << ", right " << right
              << (consistent ? " (consistent)" : " (MISMATCH)") << "\n";
    return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact octonion bimodule calculator and identity checker"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "print the 8x8 basis multiplication table");

    std::string mul_a, mul_b;
    auto* mul = app.add_subcommand("mul", "multiply two octonion literals like \"1+2e3-1/2e7\"");
    mul->add_option("lhs", mul_a, "left factor")->required();
    mul->add_option("rhs", mul_b, "right factor")->required();

    std::string comp_mode, comp_f, comp_g, comp_out;
    auto* comp = app.add_subcommand("compose", "regular composition f (*) g of serialized maps");
    comp->add_option("chirality", comp_mode, "left or right")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    comp->add_option("f", comp_f, "outer map JSON file")->required();
    comp->add_option("g", comp_g, "inner map JSON file")->required();
    comp->add_option("out", comp_out, "output JSON file")->required();

    std::string check_target;
    int trials = 100, max_rank = 2, coeff_bound = 5;
    std::uint64_t seed = 42;
    bool as_json = false;
    auto* check = app.add_subcommand("check", "run one named identity check, or all of them");
    check->add_option("identity", check_target, "identity name, or \"all\"")->required();
    check->add_option("--trials", trials, "random instances per identity");
    check->add_option("--seed", seed, "base seed; per-trial seeds are derived from it");
    check->add_option("--max-rank", max_rank, "largest module rank to draw");
    check->add_option("--coeff-bound", coeff_bound, "magnitude bound for random rationals");
    check->add_flag("--json", as_json, "emit a JSON array of reports instead of text");

    std::size_t dim_n = 1, dim_m = 1;
    auto* hom = app.add_subcommand("hom_dim", "dimension of the para-linear maps O^n -> O^m");
    hom->add_option("n", dim_n, "domain rank")->required()->check(CLI::PositiveNumber);
    hom->add_option("m", dim_m, "codomain rank")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (table->parsed()) return cmd_table();
        if (mul->parsed()) return cmd_mul(mul_a, mul_b);
        if (comp->parsed()) return cmd_compose(comp_mode, comp_f, comp_g, comp_out);
        if (check->parsed()) return cmd_check(check_target, trials, seed, max_rank, coeff_bound, as_json);
        if (hom->parsed()) return cmd_hom_dim(dim_n, dim_m);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
