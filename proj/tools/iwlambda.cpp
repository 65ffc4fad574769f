// iwlambda: decide lambda_p(K) > 1 for imaginary quadratic K by Gold's
// criterion and by CM point counts, and compare the two.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "iwasawa/catalog.hpp"
#include "iwasawa/commands.hpp"
#include "iwasawa/error.hpp"

using namespace iwasawa;

int main(int argc, char** argv) {
    CLI::App app{"Iwasawa lambda > 1 tests for imaginary quadratic fields"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string catalog_path;
    std::uint64_t d = 0, p = 0, p_max = 0, m = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* table = app.add_subcommand("table", "Point counts mod p^2 of a catalog curve over F_{p^{p-1}}");
    table->add_option("--d", d, "K = Q(sqrt(-d))")->required();
    table->add_option("--pmax", p_max, "Largest prime considered")->required();
    table->add_option("--catalog", catalog_path, "CM catalog file");
    add_format(table);

    auto* theorem1 = app.add_subcommand("theorem1", "Compare Gold's criterion with the point-count test");
    theorem1->add_option("--d", d, "K = Q(sqrt(-d))")->required();
    theorem1->add_option("--pmax", p_max, "Largest prime considered")->required();
    theorem1->add_option("--catalog", catalog_path, "CM catalog file");
    add_format(theorem1);

    auto* gold = app.add_subcommand("gold", "Gold's unit-power test");
    gold->add_option("--d", d, "K = Q(sqrt(-d))")->required();
    auto* gold_p = gold->add_option("--p", p, "Single prime");
    auto* gold_pmax = gold->add_option("--pmax", p_max, "Scan all split primes up to this bound");
    gold_p->excludes(gold_pmax);
    add_format(gold);

    auto* scan = app.add_subcommand("scan-ordinary", "Ordinary curves over F_p with p^2 | #E(F_{p^{p-1}})");
    scan->add_option("--p", p, "Prime, 3 < p <= 100")->required();
    add_format(scan);

    auto* seq = app.add_subcommand("sequences", "Product test, Euler/Glaisher numbers and point counts");
    seq->add_option("--p", p, "Prime with p = 1 mod m")->required();
    seq->add_option("--m", m, "3 or 4")->required();
    add_format(seq);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Format format = parse_format(format_name);
        auto catalog = [&]() -> Catalog {
            return catalog_path.empty() ? Catalog::builtin() : Catalog::load(catalog_path);
        };

        if (*table) return cmd_table(catalog(), d, p_max, format, std::cout, std::cerr);
        if (*theorem1) return cmd_theorem1(catalog(), d, p_max, format, std::cout, std::cerr);
        if (*gold) {
            std::optional<std::uint64_t> one, bound;
            if (*gold_p) one = p;
            if (*gold_pmax) bound = p_max;
            return cmd_gold(d, one, bound, format, std::cout, std::cerr);
        }
        if (*scan) return cmd_scan_ordinary(p, format, std::cout, std::cerr);
        if (*seq) return cmd_sequences(p, m, format, std::cout, std::cerr);
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
