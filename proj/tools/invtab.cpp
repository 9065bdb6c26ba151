#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <invtab/invtab.hpp>

namespace {

using namespace invtab;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

tableau load(const std::string& path) { return parse_tableau(slurp(path)); }

void print_frames(const std::vector<std::string>& frames) {
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (i) std::cout << '\n';
        std::cout << frames[i] << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for inverted semistandard Young tableaux"};
    app.require_subcommand(1);

    std::string in_path, shape_str, content_str, orig_shape_str;
    int swap_a = 0, max_cells = 8;
    bool trace = false, json_out = false, pretty = false;

    auto add_input = [&](CLI::App* c) {
        c->add_option("input", in_path, "tableau file (default: stdin)");
    };
    auto add_family = [&](CLI::App* c) {
        c->add_option("--shape", shape_str, "comma-separated row lengths")->required();
        c->add_option("--content", content_str, "comma-separated multiplicities")
            ->required();
    };

    auto* c_pairs = app.add_subcommand("pairs", "list inversion pairs");
    add_input(c_pairs);
    auto* c_std = app.add_subcommand("standardize", "sort every column");
    add_input(c_std);
    c_std->add_flag("--json", json_out, "emit JSON instead of text");
    auto* c_count = app.add_subcommand("count", "total number of fillings");
    add_family(c_count);
    auto* c_gf = app.add_subcommand("gf", "inversion distribution coefficients");
    add_family(c_gf);
    c_gf->add_flag("--pretty", pretty, "human-readable polynomial");
    auto* c_enum = app.add_subcommand("enumerate", "stream every filling");
    add_family(c_enum);
    auto* c_max = app.add_subcommand("maxinv", "max inversion number and witness");
    add_family(c_max);
    auto* c_tau = app.add_subcommand("taumax", "witness of the top class");
    add_family(c_tau);
    auto* c_swap = app.add_subcommand("swap", "exchange multiplicities of a, a+1");
    add_input(c_swap);
    c_swap->add_option("--a", swap_a, "smaller of the two swapped values")->required();
    auto* c_bump = app.add_subcommand("bump", "one-inversion tableau to none");
    add_input(c_bump);
    c_bump->add_flag("--trace", trace, "print every intermediate frame");
    auto* c_unbump = app.add_subcommand("unbump", "inverse of bump");
    add_input(c_unbump);
    c_unbump->add_option("--original-shape", orig_shape_str, "shape before the bump")
        ->required();
    c_unbump->add_flag("--trace", trace, "print every intermediate frame");
    auto* c_deltas = app.add_subcommand("deltas", "reachable bumped shapes");
    c_deltas->add_option("--shape", shape_str, "comma-separated row lengths")
        ->required();
    auto* c_verify = app.add_subcommand("verify", "run the property suite");
    c_verify->add_option("--max-cells", max_cells, "cell budget (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        if (c_pairs->parsed()) {
            tableau t = load(in_path);
            std::cout << pairs_to_string(inversion_pairs(t)) << '\n'
                      << "count=" << n_inv(t) << '\n';
        } else if (c_std->parsed()) {
            tableau t = standardize(load(in_path));
            if (json_out)
                std::cout << to_json(t) << '\n';
            else
                std::cout << to_text(t);
        } else if (c_count->parsed()) {
            shape s = parse_shape(shape_str);
            content mu = parse_content(content_str);
            bigint total;
            try {
                total = total_counts(s, mu);
            } catch (const unsupported&) {
                total = inversion_distribution(s, mu).total();
            }
            std::cout << total << '\n';
        } else if (c_gf->parsed()) {
            shape s = parse_shape(shape_str);
            content mu = parse_content(content_str);
            qpolynomial gf = s.cols() <= 1 && mu.total() == s.cells()
                                 ? one_column_gf(mu)
                                 : inversion_distribution(s, mu).gf();
            std::cout << (pretty ? gf.pretty() : gf.machine()) << '\n';
        } else if (c_enum->parsed()) {
            shape s = parse_shape(shape_str);
            content mu = parse_content(content_str);
            bool first = true;
            for_each_tableau(s, mu, [&](const tableau& t) {
                if (!first) std::cout << '\n';
                first = false;
                std::cout << to_text(t);
            });
        } else if (c_max->parsed() || c_tau->parsed()) {
            shape s = parse_shape(shape_str);
            content mu = parse_content(content_str);
            max_inversion_report rep = max_inversions(s, mu);
            if (c_max->parsed()) std::cout << rep.value << '\n';
            std::cout << to_text(rep.witness);
        } else if (c_swap->parsed()) {
            std::cout << to_text(content_swap(load(in_path), swap_a));
        } else if (c_bump->parsed()) {
            tableau t = load(in_path);
            if (trace) {
                std::vector<std::string> frames;
                phi1_bump_full(t, &frames);
                print_frames(frames);
            } else {
                std::cout << to_text(phi1_bump(t));
            }
        } else if (c_unbump->parsed()) {
            tableau t = load(in_path);
            shape lam = parse_shape(orig_shape_str);
            if (trace) {
                std::vector<std::string> frames;
                phi2_unbump_full(t, lam, &frames);
                print_frames(frames);
            } else {
                std::cout << to_text(phi2_unbump(t, lam));
            }
        } else if (c_deltas->parsed()) {
            for (const etuple& e : shape_deltas(parse_shape(shape_str)))
                std::cout << shape_to_string(e.target) << '\n';
        } else if (c_verify->parsed()) {
            bool ok = true;
            for (const check_result& r : run_all_checks(max_cells)) {
                if (r.pass)
                    std::cout << "PASS " << r.name << " (" << r.detail << ")\n";
                else
                    std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
                ok = ok && r.pass;
            }
            if (!ok) return 3;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const family_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
