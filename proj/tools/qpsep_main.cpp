#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpsep/criteria.hpp"
#include "qpsep/errors.hpp"
#include "qpsep/qdm_io.hpp"
#include "qpsep/reduction.hpp"
#include "qpsep/states.hpp"

namespace {

using namespace qpsep;

// Exit codes: 0 success, 2 usage, 3 validation, 4 parse/io, 5 internal.
// A verdict is never an error; analysis always exits 0.

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + out_path + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("failed writing '" + out_path + "'");
    }
}

// The qubit count a partition string talks about, so files and --partition
// flags can be cross-checked by the parser itself.
int partition_qubit_count(const std::string& text) {
    const std::size_t bar = text.find('|');
    if (bar == std::string::npos) {
        throw BadSyntax("partition string needs exactly one '|'");
    }
    int count = 0;
    for (const std::string_view side :
         {std::string_view(text).substr(0, bar),
          std::string_view(text).substr(bar + 1)}) {
        if (!side.empty() && std::isupper(static_cast<unsigned char>(side[0]))) {
            count += static_cast<int>(side.size());
        } else {
            count += static_cast<int>(std::count(side.begin(), side.end(), ',')) +
                     (side.empty() ? 0 : 1);
        }
    }
    return count;
}

std::vector<double> parse_weights(const std::string& text) {
    std::vector<double> weights;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            weights.push_back(std::stod(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw WeightsInvalid("bad weight '" + token + "'");
        }
        pos = comma + 1;
    }
    return weights;
}

int run(int argc, char** argv) {
    CLI::App app{"Reduce multi-qubit density matrices to two-qubit states "
                 "along a bipartition and test them with the PPT criterion"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind;
    double gen_x = 0.0;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a named state as QDM");
    gen->add_option("kind", gen_kind, "werner|prime|doubleprime|ghz|random|mixed")
        ->required()
        ->check(CLI::IsMember(
            {"werner", "prime", "doubleprime", "ghz", "random", "mixed"}));
    gen->add_option("--x", gen_x, "mixing parameter in [0,1]");
    gen->add_option("--n", gen_n, "qubit count");
    gen->add_option("--seed", gen_seed, "PRNG seed (kind random)");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // reduce
    std::string reduce_in;
    std::string reduce_partition;
    std::string reduce_out;
    auto* red = app.add_subcommand("reduce",
                                   "Reduce a state along a bipartition");
    red->add_option("input", reduce_in, "QDM input file")->required();
    red->add_option("--partition", reduce_partition, "e.g. A|BC or 1|2,3")
        ->required();
    red->add_option("--out", reduce_out, "output path (default stdout)");

    // check
    std::string check_in;
    std::string check_partition;
    double check_tol = kPptTol;
    std::string check_format = "text";
    auto* chk = app.add_subcommand(
        "check", "PPT-test the reduction along one bipartition");
    chk->add_option("input", check_in, "QDM input file")->required();
    chk->add_option("--partition", check_partition, "e.g. A|BC")->required();
    chk->add_option("--tol", check_tol, "negativity threshold");
    chk->add_option("--format", check_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // analyze
    std::string analyze_in;
    double analyze_tol = kPptTol;
    std::string analyze_format = "text";
    auto* ana = app.add_subcommand(
        "analyze", "PPT-test the reductions along every bipartition");
    ana->add_option("input", analyze_in, "QDM input file")->required();
    ana->add_option("--tol", analyze_tol, "negativity threshold");
    ana->add_option("--format", analyze_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // construct
    std::vector<std::string> construct_sigmas;
    std::string construct_weights;
    std::string construct_layout;
    std::string construct_out;
    auto* con = app.add_subcommand(
        "construct",
        "Build a 3-qubit state whose B|AC reduction is a given mixture");
    con->add_option("--sigma", construct_sigmas, "two-qubit QDM piece (repeat)")
        ->required();
    con->add_option("--weights", construct_weights, "comma-separated, sum 1")
        ->required();
    con->add_option("--layout", construct_layout, "target bipartition (B|AC)")
        ->required();
    con->add_option("--out", construct_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        const bool needs_x = gen_kind == "werner" || gen_kind == "prime" ||
                             gen_kind == "doubleprime";
        const bool needs_n =
            gen_kind == "ghz" || gen_kind == "random" || gen_kind == "mixed";
        if (needs_x && gen->count("--x") == 0) {
            std::cerr << "error: gen " << gen_kind << " requires --x\n";
            return 2;
        }
        if (needs_n && gen->count("--n") == 0) {
            std::cerr << "error: gen " << gen_kind << " requires --n\n";
            return 2;
        }
        DensityMatrix state = [&] {
            if (gen_kind == "werner") {
                return werner(gen_x);
            }
            if (gen_kind == "prime") {
                return tripartite_example(ExampleVariant::Prime, gen_x);
            }
            if (gen_kind == "doubleprime") {
                return tripartite_example(ExampleVariant::DoublePrime, gen_x);
            }
            if (gen_kind == "ghz") {
                return pure_to_density(ghz(gen_n));
            }
            if (gen_kind == "random") {
                return random_density(gen_n, gen_seed);
            }
            // mixed
            if (gen_n < 1 || gen_n > 10) {
                throw NOutOfRange("mixed state needs --n in 1..10");
            }
            ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << gen_n);
            m *= Complex(1.0 / static_cast<double>(m.dim()), 0.0);
            return validate_density(std::move(m));
        }();
        emit(matrix_to_qdm(state), gen_out);
        return 0;
    }

    if (red->parsed()) {
        const DensityMatrix input = load_matrix(reduce_in);
        const Partition p =
            parse_partition(reduce_partition, input.num_qubits());
        emit(matrix_to_qdm(reduce(input, p)), reduce_out);
        return 0;
    }

    if (chk->parsed()) {
        const DensityMatrix input = load_matrix(check_in);
        const Partition p = parse_partition(check_partition, input.num_qubits());
        const Verdict v = check_partial_separability(input, p, check_tol);
        if (check_format == "json") {
            SeparabilityReport report;
            report.num_qubits = input.num_qubits();
            report.tolerance = check_tol;
            report.verdicts.push_back(v);
            report.entangled = v.kind == VerdictKind::Inseparable;
            std::cout << write_report(report, ReportFormat::Json) << "\n";
        } else {
            std::cout << format_verdict_line(v) << "\n";
        }
        return 0;
    }

    if (ana->parsed()) {
        const DensityMatrix input = load_matrix(analyze_in);
        const SeparabilityReport report = analyze_all(input, analyze_tol);
        const ReportFormat format =
            analyze_format == "json" ? ReportFormat::Json : ReportFormat::Text;
        std::cout << write_report(report, format);
        if (format == ReportFormat::Json) {
            std::cout << "\n";
        }
        return 0;
    }

    // construct
    const int layout_n = partition_qubit_count(construct_layout);
    const Partition layout = parse_partition(construct_layout, layout_n);
    std::vector<DensityMatrix> sigmas;
    sigmas.reserve(construct_sigmas.size());
    for (const std::string& path : construct_sigmas) {
        sigmas.push_back(load_matrix(path));
    }
    const std::vector<double> weights = parse_weights(construct_weights);
    emit(matrix_to_qdm(construct_inseparable(sigmas, weights, layout)),
         construct_out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qpsep::PartitionSyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qpsep::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qpsep::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const qpsep::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
