#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "levelwise/output.hpp"
#include "levelwise/spectrum.hpp"
#include "levelwise/tree.hpp"
#include "levelwise/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::int64_t dense_cap_from_env() {
    const char* raw = std::getenv("LEVELWISE_DENSE_CAP");
    if (raw == nullptr) return levelwise::kDefaultDenseCap;
    char* end = nullptr;
    const long long cap = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || cap <= 0) {
        std::cerr << "ignoring invalid LEVELWISE_DENSE_CAP value '" << raw << "'\n";
        return levelwise::kDefaultDenseCap;
    }
    return cap;
}

int run_spectrum(const levelwise::TreeShape& shape, const std::string& format, double tol,
                 bool with_verify, bool laplacian, std::int64_t dense_cap) {
    const levelwise::SpectrumReport report = levelwise::full_spectrum(shape, tol);
    std::optional<levelwise::VerifySummary> verify;
    if (with_verify) verify = levelwise::verify_shape(shape, tol, dense_cap);

    if (format == "json") {
        std::cout << levelwise::build_document(shape, report, verify, laplacian).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << levelwise::render_csv(report, laplacian);
    } else {
        std::cout << levelwise::render_table(report, laplacian);
    }
    if (verify && !verify->ok()) {
        std::cerr << levelwise::render_verify(*verify);
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_tree(const levelwise::TreeShape& shape, bool with_degrees, std::int64_t max_edges) {
    const levelwise::OrderedTree tree = levelwise::build_ordered_tree(shape, max_edges + 1);
    std::string out;
    out.reserve(1 << 20);
    if (with_degrees) {
        for (std::int64_t v = 1; v <= tree.n; ++v) {
            out += "# " + std::to_string(v) + " " +
                   std::to_string(tree.degree[static_cast<std::size_t>(v - 1)]) + " " +
                   std::to_string(tree.level_of[static_cast<std::size_t>(v - 1)]) + "\n";
            if (out.size() > (1 << 20)) {
                std::fwrite(out.data(), 1, out.size(), stdout);
                out.clear();
            }
        }
    }
    for (const auto& [u, v] : tree.edges) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
        if (out.size() > (1 << 20)) {
            std::fwrite(out.data(), 1, out.size(), stdout);
            out.clear();
        }
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return kExitOk;
}

int run_verify(const levelwise::TreeShape& shape, double tol, std::int64_t dense_cap) {
    const levelwise::VerifySummary v = levelwise::verify_shape(shape, tol, dense_cap);
    std::cout << levelwise::render_verify(v);
    return v.ok() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randic-matrix spectra of level-wise regular trees"};
    app.require_subcommand(1);

    std::vector<int> degrees;
    int roots = 1;
    double tol = levelwise::kDefaultEigenTol;
    std::string format = "table";
    bool with_verify = false;
    bool laplacian = false;
    bool with_degrees = false;
    std::int64_t max_edges = 10'000'000;

    auto add_shape_options = [&](CLI::App* cmd) {
        cmd->add_option("--degrees", degrees, "degree sequence m_0,...,m_{h-1}")
            ->delimiter(',')
            ->required();
        cmd->add_option("--roots", roots, "number of adjacent roots (1 or 2)");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "compute the full spectrum");
    add_shape_options(spectrum);
    spectrum->add_option("--format", format, "output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    spectrum->add_option("--tol", tol, "eigenvalue tolerance");
    spectrum->add_flag("--verify", with_verify, "also run the dense oracle cross-check");
    spectrum->add_flag("--laplacian", laplacian,
                       "report the normalized-Laplacian values 1 - rho instead");

    CLI::App* tree = app.add_subcommand("tree", "emit the tree edge list");
    add_shape_options(tree);
    tree->add_flag("--with-degrees", with_degrees, "prefix '# vertex degree level' lines");
    tree->add_option("--max-edges", max_edges, "refuse trees with more edges than this");

    CLI::App* verify = app.add_subcommand("verify", "cross-check fast path against the dense oracle");
    add_shape_options(verify);
    verify->add_option("--tol", tol, "eigenvalue tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::int64_t dense_cap = dense_cap_from_env();
    try {
        const levelwise::TreeShape shape = levelwise::validate_shape(degrees, roots);
        if (spectrum->parsed())
            return run_spectrum(shape, format, tol, with_verify, laplacian, dense_cap);
        if (tree->parsed()) return run_tree(shape, with_degrees, max_edges);
        return run_verify(shape, tol, dense_cap);
    } catch (const levelwise::error& e) {
        std::cerr << levelwise::errc_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == levelwise::errc::multiplicity_mismatch ? kExitInternal : kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    }
}
