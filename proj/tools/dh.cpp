#include "dh/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

std::string join(const std::vector<std::string>& xs)
{
    std::string out;
    for (const auto& x : xs)
        out += (out.empty() ? "" : ", ") + x;
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homology and colimits of group diagrams over small categories"};
    std::string command, file, format = "text";
    dh::RunOptions opts;
    std::size_t dim = 0;

    app.add_option("command", command, "One of: " + join(dh::command_names()))
        ->required()
        ->check(CLI::IsMember(dh::command_names()));
    app.add_option("file", file, "Diagram description (JSON)")->required();
    app.add_option("--max-dim", opts.max_dim, "Highest dimension to compute")->capture_default_str();
    auto* dim_opt = app.add_option("--dim", dim, "Truncation dimension of the homotopy colimit (default max-dim + 1)");
    app.add_option("--max-cosets", opts.max_cosets, "Coset enumeration bound")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", opts.seed, "Seed for sampled checks")->capture_default_str();
    CLI11_PARSE(app, argc, argv);
    if (*dim_opt)
        opts.dim = dim;

    try {
        dh::Report report = dh::run(command, dh::read_document(file), opts);
        if (format == "json") {
            std::cout << report.to_json().dump(2) << '\n';
        } else {
            for (const auto& line : report.text)
                std::cout << line << '\n';
            for (const auto& w : report.warnings)
                std::cerr << "warning: " << w << '\n';
        }
        return report.status;
    } catch (const dh::Error& e) {
        if (format == "json") {
            nlohmann::ordered_json j = {{"command", command},
                                        {"status", dh::exit_status(e.kind())},
                                        {"error", {{"kind", dh::to_string(e.kind())}, {"message", e.what()}}}};
            std::cout << j.dump(2) << '\n';
        }
        std::cerr << "error (" << dh::to_string(e.kind()) << "): " << e.what() << '\n';
        return dh::exit_status(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error (schema): " << e.what() << '\n';
        return 1;
    }
}
