// Command-line front end: validate quadric systems, check the Delzant
// property, print construction reports, run the sampling certifier, and emit
// canonical example documents.
//
// Exit codes: 0 success, 1 mathematical failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toriclag/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

std::string read_input_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw toriclag::ParseError("cannot open \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// The stacked system only exists when the pair leaves dim S = n + ell - m
// nonnegative; otherwise it would have more quadrics than coordinates.
bool stacked_formable(const toriclag::InputDocument& doc) {
    return doc.gamma.num_quadrics() + doc.delta.num_quadrics() <= doc.m;
}

int cmd_validate(const std::string& path, bool as_json) {
    using namespace toriclag;
    InputDocument doc = parse_input(read_input_file(path));
    ValidationVerdict vg = validate(doc.gamma);
    ValidationVerdict vd = validate(doc.delta);
    if (!stacked_formable(doc)) {
        if (as_json) {
            nlohmann::ordered_json out{{"gamma", validation_json(vg)},
                                       {"delta", validation_json(vd)},
                                       {"stacked", nullptr},
                                       {"all_pass", false}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << validation_text(vg, "gamma") << validation_text(vd, "delta");
            std::cout << "stacked: skipped (more quadrics than coordinates, dim S < 0)\n";
            std::cout << "result: conditions violated\n";
        }
        return kExitMathFailure;
    }
    ValidationVerdict vs = validate(stack(doc.gamma, doc.delta));
    bool ok = vg.all_pass() && vd.all_pass() && vs.all_pass();
    if (as_json) {
        nlohmann::ordered_json out{{"gamma", validation_json(vg)},
                                   {"delta", validation_json(vd)},
                                   {"stacked", validation_json(vs)},
                                   {"all_pass", ok}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << validation_text(vg, "gamma") << validation_text(vd, "delta") << validation_text(vs, "stacked");
        std::cout << "result: " << (ok ? "all conditions pass" : "conditions violated") << "\n";
    }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_delzant(const std::string& path, const std::string& which, bool as_json) {
    using namespace toriclag;
    InputDocument doc = parse_input(read_input_file(path));
    if (which == "stacked" && !stacked_formable(doc)) {
        std::cerr << "error: stacked system not formable (more quadrics than coordinates, dim S < 0)\n";
        return kExitMathFailure;
    }
    QuadricSystem sys = which == "gamma"  ? doc.gamma
                        : which == "delta" ? doc.delta
                                           : stack(doc.gamma, doc.delta);
    EmbeddingResult res = embedding_criterion(sys);
    if (!res.validation.all_pass()) {
        if (as_json) {
            nlohmann::ordered_json out{{"system", which},
                                       {"validation", validation_json(res.validation)},
                                       {"delzant", nullptr}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << validation_text(res.validation, which);
            std::cout << "result: validation failed, Delzant not evaluated\n";
        }
        return kExitMathFailure;
    }
    Polyhedron poly = build_polyhedron(gale_dual(sys));
    if (as_json) {
        nlohmann::ordered_json out{{"system", which},
                                   {"validation", validation_json(res.validation)},
                                   {"delzant", delzant_json(poly, *res.delzant)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << delzant_text(poly, *res.delzant, which);
    }
    return res.delzant->is_delzant ? kExitOk : kExitMathFailure;
}

int cmd_report(const std::string& path, bool as_json) {
    using namespace toriclag;
    InputDocument doc = parse_input(read_input_file(path));
    ConstructionReport rep = build_construction(doc.gamma, doc.delta);
    if (as_json) std::cout << report_json(rep).dump(2) << "\n";
    else std::cout << report_text(rep);
    return rep.valid() ? kExitOk : kExitMathFailure;
}

int cmd_sample(const std::string& path, int count, unsigned long long seed, const toriclag::Tolerances& tol,
               bool as_json) {
    using namespace toriclag;
    InputDocument doc = parse_input(read_input_file(path));
    ConstructionReport rep = build_construction(doc.gamma, doc.delta);
    if (!rep.valid()) {
        if (as_json) std::cout << report_json(rep).dump(2) << "\n";
        else std::cout << report_text(rep);
        std::cerr << "sample: construction invalid, nothing to sample\n";
        return kExitMathFailure;
    }
    BatchSummary sum = verify_batch(doc.gamma, doc.delta, count, seed, tol);
    if (as_json) std::cout << batch_json(sum, tol).dump(2) << "\n";
    else std::cout << batch_text(sum);
    return sum.pass_fraction == 1.0 ? kExitOk : kExitMathFailure;
}

int cmd_examples(const std::string& name, int m) {
    using namespace toriclag;
    std::cout << serialize_input(example_document(name, m));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian-minimal Lagrangian construction toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::string which = "stacked";
    std::string example_name;
    bool as_json = false;
    int count = 100;
    unsigned long long seed = 0;
    int example_m = 3;
    toriclag::Tolerances tol;

    CLI::App* validate = app.add_subcommand("validate", "Check conditions (a)-(c) for gamma, delta, and stacked");
    validate->add_option("file", path, "Input document (\"-\" for stdin)")->required();
    validate->add_flag("--json", as_json, "JSON output");

    CLI::App* delzant = app.add_subcommand("delzant", "Check the Delzant property of one associated polyhedron");
    delzant->add_option("file", path, "Input document (\"-\" for stdin)")->required();
    delzant->add_option("--system", which, "Which system to check")
        ->check(CLI::IsMember({"gamma", "delta", "stacked"}));
    delzant->add_flag("--json", as_json, "JSON output");

    CLI::App* report = app.add_subcommand("report", "Full construction report");
    report->add_option("file", path, "Input document (\"-\" for stdin)")->required();
    report->add_flag("--json", as_json, "JSON output");

    CLI::App* sample = app.add_subcommand("sample", "Sample and certify the Lagrangian/immersion properties");
    sample->add_option("file", path, "Input document (\"-\" for stdin)")->required();
    sample->add_option("--count", count, "Number of samples");
    sample->add_option("--seed", seed, "Random seed");
    sample->add_option("--tol-omega", tol.tol_omega, "Max allowed symplectic pairing");
    sample->add_option("--tol-rank", tol.tol_rank, "Min allowed singular value ratio");
    sample->add_option("--margin", tol.interior_margin, "Min allowed sampled y coordinate");
    sample->add_flag("--json", as_json, "JSON output");

    CLI::App* examples = app.add_subcommand("examples", "Emit a canonical input document");
    examples->add_option("--name", example_name, "cm, real, or projective")->required();
    examples->add_option("-m", example_m, "Ambient complex dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 returns 0 for --help/--version; anything else is bad usage.
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(path, as_json);
        if (delzant->parsed()) return cmd_delzant(path, which, as_json);
        if (report->parsed()) return cmd_report(path, as_json);
        if (sample->parsed()) {
            if (count < 0) {
                std::cerr << "error: --count must be nonnegative\n";
                return kExitInputError;
            }
            return cmd_sample(path, count, seed, tol, as_json);
        }
        if (examples->parsed()) return cmd_examples(example_name, example_m);
    } catch (const toriclag::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitInputError;
}
