#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lrc/approx.hpp"
#include "lrc/dp_solver.hpp"
#include "lrc/errors.hpp"
#include "lrc/gen.hpp"
#include "lrc/io.hpp"
#include "lrc/oracle.hpp"
#include "lrc/reduction.hpp"
#include "lrc/svg.hpp"

using namespace lrc;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

double msSince(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

long long defaultBudget() {
    if (const char* env = std::getenv("LRC_SOLVER_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 20'000'000;
}

std::string stem(const std::string& path) {
    size_t dot = path.rfind(".json");
    return dot == std::string::npos ? path : path.substr(0, dot);
}

void emitSolution(const std::string& instPath, const LayeredGraph& g, const std::string& solver,
                  const Representation& w, RunReport rep, std::string outPath,
                  std::string reportPath) {
    rep.instanceDigest = instanceDigest(g);
    rep.solver = solver;
    if (outPath.empty()) outPath = stem(instPath) + "." + solver + ".sol.json";
    if (reportPath.empty()) reportPath = stem(instPath) + "." + solver + ".report.json";
    writeFile(outPath, serializeRepresentation(w));
    writeFile(reportPath, serializeReport(rep));
    std::cout << solver << ": " << rep.contacts << " contacts, witness " << outPath
              << ", report " << reportPath << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"layered rectangle contact solver suite"};
    app.require_subcommand(1);

    std::string instPath, repPath, formulaPath, outPath, reportPath, assignmentStr;
    std::string modelOverride, variantStr = "triangulated";
    long long budget = defaultBudget();
    long long kTarget = -1;
    bool framed = false;
    int ell = 0;
    double eps = 0.0;
    int maxColumns = 0;
    long long oracleCap = 100'000'000;
    int genLayers = 3, genPerLayer = 2, genMaxWidth = 3, genEdgePercent = 60;
    std::uint64_t genSeed = 1;

    auto addBudget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "solver state budget (env LRC_SOLVER_BUDGET)");
        cmd->add_option("--max-columns", maxColumns, "bounding-box width for all drawings");
    };

    CLI::App* solve = app.add_subcommand("solve", "exact optimum via the cut dynamic program");
    solve->add_option("instance", instPath)->required();
    solve->add_option("-o,--out", outPath);
    solve->add_option("--report", reportPath);
    addBudget(solve);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force optimum (small instances)");
    oracle->add_option("instance", instPath)->required();
    oracle->add_option("-o,--out", outPath);
    oracle->add_option("--report", reportPath);
    oracle->add_option("--width-budget", maxColumns, "explicit placement window");
    oracle->add_option("--cap", oracleCap, "enumeration cap");

    CLI::App* approx = app.add_subcommand("approx", "1/2-approximation over two-layer slices");
    approx->add_option("instance", instPath)->required();
    approx->add_option("-o,--out", outPath);
    approx->add_option("--report", reportPath);
    addBudget(approx);

    CLI::App* ptas = app.add_subcommand("ptas", "(1-1/l)-approximation via layer slices");
    ptas->add_option("instance", instPath)->required();
    ptas->add_option("-l,--l", ell, "slice height l");
    ptas->add_option("--eps", eps, "epsilon; l = ceil(1/eps)");
    ptas->add_option("-o,--out", outPath);
    ptas->add_option("--report", reportPath);
    addBudget(ptas);

    CLI::App* check = app.add_subcommand("check", "validate a representation");
    check->add_option("instance", instPath)->required();
    check->add_option("representation", repPath)->required();
    check->add_option("--k", kTarget, "require at least k contacts");
    check->add_option("--model", modelOverride, "force integer|rational evaluation");

    CLI::App* gen = app.add_subcommand("gen-random", "deterministic random instance");
    gen->add_option("--layers", genLayers);
    gen->add_option("--per-layer", genPerLayer);
    gen->add_option("--max-width", genMaxWidth);
    gen->add_option("--edge-percent", genEdgePercent);
    gen->add_option("--seed", genSeed)->required();
    gen->add_option("-o,--out", outPath);

    CLI::App* reduce = app.add_subcommand("reduce", "compile a monotone formula to an instance");
    reduce->add_option("formula", formulaPath)->required();
    reduce->add_option("--variant", variantStr, "triangulated|planar");
    reduce->add_flag("--framed", framed);
    reduce->add_option("-o,--out", outPath);
    reduce->add_option("--report", reportPath);

    CLI::App* wit = app.add_subcommand("witness", "canonical drawing for an assignment");
    wit->add_option("formula", formulaPath)->required();
    wit->add_option("assignment", assignmentStr, "one 0/1 per variable, e.g. 101")->required();
    wit->add_option("--variant", variantStr, "triangulated|planar");
    wit->add_flag("--framed", framed);
    wit->add_option("-o,--out", outPath);

    CLI::App* render = app.add_subcommand("render", "render a representation to SVG");
    render->add_option("instance", instPath)->required();
    render->add_option("representation", repPath)->required();
    render->add_option("-o,--out", outPath)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInput;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        SolveConfig cfg;
        cfg.maxStates = budget;
        if (maxColumns > 0) cfg.maxColumns = maxColumns;

        if (*solve) {
            LayeredGraph g = parseInstance(readFile(instPath));
            SolveResult r = solveExact(g, cfg);
            RunReport rep;
            rep.command = "solve";
            rep.contacts = r.contacts;
            rep.optReference = r.contacts;
            rep.ratio = {1, 1};
            rep.visitedStates = r.stats.visitedStates;
            rep.stateBound = r.stats.stateBound;
            rep.wallMs = msSince(t0);
            emitSolution(instPath, g, "exact", r.witness, rep, outPath, reportPath);
        } else if (*oracle) {
            LayeredGraph g = parseInstance(readFile(instPath));
            OracleConfig ocfg;
            if (maxColumns > 0) ocfg.widthBudget = maxColumns;
            ocfg.enumerationCap = oracleCap;
            OracleResult r = bruteForce(g, ocfg);
            RunReport rep;
            rep.command = "oracle";
            rep.contacts = r.contacts;
            rep.optReference = r.contacts;
            rep.ratio = {1, 1};
            rep.wallMs = msSince(t0);
            emitSolution(instPath, g, "oracle", r.witness, rep, outPath, reportPath);
        } else if (*approx) {
            LayeredGraph g = parseInstance(readFile(instPath));
            ApproxReport r = approxHalf(g, cfg);
            RunReport rep;
            rep.command = "approx";
            rep.contacts = r.totalContacts;
            rep.ratio = r.ratioBound;
            rep.wallMs = msSince(t0);
            emitSolution(instPath, g, "approx", r.witness, rep, outPath, reportPath);
        } else if (*ptas) {
            if (ell <= 0) {
                if (eps <= 0.0) throw std::invalid_argument("ptas needs --l or --eps");
                ell = static_cast<int>(std::ceil(1.0 / eps));
            }
            LayeredGraph g = parseInstance(readFile(instPath));
            ApproxReport r = approxPtas(g, ell, cfg);
            RunReport rep;
            rep.command = "ptas l=" + std::to_string(ell);
            rep.contacts = r.totalContacts;
            rep.ratio = r.ratioBound;
            rep.wallMs = msSince(t0);
            emitSolution(instPath, g, "ptas", r.witness, rep, outPath, reportPath);
        } else if (*check) {
            LayeredGraph g = parseInstance(readFile(instPath));
            Representation r = parseRepresentation(readFile(repPath));
            if (modelOverride == "integer") r.model = CoordModel::Integer;
            else if (modelOverride == "rational") r.model = CoordModel::Rational;
            else if (!modelOverride.empty())
                throw std::invalid_argument("--model must be integer or rational");
            ContactReport rep = evaluate(g, r);
            std::cout << (rep.valid ? "valid" : "INVALID") << ", " << rep.totalContacts
                      << " contacts\n";
            for (const auto& v : rep.orderViolations)
                std::cout << "  order violation: (" << v.a.layer << "," << v.a.pos << ") vs ("
                          << v.b.layer << "," << v.b.pos << ")\n";
            for (const auto& fa : rep.falseAdjacencies)
                std::cout << "  false adjacency: (" << fa.a.layer << "," << fa.a.pos << ") vs ("
                          << fa.b.layer << "," << fa.b.pos << "), overlap " << fa.overlap.str()
                          << "\n";
            bool ok = rep.valid && (kTarget < 0 || rep.totalContacts >= kTarget);
            if (kTarget >= 0)
                std::cout << "target k=" << kTarget << ": " << (ok ? "met" : "not met") << "\n";
            return ok ? kExitValid : kExitInvalid;
        } else if (*gen) {
            RandomSpec spec{genLayers, genPerLayer, genMaxWidth, genEdgePercent};
            LayeredGraph g = randomInstance(spec, genSeed);
            std::string text = serializeInstance(g);
            if (outPath.empty()) outPath = "random-" + std::to_string(genSeed) + ".json";
            writeFile(outPath, text);
            std::cout << "wrote " << outPath << " (" << g.vertexCount() << " vertices, "
                      << g.edgeCount() << " edges)\n";
        } else if (*reduce) {
            RectilinearFormula f = parseFormula(readFile(formulaPath));
            ReductionVariant variant = variantStr == "planar" ? ReductionVariant::PlanarPruned
                                                              : ReductionVariant::Triangulated;
            ReductionInstance inst = compile(f, variant, framed);
            if (outPath.empty()) outPath = stem(formulaPath) + ".instance.json";
            writeFile(outPath, serializeInstance(inst.graph));
            RunReport rep;
            rep.command = "reduce";
            rep.instanceDigest = instanceDigest(inst.graph);
            rep.solver = "reduction";
            rep.contacts = inst.k;
            rep.wallMs = msSince(t0);
            if (reportPath.empty()) reportPath = stem(formulaPath) + ".reduce.report.json";
            writeFile(reportPath, serializeReport(rep));
            std::cout << "wrote " << outPath << ": " << inst.graph.vertexCount()
                      << " vertices, k=" << inst.k << ", box width " << inst.boxWidth() << "\n";
        } else if (*wit) {
            RectilinearFormula f = parseFormula(readFile(formulaPath));
            ReductionVariant variant = variantStr == "planar" ? ReductionVariant::PlanarPruned
                                                              : ReductionVariant::Triangulated;
            ReductionInstance inst = compile(f, variant, framed);
            if (assignmentStr.size() != f.variables.size())
                throw std::invalid_argument("assignment must give one 0/1 per variable");
            std::vector<bool> a;
            for (char c : assignmentStr) {
                if (c != '0' && c != '1')
                    throw std::invalid_argument("assignment characters must be 0 or 1");
                a.push_back(c == '1');
            }
            Representation w = witness(inst, a);
            ContactReport rep = evaluate(inst.graph, w);
            if (outPath.empty()) outPath = stem(formulaPath) + ".witness.json";
            writeFile(outPath, serializeRepresentation(w));
            std::cout << "wrote " << outPath << ": " << rep.totalContacts << " of k=" << inst.k
                      << " contacts, " << unsatisfiedCount(f, a) << " unsatisfied clauses\n";
        } else if (*render) {
            LayeredGraph g = parseInstance(readFile(instPath));
            Representation r = parseRepresentation(readFile(repPath));
            writeFile(outPath, renderSvg(g, r));
            std::cout << "wrote " << outPath << "\n";
        }
        return kExitValid;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
