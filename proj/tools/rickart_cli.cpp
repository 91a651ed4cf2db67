#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rickart/dot.hpp"
#include "rickart/harness.hpp"

namespace {

using namespace rickart;

// Ring shorthand: "M<n>(F<p>)" or "Qi:n=<n>"
RingDescriptor parseRingSpec(const std::string& s) {
    auto fail = [&]() -> RingDescriptor {
        throw ParseError("bad ring '" + s +
                         "'; admitted proper rings: \"Qi:n=<n>\" and \"M<n>(F<p>)\" with p = 3 mod 4 "
                         "and n <= 2");
    };
    if (s.rfind("Qi:n=", 0) == 0) {
        std::size_t n = std::stoul(s.substr(5));
        if (n == 0) return fail();
        return makeRing(FieldDescriptor::qi(), n);
    }
    if (s.size() > 4 && s[0] == 'M') {
        auto open = s.find("(F");
        if (open == std::string::npos || s.back() != ')') return fail();
        std::size_t n = std::stoul(s.substr(1, open - 1));
        std::int64_t p = std::stoll(s.substr(open + 2, s.size() - open - 3));
        if (n == 0) return fail();
        return makeRing(FieldDescriptor::fp(p), n);
    }
    return fail();
}

void printMatrix(const Matrix& m) { std::cout << matrixToJson(m).dump() << "\n"; }

int cmdOrder(const std::string& sideName, const std::string& formName, const std::string& aPath,
             const std::string& bPath) {
    Matrix a = loadMatrix(aPath);
    Matrix b = loadMatrix(bPath);
    Side side = sideName == "left" ? Side::Left : Side::Right;
    if (formName == "all") {
        OrderReport r = equivalenceReport(a, b, side);
        nlohmann::json verdicts;
        for (const auto& [f, v] : r.verdicts) verdicts[formulationName(f)] = v;
        nlohmann::json out = {{"side", sideName}, {"verdicts", verdicts}, {"agreed", r.agreed}};
        std::cout << out.dump() << "\n";
        return r.agreed && r.holds() ? 0 : 1;
    }
    Formulation f = Formulation::PrimeForm;
    for (Formulation cand : allFormulations())
        if (formulationName(cand) == formName) f = cand;
    bool holds = starLe(a, b, side, f);
    nlohmann::json out = {{"side", sideName}, {"formulation", formName}, {"holds", holds}};
    std::cout << out.dump() << "\n";
    return holds ? 0 : 1;
}

int cmdHasse(const std::string& relation, const std::string& ringSpec, const std::string& outPath) {
    RingDescriptor d = parseRingSpec(ringSpec);
    if (!d.enumerable) throw NotEnumerable("hasse needs an enumerable ring");
    std::vector<Matrix> elements;
    std::function<bool(std::size_t, std::size_t)> rel;
    if (relation == "right-cstar" || relation == "left-cstar") {
        elements = enumerateMatrices(d.field, d.size, d.size);
        Side side = relation == "right-cstar" ? Side::Right : Side::Left;
        std::vector<PrimeQuadruple> cache;
        for (const auto& m : elements) cache.push_back(primes(m));
        rel = [&, side](std::size_t i, std::size_t j) {
            if (side == Side::Right)
                return elements[j] * cache[i].rightDouble.matrix() == elements[i] &&
                       elements[i] * cache[j].rightDouble.matrix() == elements[i];
            return cache[i].leftDouble.matrix() * elements[j] == elements[i] &&
                   cache[j].leftDouble.matrix() * elements[i] == elements[i];
        };
        PosetTable t = bruteForcePosetOps(elements.size(), rel);
        std::vector<std::string> labels;
        for (const auto& m : elements) labels.push_back(m.str());
        std::string dot = emitHasseDot(t, labels);
        if (outPath.empty()) {
            std::cout << dot;
        } else {
            std::ofstream out(outPath);
            out << dot;
        }
        return 0;
    }
    if (relation == "projections") {
        elements = enumerateProjections(d);
        PosetTable t = bruteForcePosetOps(elements.size(), [&](std::size_t i, std::size_t j) {
            return elements[i] * elements[j] == elements[i];
        });
        std::vector<std::string> labels;
        for (const auto& m : elements) labels.push_back(m.str());
        std::string dot = emitHasseDot(t, labels);
        if (outPath.empty()) {
            std::cout << dot;
        } else {
            std::ofstream out(outPath);
            out << dot;
        }
        return 0;
    }
    throw ParseError("unknown relation '" + relation + "' (use right-cstar, left-cstar, projections)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matrix *-ring toolkit: Moore-Penrose inverses, Rickart primes, "
                 "one-sided star orders, projection lattices"};
    app.require_subcommand(1);

    std::string aPath, bPath, xPath, ringSpec, sideName = "right", formName = "all";
    std::string relation = "right-cstar", outPath, suiteName = "all";
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    std::int64_t entryBound = 3;

    auto* cPinv = app.add_subcommand("pinv", "Moore-Penrose inverse of a matrix");
    cPinv->add_option("matrix", aPath)->required();

    auto* cPrimes = app.add_subcommand("primes", "the four Rickart prime projections");
    cPrimes->add_option("matrix", aPath)->required();

    auto* cOrder = app.add_subcommand("order", "evaluate a one-sided star order");
    cOrder->add_option("--side", sideName)->check(CLI::IsMember({"left", "right"}));
    cOrder->add_option("--formulation", formName)
        ->check(CLI::IsMember({"prime", "stareq", "range", "exist", "witness", "all"}));
    cOrder->add_option("a", aPath)->required();
    cOrder->add_option("b", bPath)->required();

    auto* cMeet = app.add_subcommand("meet", "meet of a and b inside [0, bound]");
    cMeet->add_option("--bound", xPath)->required();
    cMeet->add_option("a", aPath)->required();
    cMeet->add_option("b", bPath)->required();

    auto* cJoin = app.add_subcommand("join", "join of a and b inside [0, bound]");
    cJoin->add_option("--bound", xPath)->required();
    cJoin->add_option("a", aPath)->required();
    cJoin->add_option("b", bPath)->required();

    auto* cSegment = app.add_subcommand("segment", "enumerate an initial segment [0, top]");
    cSegment->add_option("--top", xPath)->required();
    cSegment->add_option("--ring", ringSpec);

    auto* cHasse = app.add_subcommand("hasse", "covering relation of an exhaustive poset as DOT");
    cHasse->add_option("--relation", relation);
    cHasse->add_option("--ring", ringSpec)->required();
    cHasse->add_option("-o,--output", outPath);

    auto* cVerify = app.add_subcommand("verify", "run property suites");
    cVerify->add_option("--suite", suiteName);
    cVerify->add_option("--ring", ringSpec)->required();
    cVerify->add_option("--samples", samples);
    cVerify->add_option("--seed", seed);
    cVerify->add_option("--entry-bound", entryBound);

    auto* cProper = app.add_subcommand("proper", "certify or refute properness of a ring");
    cProper->add_option("--ring", ringSpec)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cPinv->parsed()) {
            printMatrix(pinv(loadMatrix(aPath)));
            return 0;
        }
        if (cPrimes->parsed()) {
            auto q = primes(loadMatrix(aPath));
            nlohmann::json out = {{"lp", matrixToJson(q.leftPrime.matrix())},
                                  {"rp", matrixToJson(q.rightPrime.matrix())},
                                  {"ld", matrixToJson(q.leftDouble.matrix())},
                                  {"rd", matrixToJson(q.rightDouble.matrix())}};
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (cOrder->parsed()) return cmdOrder(sideName, formName, aPath, bPath);
        if (cMeet->parsed()) {
            printMatrix(segmentMeet(loadMatrix(xPath), loadMatrix(aPath), loadMatrix(bPath)));
            return 0;
        }
        if (cJoin->parsed()) {
            printMatrix(segmentJoin(loadMatrix(xPath), loadMatrix(aPath), loadMatrix(bPath)));
            return 0;
        }
        if (cSegment->parsed()) {
            Matrix top = loadMatrix(xPath);
            if (!ringSpec.empty() && parseRingSpec(ringSpec) != ringOf(top))
                throw ParseError("--ring disagrees with the matrix field/shape");
            nlohmann::json out = nlohmann::json::array();
            for (const Matrix& m : initialSegment(top)) out.push_back(matrixToJson(m));
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (cHasse->parsed()) return cmdHasse(relation, ringSpec, outPath);
        if (cProper->parsed()) {
            PropernessResult r = checkProper(parseRingSpec(ringSpec));
            nlohmann::json out = {{"proper", r.proper}, {"reason", r.reason}};
            if (r.witness) out["witness"] = matrixToJson(*r.witness);
            std::cout << out.dump() << "\n";
            return r.proper ? 0 : 1;
        }
        if (cVerify->parsed()) {
            RingDescriptor d = parseRingSpec(ringSpec);
            RingUniverse u{d,
                           d.enumerable ? RingUniverse::Mode::Exhaustive
                                        : RingUniverse::Mode::Sampled,
                           samples, seed, entryBound};
            std::vector<std::string> names =
                suiteName == "all" ? suiteNames() : std::vector<std::string>{suiteName};
            bool anyFailure = false;
            nlohmann::json out = nlohmann::json::array();
            for (const auto& name : names) {
                if (!d.enumerable && (name == "orthomodular" || name == "maximal")) {
                    if (suiteName == "all") continue; // enumerable-only suites
                }
                SuiteReport r = runSuite(name, u);
                anyFailure = anyFailure || !r.ok();
                out.push_back(r.toJson());
            }
            std::cout << out.dump(2) << "\n";
            return anyFailure ? 1 : 0;
        }
    } catch (const rickart::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
