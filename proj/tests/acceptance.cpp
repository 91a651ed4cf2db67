// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Exhaustive checks run over M2(F3); randomized checks over Q(i)
// matrix rings with fixed seeds. All comparisons are exact.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rickart/dot.hpp"
#include "rickart/harness.hpp"

using namespace rickart;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, double seconds, double budget,
            const std::string& note = "") {
    bool ok = pass && seconds < budget;
    if (!ok) ++g_failures;
    std::printf("%s criterion %2d: %-28s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                index, name.c_str(), seconds, budget, note.empty() ? "" : " -- ",
                note.c_str());
    std::fflush(stdout);
}

template <class Fn>
void criterion(int index, const std::string& name, double budget, Fn body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        note = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(index, name, pass, secs, budget, note);
}

RingUniverse f3Exhaustive() {
    return {makeRing(FieldDescriptor::fp(3), 2), RingUniverse::Mode::Exhaustive, 0, 0, 0};
}

RingUniverse qiSampled(std::size_t n, std::size_t count, std::uint64_t seed) {
    return {makeRing(FieldDescriptor::qi(), n), RingUniverse::Mode::Sampled, count, seed, 3};
}

bool suitesOk(std::string& note, const std::vector<std::pair<std::string, RingUniverse>>& runs) {
    for (const auto& [name, u] : runs) {
        SuiteReport r = runSuite(name, u);
        if (!r.ok()) {
            note = name + " on " + u.descriptor.str() + ": " +
                   std::to_string(r.failures.size()) + " failures, first: " +
                   r.failures[0].property;
            return false;
        }
    }
    return true;
}

struct CliResult {
    int exitCode;
    std::string out;
};

CliResult runCli(const std::string& args) {
    std::string cmd = std::string(RICKART_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

} // namespace

int main() {
    criterion(1, "penrose identities", 30, [](std::string& note) {
        return suitesOk(note, {{"penrose", qiSampled(2, 500, 11)},
                               {"penrose", qiSampled(3, 500, 12)},
                               {"penrose", f3Exhaustive()}});
    });

    criterion(2, "rickart primes + prop 2.2", 60, [](std::string& note) {
        return suitesOk(note, {{"primes", qiSampled(2, 500, 21)},
                               {"primes", qiSampled(3, 500, 22)},
                               {"primes", f3Exhaustive()},
                               {"prop22", qiSampled(2, 500, 23)},
                               {"prop22", qiSampled(3, 500, 24)},
                               {"prop22", f3Exhaustive()}});
    });

    criterion(3, "order axioms", 120, [](std::string& note) {
        return suitesOk(note, {{"order-axioms", f3Exhaustive()},
                               {"order-axioms", qiSampled(2, 500, 31)},
                               {"order-axioms", qiSampled(3, 500, 32)}});
    });

    criterion(4, "formulation equivalence", 120, [](std::string& note) {
        return suitesOk(note, {{"equivalence", f3Exhaustive()},
                               {"equivalence", qiSampled(2, 500, 41)},
                               {"equivalence", qiSampled(3, 500, 42)}});
    });

    criterion(5, "phi/psi isomorphism", 60, [](std::string& note) {
        return suitesOk(note, {{"iso", f3Exhaustive()}});
    });

    criterion(6, "meets and joins", 300, [](std::string& note) {
        return suitesOk(note, {{"meetjoin", f3Exhaustive()}});
    });

    criterion(7, "orthomodularity", 60, [](std::string& note) {
        return suitesOk(note, {{"orthomodular", f3Exhaustive()}});
    });

    criterion(8, "maximality and least element", 30, [](std::string& note) {
        return suitesOk(note, {{"maximal", f3Exhaustive()}});
    });

    criterion(9, "properness gate", 5, [](std::string& note) {
        for (std::size_t n : {1u, 2u, 3u})
            if (!checkProper(makeRing(FieldDescriptor::qi(), n)).proper) {
                note = "Q(i) n=" + std::to_string(n) + " not certified";
                return false;
            }
        for (std::int64_t p : {3, 7})
            for (std::size_t n : {1u, 2u})
                if (!checkProper(makeRing(FieldDescriptor::fp(p), n)).proper) {
                    note = "F" + std::to_string(p) + " n=" + std::to_string(n) + " not certified";
                    return false;
                }
        PropernessResult r = checkProper(makeRing(FieldDescriptor::fp(2), 2));
        if (r.proper || !r.witness) {
            note = "F2 n=2 not refuted with a witness";
            return false;
        }
        if (r.witness->isZero() || !(r.witness->star() * *r.witness).isZero()) {
            note = "F2 witness does not satisfy star(x) x = 0";
            return false;
        }
        return true;
    });

    criterion(10, "cli contract", 30, [](std::string& note) {
        std::string dir = "acceptance_tmp";
        std::filesystem::create_directories(dir);
        writeFile(dir + "/a.json",
                  R"({"field":{"kind":"Qi"},"rows":2,"cols":2,"entries":[["1","0"],["1","0"]]})");
        writeFile(dir + "/zero.json",
                  R"({"field":{"kind":"Qi"},"rows":2,"cols":2,"entries":[["0","0"],["0","0"]]})");
        writeFile(dir + "/e1.json",
                  R"({"field":{"kind":"Qi"},"rows":2,"cols":2,"entries":[["1","0"],["0","0"]]})");

        CliResult p = runCli("pinv " + dir + "/a.json");
        if (p.exitCode != 0 || matrixFromJson(nlohmann::json::parse(p.out)) !=
                                   matrixFromJson(nlohmann::json::parse(
                                       R"({"field":{"kind":"Qi"},"rows":2,"cols":2,)"
                                       R"("entries":[["1/2","1/2"],["0","0"]]})"))) {
            note = "pinv output mismatch: " + p.out;
            return false;
        }

        CliResult q = runCli("primes " + dir + "/a.json");
        if (q.exitCode != 0) {
            note = "primes exit " + std::to_string(q.exitCode);
            return false;
        }
        auto j = nlohmann::json::parse(q.out);
        Matrix rd = matrixFromJson(j.at("rd"));
        Matrix rp = matrixFromJson(j.at("rp"));
        Matrix ld = matrixFromJson(j.at("ld"));
        const FieldDescriptor qi = FieldDescriptor::qi();
        Matrix expRd(2, 2, qi), expRp(2, 2, qi), expLd(2, 2, qi);
        expRd.at(0, 0) = Scalar::one(qi);
        expRp.at(1, 1) = Scalar::one(qi);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t jx = 0; jx < 2; ++jx)
                expLd.at(i, jx) = Scalar::rational(Rational(1, 2));
        if (rd != expRd || rp != expRp || ld != expLd) {
            note = "primes quadruple mismatch";
            return false;
        }

        // exit-code contract: 0 when the relation holds (and agrees),
        // 1 when it does not, 2 on error
        if (runCli("order --side right --formulation all " + dir + "/zero.json " + dir + "/a.json")
                .exitCode != 0) {
            note = "order(0, b) should exit 0";
            return false;
        }
        if (runCli("order --side right --formulation prime " + dir + "/e1.json " + dir + "/a.json")
                .exitCode != 1) {
            note = "order(e1, a) should exit 1";
            return false;
        }
        if (runCli("order --side right --formulation all " + dir + "/zero.json " + dir +
                   "/missing.json")
                .exitCode != 2) {
            note = "order on a missing file should exit 2";
            return false;
        }

        // hasse output is byte-stable across runs
        CliResult h1 = runCli("hasse --relation projections --ring \"M2(F3)\"");
        CliResult h2 = runCli("hasse --relation projections --ring \"M2(F3)\"");
        if (h1.exitCode != 0 || h1.out.empty() || h1.out != h2.out) {
            note = "hasse output not byte-stable";
            return false;
        }
        CliResult h3 = runCli("hasse --relation right-cstar --ring \"M2(F3)\"");
        CliResult h4 = runCli("hasse --relation right-cstar --ring \"M2(F3)\"");
        if (h3.exitCode != 0 || h3.out != h4.out) {
            note = "right-cstar hasse output not byte-stable";
            return false;
        }
        return true;
    });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
