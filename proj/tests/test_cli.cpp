// End-to-end checks of the command-line binary: exit codes, JSON schema,
// determinism, verification round trips.  argv[1] is the binary path.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <regex>
#include <string>

#include <json.hpp>

namespace {

int checks = 0, failures = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "[FAIL] " << what << "\n";
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmdline) {
    RunResult r;
    FILE* pipe = popen((cmdline + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string strip_wall_ms(std::string s) {
    return std::regex_replace(s, std::regex("\"wall_ms\": [0-9]+"),
                              "\"wall_ms\": 0");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-ulab-binary>\n";
        return 1;
    }
    const std::string bin = argv[1];

    // semigroup invariants as JSON
    {
        auto r = run(bin + " sgp-info --sgp 4,13 --output json");
        expect(r.exit_code == 0, "sgp-info exit code");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(!j.is_discarded(), "sgp-info emits valid JSON");
        expect(j["schema"] == "ulrich-lab/1", "schema tag");
        expect(j["result"]["frobenius"] == 35, "frobenius of <4,13>");
        expect(j["result"]["conductor"] == 36, "conductor of <4,13>");
        expect(j["result"]["multiplicity"] == 4, "multiplicity of <4,13>");
        expect(j["result"]["symmetric"] == true, "<4,13> is symmetric");
    }

    // exit code 2 on usage and precondition errors
    expect(run(bin + " sgp-info --sgp 4,13 --no-such-flag").exit_code == 2,
           "unknown flag exits 2");
    expect(run(bin + " sgp-info --sgp 4,x").exit_code == 2,
           "malformed generators exit 2");
    expect(run(bin + " sgp-info --sgp 4,6").exit_code == 2,
           "gcd violation exits 2");
    expect(run(bin + " nonsense").exit_code == 2, "unknown command exits 2");
    expect(run(bin + " reproduce no-such-target").exit_code == 2,
           "unknown reproduce target exits 2");
    expect(run(bin + " ulrich-enumerate --sgp 3,7 --field Q").exit_code == 2,
           "infinite-field enumeration exits 2");

    // exit code 3 on budget exhaustion
    expect(run(bin + " ulrich-enumerate --sgp 4,13 --field F2 --budget 10")
                   .exit_code == 3,
           "tiny budget exits 3");

    // enumeration payload and determinism
    {
        auto r1 = run(bin + " ulrich-enumerate --sgp 3,7 --field F3 --output json");
        auto r2 = run(bin + " ulrich-enumerate --field F3 --output json --sgp 3,7");
        expect(r1.exit_code == 0, "enumerate exit code");
        expect(strip_wall_ms(r1.out) == strip_wall_ms(r2.out),
               "JSON output is deterministic modulo wall time");
        auto j = nlohmann::json::parse(r1.out);
        expect(j["result"]["count"] == 2, "two ideals over F3");
        for (const auto& cert : j["result"]["certificates"]) {
            expect(cert["checks"]["stable"] == true &&
                       cert["checks"]["free"] == true &&
                       cert["checks"]["not_principal"] == true &&
                       cert["checks"]["conductor_contained"] == true,
                   "printed certificate carries a fully true checklist");
            expect(cert["family"]["name"] == "mult3-regular-i1",
                   "certificates carry their classification");
        }
        expect(j["warnings"].size() >= 1, "warnings are part of the envelope");
    }

    // verification round trips
    {
        auto r = run(bin +
                     " ulrich-verify --sgp 3,7 --field F3 --gens t^6+t^7,t^10 "
                     "--output json");
        expect(r.exit_code == 0, "verify exit code");
        auto j = nlohmann::json::parse(r.out);
        expect(j["result"]["ulrich"] == true, "the family ideal verifies");
        expect(j["result"]["certificate"]["colength"] == 3,
               "certificate colength");

        auto bad = run(bin +
                       " ulrich-verify --sgp 3,7 --field F3 --gens t^6,t^10 "
                       "--output json");
        expect(bad.exit_code == 0, "negative verification still exits 0");
        auto jb = nlohmann::json::parse(bad.out);
        expect(jb["result"]["ulrich"] == false, "monomial pair is rejected");
        expect(jb["result"]["checks"]["stable"] == false,
               "stability is the failing check");

        auto q = run(bin +
                     " ulrich-verify --sgp 4,13 --field Q "
                     "--gens \"t^12+4/3t^17+1/2t^26,t^21+2/3t^26\" "
                     "--output json");
        expect(q.exit_code == 0, "rational verification exit code");
        auto jq = nlohmann::json::parse(q.out);
        expect(jq["result"]["ulrich"] == true, "rational family ideal verifies");

        // negative coefficients: t^6 - t^7 = t^6 + 2 t^7 over F3
        auto neg = run(bin +
                       " ulrich-verify --sgp 3,7 --field F3 "
                       "--gens \"t^6-t^7,t^10\" --output json");
        expect(neg.exit_code == 0, "negative-coefficient parse");
        expect(nlohmann::json::parse(neg.out)["result"]["ulrich"] == true,
               "negative-coefficient family member verifies");
    }

    // job echo normalization round-trips
    {
        auto r1 = run(bin + " betti --sgp 3,4,5 --nmax 6 --output json");
        auto j1 = nlohmann::json::parse(r1.out);
        expect(j1["job"]["command"] == "betti", "job echo command");
        expect(j1["job"]["nmax"] == 6, "job echo nmax");
        expect(j1["result"]["betti_over_A"]["values"] ==
                   nlohmann::json::array({1, 3, 6, 12, 24, 48, 96}),
               "betti values over A");
        auto r2 = run(bin + " betti --output json --nmax 6 --sgp 3,4,5");
        expect(strip_wall_ms(r1.out) == strip_wall_ms(r2.out),
               "flag order does not change the normalized job");
    }

    expect(run(bin + " golod-check --nmax 10").exit_code == 0, "golod-check");
    expect(run(bin + " gluing --glue 3,5,9,2").exit_code == 0, "gluing");
    expect(run(bin + " reproduce ex0").exit_code == 0, "reproduce ex0");
    expect(run(bin + " reproduce thm6.1 --sgp 3,4,5").exit_code == 0,
           "reproduce thm6.1 with explicit semigroup");
    expect(run(bin + " --help").exit_code == 0, "--help exits 0");

    // monomial enumeration through the CLI
    {
        auto r = run(bin + " ulrich-monomial --sgp 2,9 --output json");
        auto j = nlohmann::json::parse(r.out);
        expect(j["result"]["count"] == 4, "monomial ladder over <2,9>");
    }

    // family tables carry symbolic side conditions
    {
        auto r = run(bin + " ulrich-families --sgp 4,13 --field F2");
        expect(r.exit_code == 0, "ulrich-families exit code");
        expect(r.out.find("alpha_1^3 = 2*beta") != std::string::npos,
               "side condition printed for the seventh family");
        expect(r.out.find("beta != 0") != std::string::npos,
               "side condition printed for the first family");
    }

    std::cout << checks - failures << "/" << checks << " CLI checks passed\n";
    return failures == 0 ? 0 : 1;
}
