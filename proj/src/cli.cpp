#include "ulab/cli.hpp"

#include <chrono>
#include <ostream>

#include <CLI11.hpp>

#include "ulab/jsonio.hpp"
#include "ulab/reproduce.hpp"

namespace ulab {

namespace {

struct CommandResult {
    Json payload;
    std::vector<std::string> warnings;
    std::string table; // human-readable rendering
};

std::string symbolic_condition(const std::string& family) {
    if (family.rfind("mult3-regular", 0) == 0) return "alpha_0 != 0";
    if (family == "413-f1" || family == "413-f2") return "beta != 0";
    if (family == "413-f7") return "alpha_1^3 = 2*beta";
    if (family == "413-f8")
        return "alpha_1 = 0 if char k = 2; "
               "alpha_1 = alpha_2 = beta_1 = beta_2 = 0 if char k != 2";
    return "";
}

template <class K>
std::string certificate_line(const UlrichCertificate<K>& cert) {
    std::string s = "I = (";
    for (std::size_t i = 0; i < cert.gens_nf.size(); ++i) {
        if (i) s += ", ";
        s += cert.gens_nf[i].to_string();
    }
    s += ")  a=" + std::to_string(cert.a) + " b=" + std::to_string(cert.b) +
         " colength=" + std::to_string(cert.colength) +
         " mu=" + std::to_string(cert.mu) + " H1=<";
    for (std::size_t i = 0; i < cert.blowup_gens.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cert.blowup_gens[i]);
    }
    s += ">";
    return s;
}

std::string certificates_table(const std::vector<UlrichCertificate<Fp>>& certs) {
    std::string t;
    for (const auto& cert : certs) {
        t += certificate_line(cert);
        if (auto tag = classify(cert)) {
            t += "  family=" + tag->family;
            for (const auto& [n, v] : tag->coefficients)
                t += " " + n + "=" + v;
            auto cond = symbolic_condition(tag->family);
            if (!cond.empty()) t += "  [" + cond + "]";
        }
        t += "\n";
    }
    return t;
}

Json enum_result_json(const EnumResult& res) {
    Json j;
    j["count"] = res.certificates.size();
    Json certs = Json::array();
    for (const auto& c : res.certificates) certs.push_back(certificate_json(c));
    j["certificates"] = certs;
    j["stats"] = Json{{"tuples", res.stats.tuples},
                      {"candidates", res.stats.candidates}};
    return j;
}

SemigroupPtr semigroup_of(const JobSpec& job) {
    if (job.sgp.empty())
        throw PreconditionError("missing --sgp (comma-separated generators)");
    return make_semigroup(job.sgp);
}

CommandResult do_sgp_info(const JobSpec& job) {
    auto H = semigroup_of(job);
    CommandResult out;
    out.payload = semigroup_json(*H);
    out.payload["pseudo_frobenius"] = H->pseudo_frobenius();
    out.payload["gaps"] = H->gaps();
    std::string t = H->to_string() + ": frobenius=" +
                    std::to_string(H->frobenius()) +
                    " conductor=" + std::to_string(H->conductor()) +
                    " multiplicity=" + std::to_string(H->multiplicity()) +
                    " symmetric=" + (H->is_symmetric() ? "yes" : "no") +
                    " type=" + std::to_string(H->cm_type()) + "\n";
    out.table = t;
    return out;
}

template <class K>
CommandResult do_verify_typed(const JobSpec& job, const FieldSpec& field) {
    auto H = semigroup_of(job);
    Exp N = job.precision.value_or(default_precision(*H));
    auto gens = parse_poly_list<K>(job.gens, field, N);
    auto I = RingIdeal<K>::make(H, field, N, std::move(gens));
    auto outcome = is_ulrich(I);

    CommandResult out;
    out.payload["ulrich"] = outcome.ok;
    out.payload["checks"] = checks_json(outcome.checks);
    if (outcome.ok) {
        // refuse to print a certificate that does not re-verify
        auto again = is_ulrich(certificate_ideal(*outcome.cert, 2 * N));
        if (!again.ok)
            throw InternalError("certificate failed re-verification at "
                                "doubled precision: " + again.reason);
        out.payload["certificate"] = certificate_json(*outcome.cert);
        out.table = "Ulrich: yes\n" + certificate_line(*outcome.cert) + "\n";
    } else {
        out.payload["reason"] = outcome.reason;
        out.table = "Ulrich: no (" + outcome.reason + ")\n";
    }
    return out;
}

CommandResult do_verify(const JobSpec& job) {
    FieldSpec field = FieldSpec::parse(job.field);
    if (field.is_prime_field()) return do_verify_typed<Fp>(job, field);
    return do_verify_typed<Rat>(job, field);
}

CommandResult do_enumerate(const JobSpec& job) {
    auto H = semigroup_of(job);
    EnumOptions eo;
    eo.budget = job.budget;
    eo.jobs = job.jobs;
    eo.precision = job.precision;
    auto res = enumerate_ulrich(H, FieldSpec::parse(job.field), eo);
    CommandResult out;
    out.payload = enum_result_json(res);
    out.warnings = res.warnings;
    out.table = "found " + std::to_string(res.certificates.size()) +
                " Ulrich ideal(s)\n" + certificates_table(res.certificates);
    return out;
}

CommandResult do_monomial(const JobSpec& job) {
    auto H = semigroup_of(job);
    EnumOptions eo;
    eo.budget = job.budget;
    eo.precision = job.precision;
    auto res = enumerate_monomial_ulrich(H, eo);
    CommandResult out;
    out.payload = enum_result_json(res);
    out.warnings = res.warnings;
    out.table = "found " + std::to_string(res.certificates.size()) +
                " monomial Ulrich ideal(s)\n" +
                certificates_table(res.certificates);
    return out;
}

CommandResult do_families(const JobSpec& job) {
    auto H = semigroup_of(job);
    auto res = all_family_instances(H, FieldSpec::parse(job.field));
    CommandResult out;
    out.payload = enum_result_json(res);
    out.warnings = res.warnings;
    out.table = "instantiated " + std::to_string(res.certificates.size()) +
                " family member(s)\n" + certificates_table(res.certificates);
    return out;
}

CommandResult do_betti(const JobSpec& job) {
    auto H = semigroup_of(job);
    int nmax = job.nmax.value_or(6);
    auto he = herzog_exponents(*H);
    auto overA = betti_over_A(*H, nmax);
    ArtinianAlgebra B(he, 2);
    auto overB = resolve_residue_field(B, nmax);

    CommandResult out;
    out.payload["herzog_exponents"] =
        Json{{"alpha", he.alpha},     {"beta", he.beta},
             {"gamma", he.gamma},     {"alpha_p", he.alpha_p},
             {"beta_p", he.beta_p},   {"gamma_p", he.gamma_p}};
    out.payload["betti_over_B"] = betti_json(overB.betti);
    out.payload["betti_over_A"] = betti_json(overA);
    std::string t = "betti numbers of the residue field over k[[" +
                    H->to_string() + "]]:\n  ";
    for (auto v : overA.values) t += std::to_string(v) + " ";
    out.table = t + "\n";
    return out;
}

CommandResult do_golod(const JobSpec& job) {
    int nmax = job.nmax.value_or(10);
    CommandResult out;
    bool pass;
    if (!job.sgp.empty()) {
        auto H = semigroup_of(job);
        pass = golod_series_check(nmax, H.get());
    } else {
        pass = golod_series_check(nmax);
    }
    out.payload["pass"] = pass;
    out.payload["series"] = rational_series_coeffs({1, 1}, {1, -2}, nmax);
    out.table = std::string("series identity: ") + (pass ? "pass" : "FAIL") + "\n";
    if (!pass)
        throw InternalError("closed-form series identity failed");
    return out;
}

CommandResult do_gluing(const JobSpec& job) {
    if (job.glue.size() != 4)
        throw PreconditionError("--glue expects alpha,beta,a,b");
    auto g = make_gluing(job.glue[0], job.glue[1], job.glue[2], job.glue[3]);
    CommandResult out;
    out.payload["semigroup"] = semigroup_json(*g.sgp);
    out.payload["witness"] = Json{{"l", g.l}, {"m", g.m}};
    Json cases = Json::array();
    std::string t = "glued semigroup " + g.sgp->to_string() + ", witness a = " +
                    std::to_string(g.l) + "*alpha + " + std::to_string(g.m) +
                    "*beta\n";
    for (int case_no = 1; case_no <= 3; ++case_no) {
        Json cj;
        cj["case"] = case_no;
        try {
            auto I = family_gluing<Fp>(g, case_no, FieldSpec::prime(2));
            auto outcome = is_ulrich(I);
            cj["applicable"] = true;
            cj["ulrich"] = outcome.ok;
            if (outcome.ok) {
                cj["certificate"] = certificate_json(*outcome.cert);
                t += "case " + std::to_string(case_no) + ": " +
                     certificate_line(*outcome.cert) + "\n";
            }
        } catch (const PreconditionError& e) {
            cj["applicable"] = false;
            cj["reason"] = e.what();
            t += "case " + std::to_string(case_no) + ": not applicable (" +
                 std::string(e.what()) + ")\n";
        }
        cases.push_back(std::move(cj));
    }
    out.payload["cases"] = cases;
    out.table = t;
    return out;
}

CommandResult do_reproduce(const JobSpec& job) {
    if (job.target.empty())
        throw PreconditionError("reproduce: missing target");
    ReproduceOptions ro;
    if (job.field != "F2") ro.field = FieldSpec::parse(job.field);
    if (!job.sgp.empty()) ro.sgp = job.sgp;
    ro.nmax = job.nmax;
    ro.budget = job.budget;
    ro.jobs = job.jobs;
    auto rep = reproduce(job.target, ro);

    CommandResult out;
    out.payload["target"] = rep.target;
    out.payload["pass"] = rep.pass;
    Json lines = Json::array();
    std::string t = "target " + rep.target + "\n";
    for (const auto& l : rep.lines) {
        lines.push_back(Json{{"name", l.name},
                             {"expected", l.expected},
                             {"actual", l.actual},
                             {"pass", l.pass}});
        t += std::string(l.pass ? "  ok   " : "  FAIL ") + l.name +
             "  expected " + l.expected + ", got " + l.actual + "\n";
    }
    t += rep.pass ? "PASS\n" : "FAIL\n";
    out.payload["lines"] = lines;
    out.warnings = rep.warnings;
    out.table = t;
    if (!rep.pass)
        throw InternalError("reproduction target '" + rep.target + "' failed");
    return out;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"ulrich-lab: Ulrich ideals and Betti numbers of numerical "
                 "semigroup rings"};
    app.require_subcommand(1);

    JobSpec job;
    std::string sgp_text, glue_text;

    auto add_common = [&](CLI::App* cmd, bool with_field) {
        cmd->add_option("--sgp", sgp_text,
                        "semigroup generators, comma-separated");
        if (with_field)
            cmd->add_option("--field", job.field, "coefficient field: Q or Fp");
        cmd->add_option("--precision", job.precision,
                        "working precision override");
        cmd->add_option("--budget", job.budget, "search budget");
        cmd->add_option("--nmax", job.nmax, "resolution / series order");
        cmd->add_option("--output", job.output, "output mode: table or json")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--jobs", job.jobs, "worker threads");
    };

    auto* info = app.add_subcommand("sgp-info", "semigroup invariants");
    add_common(info, false);
    auto* verify = app.add_subcommand("ulrich-verify",
                                      "verify that an ideal is Ulrich");
    add_common(verify, true);
    verify->add_option("--gens", job.gens,
                       "ideal generators, e.g. \"t^6+2t^7,t^10\"");
    auto* enumerate = app.add_subcommand("ulrich-enumerate",
                                         "exhaustively enumerate Ulrich ideals");
    add_common(enumerate, true);
    auto* monomial = app.add_subcommand("ulrich-monomial",
                                        "enumerate monomial Ulrich ideals");
    add_common(monomial, false);
    auto* families = app.add_subcommand(
        "ulrich-families", "instantiate the classified families over a field");
    add_common(families, true);
    auto* betti = app.add_subcommand("betti",
                                     "betti numbers of the residue field");
    add_common(betti, false);
    auto* golod = app.add_subcommand("golod-check",
                                     "closed-form series identity check");
    add_common(golod, false);
    auto* gluing = app.add_subcommand("gluing",
                                      "glued semigroup and its Ulrich ideals");
    add_common(gluing, false);
    gluing->add_option("--glue", glue_text, "alpha,beta,a,b");
    auto* repro = app.add_subcommand("reproduce",
                                     "run a named verification batch");
    add_common(repro, true);
    repro->add_option("TARGET", job.target,
                      "one of: ex0, e2.9, e3, e4, cor-e3cor, thm6.1, "
                      "prop5.6, cor4.3");
    repro->add_option("--target", job.target, "alias for the positional target")
        ->excludes("TARGET");

    std::vector<const char*> argv;
    argv.push_back("ulab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto parse_int_list = [](const std::string& text) {
        std::vector<std::int64_t> vals;
        std::size_t start = 0;
        while (start < text.size()) {
            auto comma = text.find(',', start);
            auto piece = text.substr(start, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - start);
            try {
                vals.push_back(std::stoll(piece));
            } catch (const std::exception&) {
                throw PreconditionError("malformed integer list '" + text + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return vals;
    };

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (!sgp_text.empty()) job.sgp = parse_int_list(sgp_text);
        if (!glue_text.empty()) job.glue = parse_int_list(glue_text);

        CommandResult result;
        if (info->parsed()) { job.command = "sgp-info"; result = do_sgp_info(job); }
        else if (verify->parsed()) { job.command = "ulrich-verify"; result = do_verify(job); }
        else if (enumerate->parsed()) { job.command = "ulrich-enumerate"; result = do_enumerate(job); }
        else if (monomial->parsed()) { job.command = "ulrich-monomial"; result = do_monomial(job); }
        else if (families->parsed()) { job.command = "ulrich-families"; result = do_families(job); }
        else if (betti->parsed()) { job.command = "betti"; result = do_betti(job); }
        else if (golod->parsed()) { job.command = "golod-check"; result = do_golod(job); }
        else if (gluing->parsed()) { job.command = "gluing"; result = do_gluing(job); }
        else if (repro->parsed()) { job.command = "reproduce"; result = do_reproduce(job); }
        else { err << "usage error: no command\n"; return 2; }

        const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        if (job.output == "json") {
            out << envelope(job, std::move(result.payload),
                            std::move(result.warnings), wall)
                       .dump(2)
                << "\n";
        } else {
            out << result.table;
            for (const auto& w : result.warnings) err << "warning: " << w << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::precondition: return 2;
        case ErrorKind::budget: return 3;
        case ErrorKind::internal: return 4;
        }
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace ulab
