#ifndef ULAB_JSONIO_HPP
#define ULAB_JSONIO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulab/betti.hpp"
#include "ulab/ulrich.hpp"

namespace ulab {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Job description shared by the CLI commands.  The normalized form
// round-trips: parsing and re-serializing reproduces the same flag set.
// ---------------------------------------------------------------------------
struct JobSpec {
    std::string command;
    std::vector<std::int64_t> sgp;
    std::string field = "F2";
    std::optional<std::int64_t> precision;
    std::uint64_t budget = 10'000'000;
    std::optional<int> nmax;
    std::string output = "table";
    int jobs = 1;
    std::string target;                 // reproduce
    std::string gens;                   // ulrich-verify
    std::vector<std::int64_t> glue;     // gluing: alpha, beta, a, b

    Json to_json() const;
};

Json semigroup_json(const Semigroup& H);
Json series_json(const TruncSeries<Fp>& s);
Json series_json(const TruncSeries<Rat>& s);
Json checks_json(const UlrichChecks& c);
Json certificate_json(const UlrichCertificate<Fp>& cert);
Json certificate_json(const UlrichCertificate<Rat>& cert);
Json betti_json(const BettiSequence& seq);

// envelope with schema/tool/job/wall time around a result payload
Json envelope(const JobSpec& job, Json result, std::vector<std::string> warnings,
              std::int64_t wall_ms);

// parse comma-separated generator polynomials in t, e.g.
// "t^12+2t^17+t^26, t^21+t^26"; rational coefficients use "/"
template <class K>
std::vector<TruncSeries<K>> parse_poly_list(const std::string& text,
                                            const FieldSpec& field, Exp precision);

} // namespace ulab

#endif
