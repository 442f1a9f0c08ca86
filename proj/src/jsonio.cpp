#include "ulab/jsonio.hpp"

#include <cctype>

namespace ulab {

Json JobSpec::to_json() const {
    Json j;
    j["command"] = command;
    j["sgp"] = sgp;
    j["field"] = field;
    j["precision"] = precision ? Json(*precision) : Json(nullptr);
    j["budget"] = budget;
    j["nmax"] = nmax ? Json(*nmax) : Json(nullptr);
    j["output"] = output;
    j["jobs"] = jobs;
    j["target"] = target;
    j["gens"] = gens;
    j["glue"] = glue;
    return j;
}

Json semigroup_json(const Semigroup& H) {
    Json j;
    j["generators"] = H.generators();
    j["frobenius"] = H.frobenius();
    j["conductor"] = H.conductor();
    j["multiplicity"] = H.multiplicity();
    j["symmetric"] = H.is_symmetric();
    j["type"] = H.cm_type();
    j["genus"] = H.genus();
    return j;
}

namespace {

template <class K>
Json series_json_impl(const TruncSeries<K>& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json::array({e, c.to_string()}));
    return terms;
}

template <class K>
Json certificate_json_impl(const UlrichCertificate<K>& cert) {
    Json j;
    j["semigroup"] = cert.sgp->generators();
    j["field"] = cert.field.to_string();
    j["a"] = cert.a;
    j["b"] = cert.b;
    j["colength"] = cert.colength;
    j["mu"] = cert.mu;
    j["value_gaps"] = cert.value_gaps;
    j["blowup_semigroup"] = cert.blowup_gens;
    Json gens = Json::array();
    for (const auto& g : cert.gens_nf) gens.push_back(series_json_impl(g));
    j["generators"] = gens;
    j["checks"] = checks_json(cert.checks);
    return j;
}

} // namespace

Json series_json(const TruncSeries<Fp>& s) { return series_json_impl(s); }
Json series_json(const TruncSeries<Rat>& s) { return series_json_impl(s); }

Json checks_json(const UlrichChecks& c) {
    Json j;
    j["not_principal"] = c.not_principal;
    j["stable"] = c.stable;
    j["free"] = c.free_module;
    j["conductor_contained"] = c.conductor_contained;
    j["order_even"] = c.order_even;
    return j;
}

Json certificate_json(const UlrichCertificate<Fp>& cert) {
    Json j = certificate_json_impl(cert);
    if (auto tag = classify(cert)) {
        Json f;
        f["name"] = tag->family;
        Json coeffs;
        for (const auto& [name, value] : tag->coefficients) coeffs[name] = value;
        f["coefficients"] = coeffs;
        j["family"] = f;
    }
    return j;
}

Json certificate_json(const UlrichCertificate<Rat>& cert) {
    return certificate_json_impl(cert);
}

Json betti_json(const BettiSequence& seq) {
    Json j;
    j["over"] = seq.over == BettiSequence::Over::A ? "A" : "B";
    j["values"] = seq.values;
    return j;
}

Json envelope(const JobSpec& job, Json result, std::vector<std::string> warnings,
              std::int64_t wall_ms) {
    Json j;
    j["schema"] = "ulrich-lab/1";
    j["tool"] = Json{{"name", "ulrich-lab"}, {"version", "0.1.0"}};
    j["job"] = job.to_json();
    j["wall_ms"] = wall_ms;
    j["warnings"] = warnings;
    j["result"] = std::move(result);
    return j;
}

// ---------------------------------------------------------------------------
// Polynomial parsing
// ---------------------------------------------------------------------------

namespace {

struct RawTerm {
    std::string coeff; // may be empty (implicit 1), may contain '/'
    Exp exponent = 0;
};

std::vector<RawTerm> tokenize_poly(const std::string& text) {
    std::vector<RawTerm> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        std::string sign;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = "-";
            ++i;
            skip_ws();
        } else if (!first) {
            throw PreconditionError("polynomial: expected '+' or '-' near '" +
                                    text.substr(i) + "'");
        }
        first = false;

        std::string num;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) ||
                text[i] == '/'))
            num += text[i++];
        skip_ws();

        RawTerm term;
        if (i < text.size() && (text[i] == 't' || text[i] == '*')) {
            if (text[i] == '*') {
                ++i;
                skip_ws();
                if (i >= text.size() || text[i] != 't')
                    throw PreconditionError("polynomial: expected t after '*'");
            }
            ++i; // consume 't'
            if (i < text.size() && text[i] == '^') ++i;
            std::string exp;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])))
                exp += text[i++];
            term.exponent = exp.empty() ? 1 : std::stoll(exp);
            term.coeff = sign + (num.empty() ? "1" : num);
        } else {
            if (num.empty())
                throw PreconditionError("polynomial: empty term in '" + text + "'");
            term.exponent = 0;
            term.coeff = sign + num;
        }
        terms.push_back(std::move(term));
        skip_ws();
    }
    if (terms.empty()) throw PreconditionError("polynomial: empty input");
    return terms;
}

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& s) {
    std::string text = s;
    bool neg = false;
    if (!text.empty() && text[0] == '-') {
        neg = true;
        text = text.substr(1);
    }
    auto slash = text.find('/');
    std::int64_t num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = std::stoll(text);
        } else {
            num = std::stoll(text.substr(0, slash));
            den = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw PreconditionError("polynomial: bad coefficient '" + s + "'");
    }
    if (den == 0) throw PreconditionError("polynomial: zero denominator");
    return {neg ? -num : num, den};
}

template <class K>
K coeff_from_string(const std::string& s, const FieldSpec& field);

template <>
Fp coeff_from_string<Fp>(const std::string& s, const FieldSpec& field) {
    auto [num, den] = parse_fraction(s);
    Fp n(num, field.p);
    if (den == 1) return n;
    return n * Fp(den, field.p).inverse();
}

template <>
Rat coeff_from_string<Rat>(const std::string& s, const FieldSpec&) {
    auto [num, den] = parse_fraction(s);
    return Rat(num, den);
}

} // namespace

template <class K>
std::vector<TruncSeries<K>> parse_poly_list(const std::string& text,
                                            const FieldSpec& field,
                                            Exp precision) {
    std::vector<TruncSeries<K>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string piece = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) {
            std::vector<typename TruncSeries<K>::Term> terms;
            for (const auto& raw : tokenize_poly(piece))
                terms.push_back(
                    {raw.exponent, coeff_from_string<K>(raw.coeff, field)});
            out.push_back(TruncSeries<K>::from_terms(std::move(terms), precision));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty())
        throw PreconditionError("polynomial list: no generators given");
    return out;
}

template std::vector<TruncSeries<Fp>> parse_poly_list<Fp>(const std::string&,
                                                          const FieldSpec&, Exp);
template std::vector<TruncSeries<Rat>> parse_poly_list<Rat>(const std::string&,
                                                            const FieldSpec&, Exp);

} // namespace ulab
