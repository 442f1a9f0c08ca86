#include "ulab/field.hpp"

namespace ulab {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 16))
        throw PreconditionError("FieldSpec: prime moduli are limited to p < 2^16");
    if (!is_prime_u32(p))
        throw PreconditionError("FieldSpec: " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::to_string() const {
    return kind == FieldKind::rationals ? "Q" : "F" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < text.size(); ++i) {
            char c = text[i];
            if (c < '0' || c > '9')
                throw PreconditionError("FieldSpec: cannot parse '" + text + "'");
            p = p * 10 + (c - '0');
            if (p >= (1u << 16))
                throw PreconditionError("FieldSpec: modulus too large in '" + text + "'");
        }
        return prime(static_cast<std::uint32_t>(p));
    }
    throw PreconditionError("FieldSpec: cannot parse '" + text + "' (expected Q or Fp)");
}

std::vector<Fp> field_elements(const FieldSpec& spec) {
    if (!spec.is_prime_field())
        throw PreconditionError("field_elements: infinite field");
    std::vector<Fp> out;
    out.reserve(spec.p);
    for (std::uint32_t v = 0; v < spec.p; ++v)
        out.emplace_back(v, spec.p);
    return out;
}

} // namespace ulab
