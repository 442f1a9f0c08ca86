#ifndef ULAB_REPRODUCE_HPP
#define ULAB_REPRODUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ulab/field.hpp"
#include "ulab/semigroup.hpp"

namespace ulab {

struct CheckLine {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ReproduceReport {
    std::string target;
    bool pass = false;
    std::vector<CheckLine> lines;
    std::vector<std::string> warnings;
};

struct ReproduceOptions {
    std::optional<FieldSpec> field;              // override where meaningful
    std::optional<std::vector<std::int64_t>> sgp;
    std::optional<int> nmax;
    std::uint64_t budget = 10'000'000;
    int jobs = 1;
};

std::vector<std::string> reproduce_targets();

// Runs the named batch of classification/verification checks and
// returns a line-by-line expected-vs-actual report.
ReproduceReport reproduce(const std::string& target,
                          const ReproduceOptions& opts = {});

} // namespace ulab

#endif
