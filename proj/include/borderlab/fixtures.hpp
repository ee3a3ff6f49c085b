#pragma once

#include <functional>
#include <optional>
#include <string>

#include "borderlab/ideal.hpp"

namespace borderlab {

// A named, reproducible ideal.  The heavy cases carry the extended flag and
// stay out of the default test profile.
struct NamedExample {
    std::string name;
    std::string description;
    bool extended = false;
    std::optional<std::size_t> expectedDimension;
    std::function<DistinguishedIdeal()> build;
};

const std::vector<NamedExample>& namedExamples();
const NamedExample* findNamedExample(const std::string& name);
DistinguishedIdeal buildNamedExample(const std::string& name);

}  // namespace borderlab
