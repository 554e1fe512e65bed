#pragma once

#include <iosfwd>
#include <string>

#include "llv/frobenius.hpp"

namespace llv {

/// Parse an algebra from its JSON document.  Throws SchemaError on malformed
/// input; when validate is true, additionally runs validate_algebra and
/// throws ValidationError listing the violations.
GradedFrobeniusAlgebra load_algebra(const std::string& json_text, bool validate = true);
GradedFrobeniusAlgebra load_algebra_stream(std::istream& in, bool validate = true);
GradedFrobeniusAlgebra load_algebra_file(const std::string& path, bool validate = true);

/// Serialize to the JSON document format; load_algebra(save_algebra(A)) == A.
std::string save_algebra(const GradedFrobeniusAlgebra& A);

}  // namespace llv
