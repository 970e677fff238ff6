#pragma once

#include "bierkit/scomplex/complex.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bierkit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/**
 * Runs one `bierkit` invocation. `args` excludes the program name.
 * JSON goes to `out` (or the --out file), the human summary and error
 * messages to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "builtin:hemi_icosahedron", "builtin:skeleton:n,r" or a complex JSON
/// file path. Throws ParseError/ValidationError/DomainError.
scomplex::SimplicialComplex load_complex(const std::string& spec);

}  // namespace bierkit::cli
