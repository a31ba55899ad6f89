#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace whp::cli {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 10;
inline constexpr int exit_unknown = 20;
inline constexpr int exit_usage = 2;
/// A witness failed its own verification (a bug, never a user error).
inline constexpr int exit_defect = 70;

/// Runs one command line (without the program name). Normal output goes to `out`,
/// diagnostics to `err`; the result is the process exit code.
///
///   decide {aut|mon|end} --m M --n N SRC TGT [--bound L] [--json]
///   endo apply ENDO ELEMENT | compose ENDO ENDO | classify ENDO | inverse ENDO
///   endo recognize --m M --n N IMAGE...
///   free min WORD | equiv U V | primitive WORD   (all with --n N)
///   el mul G H | inv G | parse G                 (all with --m M --n N)
///
/// ENDO is an endomorphism document, inline (starting with '{') or a file path.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whp::cli
