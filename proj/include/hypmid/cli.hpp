#pragma once

// `hypmid` command dispatch, callable in-process so tests can drive it.
//
//   hypmid midpoint --model b2 --x 0.5,0 --y 0,0.25 [--method I] [--json|--plain]
//   hypmid verify --suite all --samples 1000 --seed 42 --tol 1e-8
//   hypmid script run FILE [--bind x=0.5,0 ...]
//   hypmid script fmt FILE [--check|--write]
//   hypmid script emit --model b2 --x ... --y ... [--method M]
//   hypmid render (--model .. --x .. --y .. [--method M] | --script FILE) --out FILE.svg
//
// HYPMID_TOL overrides the incidence tolerance (default 1e-9).

#include <iosfwd>
#include <string>
#include <vector>

namespace hypmid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInapplicable = 2;
inline constexpr int kExitUsage = 64;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypmid::cli
