#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fermat/exactlin.hpp"

namespace fermat {

struct ActionSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Externally supplied generator matrices acting on H1(U; Z/p) in the
// E-basis (row vectors, right multiplication).  The degree n equals p.
struct ActionSpec {
  std::uint64_t p = 0;
  std::vector<std::pair<std::string, ModMatrix>> generators;
};

// Parses and validates an action document:
//   { "p": 5, "basis": "E_lex_1..n-1",
//     "generators": [ {"name": ..., "matrix": [[...], ...]}, ... ] }
// Entries may be arbitrary integers; they are reduced mod p.  Each matrix
// must be invertible and must preserve the relation submodule S mod p.
ActionSpec load_action(const nlohmann::json& doc);
ActionSpec load_action_file(const std::string& path);

// Dimension of [pi]_2/[pi]_3 tensor Z/p: C((p-1)(p-2), 2) - 1.
std::size_t graded2_dimension(std::uint64_t p);

// Induced matrices on [pi]_2/[pi]_3 tensor Z/p: quotient H1(U) by S, take
// the exterior square, then kill the line spanned by rho.
std::vector<ModMatrix> graded2_action(const ActionSpec& spec);

// Dimension of the common fixed space of the graded2 matrices.
std::size_t invariant_dimension(const ActionSpec& spec);

// Whether the product over generators of (M_i - I) kills H1(X; Z/p).
bool check_annihilator(const ActionSpec& spec);

// Per-generator check that the induced wedge action fixes rho exactly.
std::vector<std::pair<std::string, bool>> rho_invariance(
    const ActionSpec& spec);

}  // namespace fermat
