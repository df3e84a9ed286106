#pragma once

#include <stdexcept>
#include <string>

namespace aflag {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two window entries agree mod n, so the periodic extension is not a bijection.
struct ResidueCollision : Error {
  using Error::Error;
};

// Binary operation on permutations with different periods n.
struct PeriodMismatch : Error {
  using Error::Error;
};

// A matrix and a permutation living in different components G_k.
struct IndexMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

// ord() of the zero Laurent polynomial.
struct ZeroArgument : Error {
  using Error::Error;
};

struct BoxNotEssential : Error {
  using Error::Error;
};

// The scan band of opposite_cell_of does not bracket all rank jumps.
struct BandTooNarrow : Error {
  using Error::Error;
};

// Malformed user input (bad window text, bad JSON, bad parameter range).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace aflag
