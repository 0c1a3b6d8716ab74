#pragma once

#include "skewcorr/linalg.hpp"
#include "skewcorr/states.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace skewcorr {

/// Malformed input text (JSON state files, family specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"m": int, "n": int, "rho": [[[re, im], ...], ...]}. Syntax and
/// shape problems throw ParseError; a matrix that is not a state throws
/// ValidationError.
DensityMatrix read_state_json(std::istream& in);
DensityMatrix read_state_file(const std::string& path);

/// Writes the same schema with round-trip (shortest exact) doubles.
void write_state_json(std::ostream& out, const DensityMatrix& rho);
void write_state_file(const std::string& path, const DensityMatrix& rho);

/// Parses "name:key=val,key=val" (or a JSON FamilySpec object).
///   werner:m=3,x=0.5          isotropic:m=4,x=1      ppt:alpha=2.5
///   max_entangled:m=3         pure_schmidt:mu=0.8;0.6
///   classical_quantum:m=3,n=2,seed=7   random_mixed:m=2,n=3,rank=4,seed=1
FamilySpec parse_family_spec(const std::string& text);

std::string family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const std::string& json);

/// Shortest round-trip decimal representation, independent of the C locale.
std::string format_double(double v);

}  // namespace skewcorr
