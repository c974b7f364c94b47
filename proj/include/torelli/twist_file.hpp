#pragma once

// Twist-list text files. One record per line:
//
//   coeff genus k1 k2 ... kn
//
// Blank lines and lines starting with '#' are ignored.

#include "torelli/johnson.hpp"

#include <istream>
#include <string>

namespace torelli {

/// Throws ParseError (with the line number) on malformed records, zero
/// exponents, genus outside {1, 2} or entries out of range for the surface.
TwistList parse_twist_file(std::istream &in, int surface_genus);
TwistList read_twist_file(std::string const &path, int surface_genus);

std::string format_twist_file(TwistList const &twists, std::string const &header = {});

} // namespace torelli
