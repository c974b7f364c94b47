#pragma once

#include <gmpxx.h>

#include <string>

namespace torelli {

using Rational = mpq_class;

/// num/den in lowest terms.
inline Rational make_rational(long num, long den)
{
	Rational r(num, den);
	r.canonicalize();
	return r;
}

/// Always renders as "p/q", including integers ("3/1").
inline std::string to_fraction_string(Rational const &x)
{
	return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Renders integers without a denominator ("3", "-1/2").
inline std::string to_short_string(Rational const &x)
{
	if (x.get_den() == 1)
		return x.get_num().get_str();
	return to_fraction_string(x);
}

} // namespace torelli
