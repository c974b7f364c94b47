#include "torelli/twist_file.hpp"

#include "torelli/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace torelli {

namespace {

int parse_int(std::string const &tok, int line)
{
	std::size_t pos = 0;
	long v = 0;
	try
	{
		v = std::stol(tok, &pos);
	}
	catch (std::exception const &)
	{
		throw ParseError(line, "expected an integer, got '" + tok + "'");
	}
	if (pos != tok.size())
		throw ParseError(line, "expected an integer, got '" + tok + "'");
	if (v > 1'000'000'000 || v < -1'000'000'000)
		throw ParseError(line, "integer out of range: " + tok);
	return static_cast<int>(v);
}

} // namespace

TwistList parse_twist_file(std::istream &in, int surface_genus)
{
	TwistList twists;
	std::string text;
	int line = 0;
	while (std::getline(in, text))
	{
		++line;
		if (!text.empty() && text.back() == '\r')
			text.pop_back();
		std::size_t const first = text.find_first_not_of(" \t");
		if (first == std::string::npos || text[first] == '#')
			continue;

		std::istringstream fields(text);
		std::vector<int> values;
		std::string tok;
		while (fields >> tok)
			values.push_back(parse_int(tok, line));
		if (values.size() < 2)
			throw ParseError(line, "record needs at least 'coeff genus'");

		int const coeff = values[0];
		int const genus = values[1];
		if (coeff == 0)
			throw ParseError(line, "exponent must be nonzero");
		if (genus != 1 && genus != 2)
			throw ParseError(line, "genus must be 1 or 2");
		std::vector<int> entries(values.begin() + 2, values.end());
		for (int k : entries)
			if (k == 0 || std::abs(k) > 2 * surface_genus)
				throw ParseError(line, "barcode entry " + std::to_string(k) +
				                           " out of range for genus " +
				                           std::to_string(surface_genus));
		twists.push_back({coeff, genus, Barcode(std::move(entries))});
	}
	return twists;
}

TwistList read_twist_file(std::string const &path, int surface_genus)
{
	std::ifstream in(path);
	if (!in)
		throw Error("cannot open " + path);
	return parse_twist_file(in, surface_genus);
}

std::string format_twist_file(TwistList const &twists, std::string const &header)
{
	std::string out;
	if (!header.empty())
	{
		std::istringstream lines(header);
		std::string l;
		while (std::getline(lines, l))
			out += "# " + l + "\n";
	}
	for (auto const &t : twists.entries())
	{
		out += std::to_string(t.coeff) + " " + std::to_string(t.genus);
		for (int k : t.curve.entries())
			out += " " + std::to_string(k);
		out += "\n";
	}
	return out;
}

} // namespace torelli
