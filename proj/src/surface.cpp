#include "torelli/surface.hpp"

#include "torelli/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace torelli {

GenusContext::GenusContext(int genus) : g(genus)
{
	if (genus < 1)
		throw DomainError("genus must be at least 1");
}

HVector::HVector(std::vector<std::int64_t> coords) : coords_(std::move(coords))
{
	if (coords_.empty() || coords_.size() % 2 != 0)
		throw EncodingError("HVector length must be 2g with g >= 1");
}

HVector HVector::zero(int genus)
{
	GenusContext ctx(genus);
	return HVector(std::vector<std::int64_t>(ctx.rank(), 0));
}

HVector HVector::a(int i, int genus)
{
	if (i < 1 || i > genus)
		throw EncodingError("a_" + std::to_string(i) + " out of range");
	HVector v = zero(genus);
	v.coords_[i - 1] = 1;
	return v;
}

HVector HVector::b(int i, int genus)
{
	if (i < 1 || i > genus)
		throw EncodingError("b_" + std::to_string(i) + " out of range");
	HVector v = zero(genus);
	v.coords_[genus + i - 1] = 1;
	return v;
}

bool HVector::is_zero() const
{
	return std::all_of(coords_.begin(), coords_.end(),
	                   [](auto c) { return c == 0; });
}

HVector &HVector::operator+=(HVector const &o)
{
	if (o.coords_.size() != coords_.size())
		throw DomainError("HVector length mismatch");
	for (std::size_t i = 0; i < coords_.size(); ++i)
		coords_[i] += o.coords_[i];
	return *this;
}

HVector &HVector::operator-=(HVector const &o)
{
	if (o.coords_.size() != coords_.size())
		throw DomainError("HVector length mismatch");
	for (std::size_t i = 0; i < coords_.size(); ++i)
		coords_[i] -= o.coords_[i];
	return *this;
}

HVector operator-(HVector x)
{
	for (auto &c : x.coords_)
		c = -c;
	return x;
}

HVector operator*(std::int64_t k, HVector x)
{
	for (auto &c : x.coords_)
		c *= k;
	return x;
}

std::int64_t omega(HVector const &u, HVector const &v)
{
	if (u.coords().size() != v.coords().size())
		throw DomainError("omega: length mismatch");
	int const g = u.genus();
	std::int64_t r = 0;
	for (int i = 0; i < g; ++i)
		r += u[i] * v[g + i] - u[g + i] * v[i];
	return r;
}

Tensor to_tensor(HVector const &v, int trunc)
{
	Tensor t(trunc);
	for (int i = 0; i < static_cast<int>(v.coords().size()); ++i)
		t.add_term(Word{i + 1}, Rational(static_cast<long>(v[i])));
	return t;
}

std::string to_string(HVector const &v)
{
	std::string out;
	for (std::size_t i = 0; i < v.coords().size(); ++i)
	{
		if (i)
			out += ' ';
		out += std::to_string(v[static_cast<int>(i)]);
	}
	return out;
}

Barcode::Barcode(std::initializer_list<int> entries)
    : Barcode(std::vector<int>(entries))
{}

Barcode::Barcode(std::vector<int> entries) : entries_(std::move(entries))
{
	for (int k : entries_)
		if (k == 0)
			throw EncodingError("barcode entries must be nonzero");
}

void Barcode::validate(int genus) const
{
	for (int k : entries_)
		if (std::abs(k) > 2 * genus)
			throw EncodingError("barcode entry " + std::to_string(k) +
			                    " out of range for genus " +
			                    std::to_string(genus));
}

Barcode Barcode::inverse() const
{
	Barcode r;
	r.entries_.reserve(entries_.size());
	for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
		r.entries_.push_back(-*it);
	return r;
}

Barcode &Barcode::operator+=(Barcode const &o)
{
	entries_.insert(entries_.end(), o.entries_.begin(), o.entries_.end());
	return *this;
}

std::vector<Letter> barcode_to_word(Barcode const &bc, int genus)
{
	bc.validate(genus);
	std::vector<Letter> word;
	word.reserve(bc.size());
	for (int k : bc.entries())
	{
		int const m = std::abs(k);
		int const i = (m + 1) / 2;
		int const gen = (m % 2 == 1) ? i : genus + i;
		word.push_back({gen, k > 0 ? 1 : -1});
	}
	return word;
}

std::string to_word_string(Barcode const &bc, int genus)
{
	std::string out;
	for (auto const &l : barcode_to_word(bc, genus))
		out += generator_name(l.generator, genus) + (l.sign > 0 ? "+" : "-");
	return out;
}

Barcode commutator_barcode(Barcode const &u, Barcode const &v)
{
	return u + v + u.inverse() + v.inverse();
}

Barcode conjugate_barcode(Barcode const &u, Barcode const &v)
{
	std::vector<int> out = u.entries();
	out.insert(out.end(), v.entries().begin(), v.entries().end());
	for (auto it = u.entries().rbegin(); it != u.entries().rend(); ++it)
		out.push_back(-*it);
	for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it)
		out.push_back(-*it);
	return Barcode(std::move(out));
}

Barcode boundary_barcode(int genus)
{
	GenusContext ctx(genus);
	std::vector<int> out;
	for (int i = 1; i <= ctx.g; ++i)
	{
		int const alpha = 2 * i - 1;
		int const beta = 2 * i;
		out.insert(out.end(), {-beta, alpha, beta, -alpha});
	}
	return Barcode(std::move(out));
}

Barcode free_reduce(Barcode const &bc)
{
	std::vector<int> stack;
	for (int k : bc.entries())
	{
		if (!stack.empty() && stack.back() == -k)
			stack.pop_back();
		else
			stack.push_back(k);
	}
	return Barcode(std::move(stack));
}

HVector homology_class(Barcode const &bc, int genus)
{
	HVector h = HVector::zero(genus);
	for (auto const &l : barcode_to_word(bc, genus))
	{
		std::vector<std::int64_t> e(2 * genus, 0);
		e[l.generator - 1] = l.sign;
		h += HVector(std::move(e));
	}
	return h;
}

std::string to_string(Barcode const &bc)
{
	std::string out;
	for (std::size_t i = 0; i < bc.entries().size(); ++i)
	{
		if (i)
			out += ' ';
		out += std::to_string(bc.entries()[i]);
	}
	return out;
}

Barcode parse_barcode(std::string const &text)
{
	std::istringstream in(text);
	std::vector<int> entries;
	std::string tok;
	while (in >> tok)
	{
		std::size_t pos = 0;
		int k = 0;
		try
		{
			k = std::stoi(tok, &pos);
		}
		catch (std::exception const &)
		{
			throw EncodingError("not an integer: '" + tok + "'");
		}
		if (pos != tok.size())
			throw EncodingError("not an integer: '" + tok + "'");
		entries.push_back(k);
	}
	return Barcode(std::move(entries));
}

} // namespace torelli
