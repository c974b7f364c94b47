#pragma once

// Random generators and brute-force oracles shared by the test suites. The
// oracle polynomials are plain maps from letter vectors to rationals and do
// not go through the library's Tensor arithmetic.

#include "torelli/diagrams.hpp"
#include "torelli/surface.hpp"
#include "torelli/tensor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

namespace testing_support {

using torelli::Barcode;
using torelli::HVector;
using torelli::Rational;
using torelli::Tensor;
using torelli::Word;

class Rng
{
  public:
	explicit Rng(std::uint64_t seed) : eng_(seed) {}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
	bool coin() { return uniform(0, 1) == 1; }

	Rational rational()
	{
		int num = uniform(-6, 6);
		if (num == 0)
			num = 1;
		return torelli::make_rational(num, uniform(1, 4));
	}

	std::mt19937_64 &engine() { return eng_; }

  private:
	std::mt19937_64 eng_;
};

inline Word random_word(Rng &rng, int genus, int len)
{
	std::vector<int> letters;
	for (int i = 0; i < len; ++i)
		letters.push_back(rng.uniform(1, 2 * genus));
	return Word(letters);
}

/// Sparse tensor with words of length in [min_deg, max_deg].
inline Tensor random_tensor(Rng &rng, int genus, int trunc, int terms, int min_deg,
                            int max_deg)
{
	Tensor t(trunc);
	for (int i = 0; i < terms; ++i)
		t.add_term(random_word(rng, genus, rng.uniform(min_deg, max_deg)), rng.rational());
	return t;
}

inline Tensor random_generator_combination(Rng &rng, int genus, int trunc)
{
	Tensor t(trunc);
	for (int i = 1; i <= 2 * genus; ++i)
		t.add_term(Word{i}, Rational(rng.uniform(-2, 2)));
	return t;
}

inline HVector random_hvector(Rng &rng, int genus, int range = 2)
{
	std::vector<std::int64_t> c;
	for (int i = 0; i < 2 * genus; ++i)
		c.push_back(rng.uniform(-range, range));
	return HVector(c);
}

inline Barcode random_barcode(Rng &rng, int genus, int len)
{
	std::vector<int> e;
	for (int i = 0; i < len; ++i)
	{
		int k = rng.uniform(1, 2 * genus);
		e.push_back(rng.coin() ? k : -k);
	}
	return Barcode(e);
}

/// Product of conjugated commutators of random words: null-homologous.
inline Barcode random_null_homologous(Rng &rng, int genus)
{
	Barcode out;
	int const factors = rng.uniform(1, 2);
	for (int i = 0; i < factors; ++i)
	{
		Barcode const u = random_barcode(rng, genus, rng.uniform(1, 3));
		Barcode const v = random_barcode(rng, genus, rng.uniform(1, 3));
		Barcode const w = random_barcode(rng, genus, rng.uniform(0, 2));
		out += w + torelli::commutator_barcode(u, v) + w.inverse();
	}
	return out;
}

/// Cyclic rotation of a barcode (a conjugate word).
inline Barcode rotate(Barcode const &bc, int shift)
{
	auto e = bc.entries();
	if (e.empty())
		return bc;
	std::rotate(e.begin(), e.begin() + shift % static_cast<int>(e.size()), e.end());
	return Barcode(e);
}

// --- independent polynomial oracle ------------------------------------------

using Poly = std::map<std::vector<int>, Rational>;

inline void poly_add(Poly &p, std::vector<int> const &w, Rational const &c)
{
	Rational &slot = p[w];
	slot += c;
	if (slot == 0)
		p.erase(w);
}

inline Poly poly_sum(Poly a, Poly const &b, Rational const &s = 1)
{
	for (auto const &[w, c] : b)
		poly_add(a, w, s * c);
	return a;
}

inline Poly poly_mul(Poly const &a, Poly const &b, int trunc)
{
	Poly out;
	for (auto const &[u, x] : a)
		for (auto const &[v, y] : b)
		{
			if (static_cast<int>(u.size() + v.size()) > trunc)
				continue;
			std::vector<int> w = u;
			w.insert(w.end(), v.begin(), v.end());
			poly_add(out, w, x * y);
		}
	return out;
}

inline Poly poly_bracket(Poly const &a, Poly const &b, int trunc)
{
	return poly_sum(poly_mul(a, b, trunc), poly_mul(b, a, trunc), -1);
}

inline Poly poly_cyclic(Poly const &a)
{
	Poly out;
	for (auto const &[w, c] : a)
		for (std::size_t i = 0; i < w.size(); ++i)
		{
			std::vector<int> r(w.begin() + i, w.end());
			r.insert(r.end(), w.begin(), w.begin() + i);
			poly_add(out, r, c);
		}
	return out;
}

inline Poly poly_of(HVector const &v)
{
	Poly p;
	for (std::size_t i = 0; i < v.coords().size(); ++i)
		if (v[static_cast<int>(i)] != 0)
			p[{static_cast<int>(i) + 1}] = Rational(v[static_cast<int>(i)]);
	return p;
}

inline Poly poly_of(Tensor const &t)
{
	Poly p;
	for (auto const &[w, c] : t.terms())
		p[w.letters()] = c;
	return p;
}

inline Tensor tensor_of(Poly const &p, int trunc)
{
	Tensor t(trunc);
	for (auto const &[w, c] : p)
		t.add_term(Word(w), c);
	return t;
}

} // namespace testing_support
