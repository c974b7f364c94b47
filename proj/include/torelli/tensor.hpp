#pragma once

// Truncated free associative algebra over Q on 2g generators.
//
// Generators are numbered 1..2g: index i <= g is a_i, index g+i is b_i.
// A Tensor is a finitely supported combination of words together with a
// truncation degree; every word longer than the truncation degree is
// discarded as soon as it is produced.

#include "torelli/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace torelli {

/// A word in the generators. Ordered by length, then lexicographically.
class Word
{
  public:
	Word() = default;
	Word(std::initializer_list<int> letters);
	explicit Word(std::vector<int> const &letters);

	int size() const { return static_cast<int>(data_.size()); }
	bool empty() const { return data_.empty(); }
	int operator[](int i) const { return static_cast<unsigned char>(data_[i]); }
	std::vector<int> letters() const;

	Word concat(Word const &other) const { return Word(data_ + other.data_); }
	/// Rotation starting at position i.
	Word rotate(int i) const;
	Word sub(int pos, int len) const { return Word(data_.substr(pos, len)); }

	std::strong_ordering operator<=>(Word const &other) const;
	bool operator==(Word const &other) const = default;

  private:
	explicit Word(std::string data) : data_(std::move(data)) {}
	// one byte per letter keeps short words in the small-string buffer
	std::string data_;
};

class Tensor
{
  public:
	using Terms = std::map<Word, Rational>;

	static constexpr int default_trunc = 5;

	explicit Tensor(int trunc = default_trunc);

	static Tensor one(int trunc = default_trunc);
	static Tensor generator(int index, int trunc = default_trunc);
	static Tensor monomial(Word const &w, Rational const &coeff,
	                       int trunc = default_trunc);
	static Tensor constant(Rational const &c, int trunc = default_trunc);

	int trunc() const { return trunc_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	Rational coefficient(Word const &w) const;
	Rational constant_term() const { return coefficient(Word{}); }

	/// Adds c*w in place; drops the word if it exceeds the truncation degree.
	void add_term(Word const &w, Rational const &c);

	Tensor &operator+=(Tensor const &other);
	Tensor &operator-=(Tensor const &other);
	Tensor &operator*=(Rational const &c);

	friend Tensor operator+(Tensor a, Tensor const &b) { return a += b; }
	friend Tensor operator-(Tensor a, Tensor const &b) { return a -= b; }
	friend Tensor operator-(Tensor a) { return a *= Rational(-1); }
	friend Tensor operator*(Tensor a, Rational const &c) { return a *= c; }
	friend Tensor operator*(Rational const &c, Tensor a) { return a *= c; }
	/// Concatenation product (see product()).
	friend Tensor operator*(Tensor const &a, Tensor const &b);

	bool operator==(Tensor const &other) const = default;

  private:
	int trunc_;
	Terms terms_;
};

/// Concatenation product, discarding words longer than the truncation degree.
/// Throws DegreeMismatchError when the truncation degrees differ.
Tensor product(Tensor const &x, Tensor const &y);

/// x*y - y*x.
Tensor bracket(Tensor const &x, Tensor const &y);

/// Replaces each word of length p by the sum of its p cyclic rotations.
/// Requires a zero constant term.
Tensor cyclicize(Tensor const &x);

/// Homogeneous part of degree k.
Tensor extract(Tensor const &x, int k);

/// All parts of degree <= k.
Tensor truncate(Tensor const &x, int k);

/// Length of the longest stored word; 0 for the zero tensor.
int top_degree(Tensor const &x);

/// Truncated exponential; requires a zero constant term.
Tensor exp_series(Tensor const &x);

/// Truncated logarithm; requires constant term exactly 1.
Tensor log_series(Tensor const &x);

/// Left-nested bracketing of every word: x1...xn -> [[..[x1,x2],..],xn].
Tensor dynkin_map(Tensor const &x);

/// Sum over degrees n of dynkin_map(x_n) - n*x_n. Zero iff x is a Lie
/// element degree by degree (Dynkin-Specht-Wever).
Tensor dynkin_defect(Tensor const &x);

/// Canonical text form, e.g. "1/1 a1*b1 - 1/1 b1*a1"; the zero tensor is "0".
std::string to_string(Tensor const &x, int genus);

/// Generator name for index 1..2g ("a1".."ag", "b1".."bg").
std::string generator_name(int index, int genus);

} // namespace torelli
