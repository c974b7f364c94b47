#pragma once

// Genus-g surface data: the symplectic form on H = H_1(surface) and words
// in the free group pi_1 encoded as barcodes.
//
// Barcode convention: +-(2i-1) is alpha_i^{+-1}, +-2i is beta_i^{+-1}.

#include "torelli/tensor.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace torelli {

struct GenusContext
{
	int g;

	explicit GenusContext(int genus);
	int rank() const { return 2 * g; }
};

/// Integer vector in the basis (a_1..a_g, b_1..b_g).
class HVector
{
  public:
	HVector() = default;
	explicit HVector(std::vector<std::int64_t> coords);

	static HVector zero(int genus);
	static HVector a(int i, int genus);
	static HVector b(int i, int genus);

	int genus() const { return static_cast<int>(coords_.size()) / 2; }
	std::vector<std::int64_t> const &coords() const { return coords_; }
	std::int64_t operator[](int i) const { return coords_[i]; }
	bool is_zero() const;

	HVector &operator+=(HVector const &o);
	HVector &operator-=(HVector const &o);
	friend HVector operator+(HVector x, HVector const &y) { return x += y; }
	friend HVector operator-(HVector x, HVector const &y) { return x -= y; }
	friend HVector operator-(HVector x);
	friend HVector operator*(std::int64_t k, HVector x);

	bool operator==(HVector const &) const = default;
	auto operator<=>(HVector const &) const = default;

  private:
	std::vector<std::int64_t> coords_;
};

/// omega(a_i, b_i) = 1, omega(b_i, a_i) = -1, all other basis pairings 0.
std::int64_t omega(HVector const &u, HVector const &v);

/// Degree-1 tensor sum_i coords[i] * e_{i+1}.
Tensor to_tensor(HVector const &v, int trunc);

/// Text form "1 0 -1 2".
std::string to_string(HVector const &v);

class Barcode
{
  public:
	Barcode() = default;
	Barcode(std::initializer_list<int> entries);
	explicit Barcode(std::vector<int> entries);

	std::vector<int> const &entries() const { return entries_; }
	int size() const { return static_cast<int>(entries_.size()); }
	bool empty() const { return entries_.empty(); }

	/// Throws EncodingError if some entry exceeds 2g in absolute value.
	void validate(int genus) const;

	/// Reversed and negated sequence, i.e. the inverse word.
	Barcode inverse() const;

	Barcode &operator+=(Barcode const &o);
	friend Barcode operator+(Barcode x, Barcode const &y) { return x += y; }

	bool operator==(Barcode const &) const = default;

  private:
	std::vector<int> entries_;
};

struct Letter
{
	int generator; ///< 1..2g, as in Tensor
	int sign;      ///< +1 or -1

	bool operator==(Letter const &) const = default;
};

/// Throws EncodingError on out-of-range entries.
std::vector<Letter> barcode_to_word(Barcode const &bc, int genus);

/// Compact string, e.g. "a1+b1-a2+".
std::string to_word_string(Barcode const &bc, int genus);

/// u v u^-1 v^-1.
Barcode commutator_barcode(Barcode const &u, Barcode const &v);

/// u v rev(-u) rev(-v); coincides with commutator_barcode on words.
Barcode conjugate_barcode(Barcode const &u, Barcode const &v);

/// prod_i beta_i^-1 alpha_i beta_i alpha_i^-1.
Barcode boundary_barcode(int genus);

/// Cancels adjacent pairs (k, -k) until none remain.
Barcode free_reduce(Barcode const &bc);

/// Homology class of the word.
HVector homology_class(Barcode const &bc, int genus);

/// Text form "1 -2 -1 2".
std::string to_string(Barcode const &bc);
/// Parses whitespace separated signed integers.
Barcode parse_barcode(std::string const &text);

} // namespace torelli
