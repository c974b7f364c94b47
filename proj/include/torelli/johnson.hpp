#pragma once

// Tensors L_k = 1/2 N(l^2) of bounding curves, the Johnson homomorphisms
// tau_2 / tau_3 of products of twists along them, and derivations of the
// tensor algebra.
//
// A tensor of degree k+2 is read as an element of H (x) H^{(k+1)} and thus
// as a map H -> H^{(k+1)} via u (x) t : h |-> omega(u, h) t.

#include "torelli/expansion.hpp"
#include "torelli/surface.hpp"
#include "torelli/tensor.hpp"

#include <string>
#include <vector>

namespace torelli {

struct Twist
{
	int coeff;   ///< nonzero exponent
	int genus;   ///< genus of the bounded subsurface, 1 or 2
	Barcode curve;

	bool operator==(Twist const &) const = default;
};

/// Product of powers of twists along bounding simple closed curves.
class TwistList
{
  public:
	TwistList() = default;
	explicit TwistList(std::vector<Twist> entries);

	std::vector<Twist> const &entries() const { return entries_; }
	std::size_t size() const { return entries_.size(); }
	bool empty() const { return entries_.empty(); }

	void push_back(Twist t);
	TwistList &operator+=(TwistList const &o);
	friend TwistList operator+(TwistList x, TwistList const &y) { return x += y; }

	/// Range check of every barcode against the surface genus.
	void validate(int surface_genus) const;

	bool operator==(TwistList const &) const = default;

  private:
	std::vector<Twist> entries_;
};

/// Degrees 4 and 5 of L(x) = 1/2 N(l(x)^2) for null-homologous bc.
struct KKParts
{
	Tensor L4;
	Tensor L5;
};

/// Degree-k part of 1/2 N(l(bc)^2), k <= trunc. Throws DomainError when bc
/// is not null-homologous.
Tensor L_k(SymplecticExpansion const &exp, Barcode const &bc, int k);

/// Both L_4 and L_5 from a single evaluation of log(theta(bc)).
KKParts kk_parts(SymplecticExpansion const &exp, Barcode const &bc);

/// sum coeff * L_4 over the list.
Tensor tau2(SymplecticExpansion const &exp, TwistList const &twists);

/// sum coeff * L_5 over the list. This is tau_3 of the product only when
/// tau2 of the same list vanishes; no check is made here.
Tensor tau3(SymplecticExpansion const &exp, TwistList const &twists);

class Derivation
{
  public:
	Tensor const &value() const { return value_; }
	int degree() const { return degree_; }
	int genus() const { return genus_; }

	/// Image of generator index 1..2g, a homogeneous tensor of degree k+1.
	Tensor on_generator(int index) const;

	bool operator==(Derivation const &) const = default;

  private:
	friend Derivation as_derivation(Tensor const &t, int k, int genus);
	Derivation(Tensor value, int degree, int genus)
	    : value_(std::move(value)), degree_(degree), genus_(genus)
	{}

	Tensor value_;
	int degree_;
	int genus_;
};

/// Wraps a homogeneous degree-(k+2) tensor. Throws DomainError otherwise.
Derivation as_derivation(Tensor const &t, int k, int genus);

/// Extends d to words by the Leibniz rule (leftmost letter first).
Tensor apply_derivation(Derivation const &d, Tensor const &t);

/// [d1, d2] = d1 d2 - d2 d1, repackaged as a tensor of degree k1+k2+2.
Derivation derivation_bracket(Derivation const &d1, Derivation const &d2);

/// Tensor of the derivation whose value on each generator is given;
/// inverse of on_generator.
Tensor tensor_from_generator_images(std::vector<Tensor> const &images, int genus);

} // namespace torelli
