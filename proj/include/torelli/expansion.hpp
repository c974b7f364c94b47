#pragma once

// Symplectic Magnus expansion theta: pi -> T, given by the logarithms of
// its values on the free generators alpha_i, beta_i.

#include "torelli/surface.hpp"
#include "torelli/tensor.hpp"

#include <utility>
#include <vector>

namespace torelli {

class SymplecticExpansion
{
  public:
	/// log_alpha[i-1] = l(alpha_i), log_beta[i-1] = l(beta_i). Each value
	/// must have no constant term and the right degree-1 part.
	SymplecticExpansion(int genus, std::vector<Tensor> log_alpha,
	                    std::vector<Tensor> log_beta);

	int genus() const { return genus_; }
	int trunc() const { return trunc_; }
	Tensor const &log_alpha(int i) const { return log_alpha_[i - 1]; }
	Tensor const &log_beta(int i) const { return log_beta_[i - 1]; }

	/// theta of a single barcode letter.
	Tensor const &letter_value(int entry) const;
	/// Same letter, but for negative entries via series inversion of the
	/// positive letter's value instead of exp(-l).
	Tensor letter_value_by_inversion(int entry) const;

  private:
	int genus_;
	int trunc_;
	std::vector<Tensor> log_alpha_;
	std::vector<Tensor> log_beta_;
	// exp(+-l) per barcode entry, index (|k|-1)*2 + (k<0)
	std::vector<Tensor> letter_values_;
};

/// The degree <= 3 expansion
///   l(alpha_i) = a_i - 1/2[a_i,b_i] + 1/12[[a_i,b_i],b_i] - 1/2[w_i, a_i]
///   l(beta_i)  = b_i - 1/2[a_i,b_i] + 1/4[[a_i,b_i],b_i]
///                + 1/12[a_i,[a_i,b_i]] + 1/2[b_i, w_i]
/// with w_i = sum_{j<i} [a_j,b_j]; parts of degree >= 4 are zero.
SymplecticExpansion default_expansion(int genus, int trunc = Tensor::default_trunc);

/// Truncated product of the letter values; theta(empty) = 1.
Tensor theta(SymplecticExpansion const &exp, Barcode const &bc);

/// log(theta(bc)).
Tensor log_theta(SymplecticExpansion const &exp, Barcode const &bc);

/// Nonzero homogeneous parts of theta(zeta) - exp(sum_i [a_i,b_i]), where
/// zeta is boundary_barcode(g). Sorted by degree.
std::vector<std::pair<int, Tensor>> symplectic_defect(SymplecticExpansion const &exp);

/// Largest d such that the defect vanishes in every degree <= d.
int symplectic_through(SymplecticExpansion const &exp);

/// 1 / x for a tensor with constant term 1 (geometric series).
Tensor series_inverse(Tensor const &x);

} // namespace torelli
