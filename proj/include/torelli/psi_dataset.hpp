#pragma once

// Genus-2 mapping class psi = T_{gamma2}^{-3} * psi_1 with psi_1 a product of
// fifteen genus-1 twists, psi in J_3 and lambda(psi) = 1, together with the
// published values of tau_3(psi) and its decomposition into brackets.

#include "torelli/diagrams.hpp"
#include "torelli/johnson.hpp"
#include "torelli/surface.hpp"

#include <string>
#include <utility>
#include <vector>

namespace torelli {

struct PsiEntry
{
	std::string name;
	Twist twist;
	/// Curves of the spine, as (U, V) with the twist curve [U, V]; two pairs
	/// for the genus-2 curve.
	std::vector<std::pair<Barcode, Barcode>> spine;
};

/// Nested brackets of degree 1 and 2 diagram sums.
struct BracketExpr
{
	DiagramSum leaf;
	std::vector<BracketExpr> args; ///< empty for a leaf, else exactly two

	static BracketExpr of(DiagramSum d);
	static BracketExpr bracket(BracketExpr x, BracketExpr y);
	int degree() const;
};

struct PsiDataset
{
	static constexpr int genus = 2;

	std::vector<PsiEntry> entries;
	/// Fifteen five-leaf trees.
	DiagramSum expected_tau3;
	/// The same element as four trees with composite labels.
	DiagramSum expected_tau3_compact;
	/// Summands of the bracket decomposition of tau_3(psi).
	std::vector<BracketExpr> bracket_terms;
	/// 3 (1/2 T(a1,b1,a1,b1) + T(a1,b1,a2,b2) + 1/2 T(a2,b2,a2,b2)).
	DiagramSum boundary_cube;
	/// The same element as a combination of u (.) v with omega(u,v) = 1.
	DiagramSum boundary_cube_odots;
	/// T(a2,b1,a1,a2) and its expression through four odot symbols.
	DiagramSum mixed_tree;
	DiagramSum mixed_tree_odots;
	/// Second barcode for the curve of t7.
	Barcode y7_alternative;

	TwistList twists() const;
	PsiEntry const &entry(std::string const &name) const;
};

PsiDataset const &load_psi();

/// Morita-form tau_2 of a dataset entry, from the homology of its spine
/// curves (each pair ordered so that omega = 1).
DiagramSum morita_form(PsiEntry const &entry, int genus);

/// Evaluates a bracket expression as a derivation through eta.
Derivation evaluate(BracketExpr const &e, int genus, int trunc);

} // namespace torelli
