#pragma once

// Tree-like Jacobi diagrams of degree 1..3 with H-labelled leaves, their
// expansion into H (x) L_{k+1}(H) and the mod-3 map kappa on degree 2.
//
// Primitive trees are caterpillars drawn with the first and last leaf at
// the ends of a horizontal spine and the other leaves above it:
//
//      l1  l2  l3
//      |   |   |
//  l0 -+---+---+- l4
//
// Every trivalent vertex is oriented counterclockwise in this picture. The
// rooted reading sends a vertex whose children follow the parent edge in
// counterclockwise order (c1, c2) to [c2, c1]; a leaf reads as its label.
// With this, T(a,b,c,d) expands to N([a,b][c,d]) and T(a,b,c,d,e) to
// N([a,b][c,[d,e]]), N being the cyclicization.
//
// Three-leaf trees are the exception: T(r,a,b) is the Y with r at the root
// and reads [b,a] from r, so that it expands to -N([r,a]b). This is the
// orientation under which the bracket decomposition of tau_3(psi) holds
// without a sign.

#include "torelli/rational.hpp"
#include "torelli/surface.hpp"
#include "torelli/tensor.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace torelli {

class TreeDiagram
{
  public:
	/// Caterpillar with labels l0..l_{k+1}; degree k = labels.size() - 2.
	explicit TreeDiagram(std::vector<HVector> labels);

	int degree() const { return static_cast<int>(labels_.size()) - 2; }
	int genus() const { return labels_.front().genus(); }
	std::vector<HVector> const &labels() const { return labels_; }

	bool operator==(TreeDiagram const &) const = default;

  private:
	std::vector<HVector> labels_;
};

/// u (.) v, half of the symmetric tree T(u,v,u,v).
struct Odot
{
	HVector u;
	HVector v;

	bool operator==(Odot const &) const = default;
};

using DiagramTerm = std::variant<TreeDiagram, Odot>;

/// Formal rational combination of trees and odot symbols. No relations are
/// applied; equality is decided on eta-images.
class DiagramSum
{
  public:
	using Entry = std::pair<Rational, DiagramTerm>;

	DiagramSum() = default;
	DiagramSum(TreeDiagram t) { add(Rational(1), std::move(t)); }
	DiagramSum(Odot o) { add(Rational(1), std::move(o)); }

	std::vector<Entry> const &entries() const { return entries_; }
	bool empty() const { return entries_.empty(); }

	void add(Rational const &c, DiagramTerm term);

	DiagramSum &operator+=(DiagramSum const &o);
	DiagramSum &operator-=(DiagramSum const &o);
	DiagramSum &operator*=(Rational const &c);
	friend DiagramSum operator+(DiagramSum a, DiagramSum const &b) { return a += b; }
	friend DiagramSum operator-(DiagramSum a, DiagramSum const &b) { return a -= b; }
	friend DiagramSum operator-(DiagramSum a) { return a *= Rational(-1); }
	friend DiagramSum operator*(Rational const &c, DiagramSum a) { return a *= c; }

  private:
	std::vector<Entry> entries_;
};

/// Planar tree: leaves carry labels; each trivalent vertex lists its three
/// neighbours counterclockwise.
struct PlanarTree
{
	std::vector<std::vector<int>> neighbours;
	std::map<int, HVector> leaf_labels;
};

PlanarTree embed(TreeDiagram const &t);

/// Bracket reading of the tree rooted at `root` (a leaf).
Tensor rooted_reading(PlanarTree const &tree, int root, int trunc);

/// sum over leaves x of label(x) (x) reading rooted at x.
Tensor eta(TreeDiagram const &t, int trunc = Tensor::default_trunc);
/// eta(1/2 T(u,v,u,v)).
Tensor eta(Odot const &o, int trunc = Tensor::default_trunc);
Tensor eta(DiagramSum const &d, int trunc = Tensor::default_trunc);

TreeDiagram tree(HVector a, HVector b, HVector c);
TreeDiagram tree(HVector a, HVector b, HVector c, HVector d);
TreeDiagram tree(HVector a, HVector b, HVector c, HVector d, HVector e);
DiagramSum odot(HVector const &u, HVector const &v);

/// sum_i u_i (.) v_i + sum_{i<j} T(u_i, v_i, u_j, v_j). The pairs must form
/// a symplectic family; throws DomainError otherwise.
DiagramSum morita_tau2(std::vector<std::pair<HVector, HVector>> const &pairs);

/// Element of the fourth exterior power of H/3H in the wedge basis
/// e_i ^ e_j ^ e_k ^ e_l, i < j < k < l (indices 0-based over a_1..b_g).
class Wedge4Mod3
{
  public:
	using Key = std::array<int, 4>;

	void add_wedge(std::array<int, 4> idx, int coeff);
	std::map<Key, int> const &coefficients() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }

	Wedge4Mod3 &operator+=(Wedge4Mod3 const &o);
	bool operator==(Wedge4Mod3 const &) const = default;

  private:
	std::map<Key, int> coeffs_; // values in {1, 2}
};

/// kappa(u (.) v) = 0, kappa(T(a,b,c,d)) = a ^ b ^ c ^ d mod 3. Throws
/// DomainError for trees of degree != 2 or coefficients with denominator
/// divisible by 3.
Wedge4Mod3 kappa(DiagramSum const &d);

/// a ^ b ^ c ^ d expanded in the wedge basis mod 3.
Wedge4Mod3 wedge(HVector const &a, HVector const &b, HVector const &c,
                 HVector const &d);

/// Text form, e.g. "1/1 T(1,0,0,0;0,0,1,0;0,1,0,0) - 1/2 O(1,0,0,0;0,0,1,0)".
std::string to_string(DiagramSum const &d);

} // namespace torelli
