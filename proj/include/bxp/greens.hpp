// Green's relations on B(X, P), decided from block images, kernels and
// image sizes rather than from ideals.
//
// Every decider that has a block permutation in its characterization
// returns it, so callers can check the defining condition directly:
//
//   leq_L  X_i f  is a subset of  X_{i alpha} g
//   eq_L   X_i f  =  X_{i alpha} g
//   eq_D   |X_i f|  =  |X_{i alpha} g|
//   leq_J  |X_i f| <= |X_{i alpha} g|
//   eq_J   leq_J(f, g) via alpha and leq_J(g, f) via beta
//
// All deciders taking Transformation arguments throw NotInB for inputs
// outside B(X, P).

#ifndef BXP_GREENS_HPP_
#define BXP_GREENS_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bxp/core.hpp"

namespace bxp {

  enum class Relation { LeqL, EqL, LeqR, EqR, EqD, LeqJ, EqJ, EqH };

  std::string_view to_string(Relation r) noexcept;

  struct GreensWitness {
    Relation                   relation;
    std::optional<Permutation> alpha;
    std::optional<Permutation> beta;
  };

  //! Substitutes the witness into the defining condition of its relation.
  //! Relations with no block permutation (LeqR, EqR, EqH) are checked
  //! against the kernels.
  bool verify(GreensWitness const& w, BElement const& f, BElement const& g);

  ////////////////////////////////////////////////////////////////////////
  // L
  ////////////////////////////////////////////////////////////////////////

  std::optional<GreensWitness> leq_L(BElement const& f, BElement const& g);
  std::optional<GreensWitness> eq_L(BElement const& f, BElement const& g);

  std::optional<GreensWitness> leq_L(Transformation const& f,
                                     Transformation const& g,
                                     Partition const&      P);
  std::optional<GreensWitness> eq_L(Transformation const& f,
                                    Transformation const& g,
                                    Partition const&      P);

  ////////////////////////////////////////////////////////////////////////
  // R and H
  ////////////////////////////////////////////////////////////////////////

  //! R_f <= R_g, i.e. pi(g) refines pi(f).
  bool leq_R(BElement const& f, BElement const& g);
  bool eq_R(BElement const& f, BElement const& g);
  bool eq_H(BElement const& f, BElement const& g);

  bool leq_R(Transformation const& f,
             Transformation const& g,
             Partition const&      P);
  bool eq_R(Transformation const& f, Transformation const& g, Partition const& P);
  bool eq_H(Transformation const& f, Transformation const& g, Partition const& P);

  ////////////////////////////////////////////////////////////////////////
  // D
  ////////////////////////////////////////////////////////////////////////

  //! Decided by equality of size profiles; alpha pairs the blocks of each
  //! image size in ascending block order.
  std::optional<GreensWitness> eq_D(BElement const& f, BElement const& g);

  //! Decided by a perfect matching of blocks with equal image size.
  std::optional<GreensWitness> eq_D_by_matching(BElement const& f,
                                                BElement const& g);

  std::optional<GreensWitness> eq_D(Transformation const& f,
                                    Transformation const& g,
                                    Partition const&      P);

  ////////////////////////////////////////////////////////////////////////
  // J
  ////////////////////////////////////////////////////////////////////////

  //! Sorted dominance: some alpha has |X_i f| <= |X_{i alpha} g| for all i
  //! iff the ascending image sizes of f are pointwise at most those of g.
  //! The witness pairs the k-th smallest of f with the k-th smallest of g.
  std::optional<GreensWitness> leq_J(BElement const& f, BElement const& g);

  //! Both alpha and beta set on success.
  std::optional<GreensWitness> eq_J(BElement const& f, BElement const& g);

  std::optional<GreensWitness> leq_J(Transformation const& f,
                                     Transformation const& g,
                                     Partition const&      P);
  std::optional<GreensWitness> eq_J(Transformation const& f,
                                    Transformation const& g,
                                    Partition const&      P);

  ////////////////////////////////////////////////////////////////////////
  // D = J
  ////////////////////////////////////////////////////////////////////////

  //! D = J on B(X, P) iff the set of blocks with at least three points is
  //! finite; always true for the finite partitions handled here.
  bool d_equals_j_semigroup(Partition const& P);

  //! Consecutive (lambda, lambda + 1) containing every image size of f, if
  //! one exists. A single image size lambda yields (lambda, lambda + 1).
  //! When such a pair exists, D_f = J_f.
  std::optional<std::pair<std::size_t, std::size_t>>
  two_consecutive_condition(BElement const& f);

  std::optional<std::pair<std::size_t, std::size_t>>
  two_consecutive_condition(Transformation const& f, Partition const& P);

  struct ConjectureTriple {
    std::size_t              lambda1;
    std::size_t              lambda2;
    std::vector<std::size_t> exceptional_blocks;
  };

  //! The consecutive pair (lambda1, lambda1 + 1) minimizing the number of
  //! blocks whose image size lies outside it, ties broken by smaller
  //! lambda1, together with those blocks (ascending).
  ConjectureTriple conjecture_condition(BElement const& f);
  ConjectureTriple conjecture_condition(Transformation const& f,
                                        Partition const&      P);

  ////////////////////////////////////////////////////////////////////////
  // Matching
  ////////////////////////////////////////////////////////////////////////

  //! Maximum bipartite matching by augmenting paths on a square 0/1
  //! adjacency matrix (adjacent[row][col]). Returns the row-to-column
  //! assignment if a perfect matching exists.
  std::optional<Permutation>
  perfect_matching(std::vector<std::vector<bool>> const& adjacent);

}  // namespace bxp

#endif  // BXP_GREENS_HPP_
