// Brute-force ground truth for small B(X, P): full enumeration, and Green's
// relations, regularity and unit-regularity decided straight from their
// definitions. Since B(X, P) is a monoid, S^1 = S throughout.

#ifndef BXP_ORACLE_HPP_
#define BXP_ORACLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bxp/core.hpp"

namespace bxp {

  inline constexpr std::uint64_t default_cap = 200'000;

  //! Sum over alpha in Sym(I) of prod_i |X_{i alpha}|^{|X_i|}, saturating at
  //! UINT64_MAX. Exact for up to 20 blocks; beyond that a lower bound.
  std::uint64_t b_size(Partition const& P);

  //! All elements of B(X, P) in ascending lexicographic order of their
  //! image lists.
  class SemigroupTable {
   public:
    //! Throws TooLarge if b_size(P) exceeds `cap`.
    explicit SemigroupTable(Partition P, std::uint64_t cap = default_cap);

    //! Rebuilds a table from a stored element list; the list is validated
    //! against P (membership, no duplicates, completeness).
    SemigroupTable(Partition P, std::vector<Transformation> elements);

    Partition const& partition() const noexcept {
      return *_partition;
    }

    std::shared_ptr<Partition const> const& shared_partition() const noexcept {
      return _partition;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::vector<Transformation> const& elements() const noexcept {
      return _elements;
    }

    Transformation const& at(std::size_t k) const {
      return _elements.at(k);
    }

    bool contains(Transformation const& f) const {
      return _index.contains(f);
    }

    //! Throws ElementNotInTable.
    std::size_t index(Transformation const& f) const;

    //! Indices of the units, ascending.
    std::vector<std::size_t> const& units() const noexcept {
      return _units;
    }

    std::size_t identity_index() const;

   private:
    void build_index();

    std::shared_ptr<Partition const>                   _partition;
    std::vector<Transformation>                        _elements;
    std::unordered_map<Transformation, std::size_t>    _index;
    std::vector<std::size_t>                           _units;
  };

  //! Same as constructing a SemigroupTable.
  SemigroupTable enumerate(Partition const& P, std::uint64_t cap = default_cap);

  ////////////////////////////////////////////////////////////////////////
  // Direct searches. Each query scans the table; ElementNotInTable is
  // thrown for arguments outside it.
  ////////////////////////////////////////////////////////////////////////

  //! f = hg for some h.
  bool oracle_leq_L(Transformation const& f,
                    Transformation const& g,
                    SemigroupTable const& T);
  //! f = gh for some h.
  bool oracle_leq_R(Transformation const& f,
                    Transformation const& g,
                    SemigroupTable const& T);
  //! f = h g h1 for some h, h1.
  bool oracle_leq_J(Transformation const& f,
                    Transformation const& g,
                    SemigroupTable const& T);
  //! Some h is L-related to f and R-related to g.
  bool oracle_eq_D(Transformation const& f,
                   Transformation const& g,
                   SemigroupTable const& T);
  //! fbf = f for some b.
  bool oracle_regular(Transformation const& f, SemigroupTable const& T);
  //! fuf = f for some unit u.
  bool oracle_unit_regular(Transformation const& f, SemigroupTable const& T);

  ////////////////////////////////////////////////////////////////////////
  // Memoized ideals for pairwise sweeps
  ////////////////////////////////////////////////////////////////////////

  //! Principal left, right and two-sided ideals of every element, stored as
  //! bitsets over table indices, with the L, R, H, D, J class of each
  //! element. Memory is quadratic in |T|.
  class IdealOracle {
   public:
    explicit IdealOracle(SemigroupTable const& T);

    std::size_t size() const noexcept {
      return _n;
    }

    bool leq_L(std::size_t f, std::size_t g) const {
      return test(_left, g, f);
    }
    bool leq_R(std::size_t f, std::size_t g) const {
      return test(_right, g, f);
    }
    bool leq_J(std::size_t f, std::size_t g) const {
      return test(_two_sided, g, f);
    }
    bool eq_L(std::size_t f, std::size_t g) const {
      return _l_class[f] == _l_class[g];
    }
    bool eq_R(std::size_t f, std::size_t g) const {
      return _r_class[f] == _r_class[g];
    }
    bool eq_H(std::size_t f, std::size_t g) const {
      return eq_L(f, g) && eq_R(f, g);
    }
    bool eq_J(std::size_t f, std::size_t g) const {
      return _j_class[f] == _j_class[g];
    }
    //! Some h has h L f and h R g.
    bool eq_D(std::size_t f, std::size_t g) const {
      return _lr_present[_l_class[f] * _number_of_r + _r_class[g]];
    }

    //! Class ids are dense, numbered by first occurrence in table order.
    std::vector<std::size_t> const& l_classes() const noexcept {
      return _l_class;
    }
    std::vector<std::size_t> const& r_classes() const noexcept {
      return _r_class;
    }
    std::vector<std::size_t> const& h_classes() const noexcept {
      return _h_class;
    }
    std::vector<std::size_t> const& d_classes() const noexcept {
      return _d_class;
    }
    std::vector<std::size_t> const& j_classes() const noexcept {
      return _j_class;
    }

    std::size_t number_of_l_classes() const noexcept;
    std::size_t number_of_r_classes() const noexcept;
    std::size_t number_of_h_classes() const noexcept;
    std::size_t number_of_d_classes() const noexcept;
    std::size_t number_of_j_classes() const noexcept;

   private:
    using bitset = std::vector<std::uint64_t>;

    static bool test(std::vector<bitset> const& ideals,
                     std::size_t                owner,
                     std::size_t                k) {
      return (ideals[owner][k >> 6] >> (k & 63)) & 1;
    }

    std::size_t              _n;
    std::vector<bitset>      _left;
    std::vector<bitset>      _right;
    std::vector<bitset>      _two_sided;
    std::vector<std::size_t> _l_class;
    std::vector<std::size_t> _r_class;
    std::vector<std::size_t> _h_class;
    std::vector<std::size_t> _d_class;
    std::vector<std::size_t> _j_class;
    std::size_t              _number_of_r = 0;
    //! (L-class, R-class) pairs that share an element.
    std::vector<bool>        _lr_present;
  };

  ////////////////////////////////////////////////////////////////////////
  // Table dumps
  ////////////////////////////////////////////////////////////////////////

  //! Writes the versioned JSON table dump described in docs/formats.md.
  void write_table(std::ostream& out, SemigroupTable const& T);

  //! Reads a dump written by write_table. Throws ParseError.
  SemigroupTable read_table(std::istream& in);

}  // namespace bxp

#endif  // BXP_ORACLE_HPP_
