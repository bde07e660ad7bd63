// Whole-semigroup sweeps that cross-check every characterization against
// the brute-force oracle.

#ifndef BXP_SURVEY_HPP_
#define BXP_SURVEY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bxp/core.hpp"
#include "bxp/greens.hpp"
#include "bxp/oracle.hpp"

namespace bxp {

  struct SurveyOptions {
    std::uint64_t cap = default_cap;
    //! Worker threads for the pairwise sweep; 0 picks the hardware count.
    unsigned threads = 0;
    //! At most this many discrepancy messages are kept (all are counted).
    std::size_t max_messages = 100;
  };

  struct SurveyReport {
    std::size_t              degree = 0;
    std::vector<std::size_t> block_sizes;
    std::string              blocks;
    std::uint64_t            formula_size = 0;
    std::size_t              size         = 0;

    std::size_t l_classes = 0;
    std::size_t r_classes = 0;
    std::size_t h_classes = 0;
    std::size_t d_classes = 0;
    std::size_t j_classes = 0;
    std::size_t distinct_size_profiles = 0;

    std::size_t units                = 0;
    std::size_t regular              = 0;
    std::size_t unit_regular         = 0;
    bool        semigroup_unit_regular = false;
    //! Elements satisfying the two-consecutive-sizes condition.
    std::size_t two_consecutive      = 0;
    std::uint64_t pairs_checked      = 0;

    std::uint64_t            discrepancy_count = 0;
    std::vector<std::string> discrepancies;

    bool ok() const noexcept {
      return discrepancy_count == 0;
    }
  };

  //! Enumerates B(X, P) and compares, for every element and every ordered
  //! pair, the characterizations (regularity witnesses, unit-regularity,
  //! leq_L, eq_L, leq_R, eq_R, eq_H, both eq_D routes, leq_J, eq_J, and
  //! every returned witness) with the ideal-based oracle. Also checks the
  //! counting formula, D = J, and that D-classes match size profiles.
  //! Throws TooLarge.
  SurveyReport survey(Partition const& P, SurveyOptions const& opts = {});

  struct ConjectureRow {
    Transformation           f;
    SizeProfile              profile;
    ConjectureTriple         triple;
    bool                     two_consecutive = false;
    //! D_f = J_f under the oracle.
    bool                     d_equals_j = false;
  };

  struct ConjectureReport {
    std::string                blocks;
    std::size_t                size = 0;
    std::vector<ConjectureRow> rows;
    std::size_t                two_consecutive = 0;
    //! Rows with D_f != J_f; always zero for finite partitions.
    std::size_t                d_neq_j = 0;
  };

  //! Throws TooLarge.
  ConjectureReport conjecture_survey(Partition const&     P,
                                     SurveyOptions const& opts = {});

}  // namespace bxp

#endif  // BXP_SURVEY_HPP_
