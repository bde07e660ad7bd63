#include "bxp/greens.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bxp {

  std::string_view to_string(Relation r) noexcept {
    switch (r) {
      case Relation::LeqL:
        return "leqL";
      case Relation::EqL:
        return "L";
      case Relation::LeqR:
        return "leqR";
      case Relation::EqR:
        return "R";
      case Relation::EqD:
        return "D";
      case Relation::LeqJ:
        return "leqJ";
      case Relation::EqJ:
        return "J";
      case Relation::EqH:
        return "H";
    }
    return "?";
  }

  namespace {
    void check_same_partition(BElement const& f, BElement const& g) {
      if (f.shared_partition() != g.shared_partition()
          && !(f.partition() == g.partition())) {
        throw InvalidPartition("elements belong to different partitions");
      }
    }

    bool is_subset(std::vector<point_type> const& a,
                   std::vector<point_type> const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    // Block indices ordered by image size, ties by index.
    std::vector<std::size_t> order_by_image_size(BElement const& f) {
      std::vector<std::size_t> order(f.partition().number_of_blocks());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&f](auto a, auto b) {
        return f.block_image_size(a) < f.block_image_size(b);
      });
      return order;
    }

    // alpha with i alpha = to[k] whenever i = from[k].
    Permutation pairing(std::vector<std::size_t> const& from,
                        std::vector<std::size_t> const& to) {
      std::vector<std::size_t> alpha(from.size());
      for (std::size_t k = 0; k < from.size(); ++k) {
        alpha[from[k]] = to[k];
      }
      return Permutation(std::move(alpha));
    }

    bool dominated(BElement const& f, BElement const& g) {
      auto s = f.block_image_sizes();
      auto t = g.block_image_sizes();
      std::sort(s.begin(), s.end());
      std::sort(t.begin(), t.end());
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] > t[k]) {
          return false;
        }
      }
      return true;
    }

    std::optional<GreensWitness> with_alpha(Relation                   r,
                                            std::optional<Permutation> alpha) {
      if (!alpha) {
        return std::nullopt;
      }
      return GreensWitness{r, std::move(alpha), std::nullopt};
    }

    template <typename Pred>
    bool holds_blockwise(Permutation const& alpha,
                         std::size_t        m,
                         Pred&&             pred) {
      if (alpha.degree() != m) {
        return false;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (!pred(i, alpha[i])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Matching
  ////////////////////////////////////////////////////////////////////////

  std::optional<Permutation>
  perfect_matching(std::vector<std::vector<bool>> const& adjacent) {
    std::size_t const m      = adjacent.size();
    constexpr auto    unset  = static_cast<std::size_t>(-1);
    std::vector<std::size_t> row_of(m, unset);

    std::vector<bool>                       visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t row) {
      for (std::size_t col = 0; col < m; ++col) {
        if (!adjacent[row][col] || visited[col]) {
          continue;
        }
        visited[col] = true;
        if (row_of[col] == unset || augment(row_of[col])) {
          row_of[col] = row;
          return true;
        }
      }
      return false;
    };

    for (std::size_t row = 0; row < m; ++row) {
      visited.assign(m, false);
      if (!augment(row)) {
        return std::nullopt;
      }
    }
    std::vector<std::size_t> col_of(m);
    for (std::size_t col = 0; col < m; ++col) {
      col_of[row_of[col]] = col;
    }
    return Permutation(std::move(col_of));
  }

  ////////////////////////////////////////////////////////////////////////
  // L
  ////////////////////////////////////////////////////////////////////////

  std::optional<GreensWitness> leq_L(BElement const& f, BElement const& g) {
    check_same_partition(f, g);
    std::size_t const              m = f.partition().number_of_blocks();
    std::vector<std::vector<bool>> adjacent(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        adjacent[i][j] = is_subset(f.block_image(i), g.block_image(j));
      }
    }
    return with_alpha(Relation::LeqL, perfect_matching(adjacent));
  }

  std::optional<GreensWitness> eq_L(BElement const& f, BElement const& g) {
    check_same_partition(f, g);
    std::size_t const m = f.partition().number_of_blocks();
    // Sort both families of image sets and pair equal ones in order.
    std::vector<std::size_t> fi(m), gi(m);
    std::iota(fi.begin(), fi.end(), 0);
    std::iota(gi.begin(), gi.end(), 0);
    std::sort(fi.begin(), fi.end(), [&f](auto a, auto b) {
      return f.block_image(a) < f.block_image(b);
    });
    std::sort(gi.begin(), gi.end(), [&g](auto a, auto b) {
      return g.block_image(a) < g.block_image(b);
    });
    for (std::size_t k = 0; k < m; ++k) {
      if (f.block_image(fi[k]) != g.block_image(gi[k])) {
        return std::nullopt;
      }
    }
    return GreensWitness{Relation::EqL, pairing(fi, gi), std::nullopt};
  }

  std::optional<GreensWitness> leq_L(Transformation const& f,
                                     Transformation const& g,
                                     Partition const&      P) {
    auto shared = std::make_shared<Partition const>(P);
    return leq_L(BElement(f, shared), BElement(g, shared));
  }

  std::optional<GreensWitness> eq_L(Transformation const& f,
                                    Transformation const& g,
                                    Partition const&      P) {
    auto shared = std::make_shared<Partition const>(P);
    return eq_L(BElement(f, shared), BElement(g, shared));
  }

  ////////////////////////////////////////////////////////////////////////
  // R and H
  ////////////////////////////////////////////////////////////////////////

  bool leq_R(BElement const& f, BElement const& g) {
    check_same_partition(f, g);
    return refines(g.kernel(), f.kernel());
  }

  bool eq_R(BElement const& f, BElement const& g) {
    check_same_partition(f, g);
    return f.kernel() == g.kernel();
  }

  bool eq_H(BElement const& f, BElement const& g) {
    return eq_L(f, g).has_value() && eq_R(f, g);
  }

  bool leq_R(Transformation const& f,
             Transformation const& g,
             Partition const&      P) {
    auto shared = std::make_shared<Partition const>(P);
    return leq_R(BElement(f, shared), BElement(g, shared));
  }

  bool eq_R(Transformation const& f,
            Transformation const& g,
            Partition const&      P) {
    auto shared = std::make_shared<Partition const>(P);
    return eq_R(BElement(f, shared), BElement(g, shared));
  }

  bool eq_H(Transformation const& f,
            Transformation const& g,
            Partition const&      P) {
    auto shared = std::make_shared<Partition const>(P);
    return eq_H(BElement(f, shared), BElement(g, shared));
  }

  ////////////////////////////////////////////////////////////////////////
  // D
  ////////////////////////////////////////////////////////////////////////

  std::optional<GreensWitness> eq_D(BElement const& f, BElement const& g) {
    check_same_partition(f, g);
    if (f.size_profile() != g.size_profile()) {
      return std::nullopt;
    }
    // Equal profiles: the k-th block in (size, index) order of f pairs with
    // the k-th of g, and both have the same image size.
    return GreensWitness{Relation::EqD,
                         pairing(order_by_image_size(f), order_by_image_size(g)),
                         std::nullopt};
  }

  std::optional<GreensWitness> eq_D_by_matching(BElement const& f,
                                                BElement const& g) {
    check_same_partition(f, g);
    std::size_t const              m = f.partition().number_of_blocks();
    std::vector<std::vector<bool>> adjacent(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        adjacent[i][j] = f.block_image_size(i) == g.block_image_size(j);
      }
    }
    return with_alpha(Relation::EqD, perfect_matching(adjacent));
  }

  std::optional<GreensWitness> eq_D(Transformation const& f,
                                    Transformation const& g,
                                    Partition const&      P) {
    auto shared = std::make_shared<Partition const>(P);
    return eq_D(BElement(f, shared), BElement(g, shared));
  }

  ////////////////////////////////////////////////////////////////////////
  // J
  ////////////////////////////////////////////////////////////////////////

  std::optional<GreensWitness> leq_J(BElement const& f, BElement const& g) {
    check_same_partition(f, g);
    if (!dominated(f, g)) {
      return std::nullopt;
    }
    return GreensWitness{Relation::LeqJ,
                         pairing(order_by_image_size(f), order_by_image_size(g)),
                         std::nullopt};
  }

  std::optional<GreensWitness> eq_J(BElement const& f, BElement const& g) {
    auto forward = leq_J(f, g);
    if (!forward) {
      return std::nullopt;
    }
    auto backward = leq_J(g, f);
    if (!backward) {
      return std::nullopt;
    }
    return GreensWitness{Relation::EqJ,
                         std::move(forward->alpha),
                         std::move(backward->alpha)};
  }

  std::optional<GreensWitness> leq_J(Transformation const& f,
                                     Transformation const& g,
                                     Partition const&      P) {
    auto shared = std::make_shared<Partition const>(P);
    return leq_J(BElement(f, shared), BElement(g, shared));
  }

  std::optional<GreensWitness> eq_J(Transformation const& f,
                                    Transformation const& g,
                                    Partition const&      P) {
    auto shared = std::make_shared<Partition const>(P);
    return eq_J(BElement(f, shared), BElement(g, shared));
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness verification
  ////////////////////////////////////////////////////////////////////////

  bool verify(GreensWitness const& w, BElement const& f, BElement const& g) {
    check_same_partition(f, g);
    std::size_t const m = f.partition().number_of_blocks();
    switch (w.relation) {
      case Relation::LeqL:
        return w.alpha && holds_blockwise(*w.alpha, m, [&](auto i, auto j) {
                 return is_subset(f.block_image(i), g.block_image(j));
               });
      case Relation::EqL:
        return w.alpha && holds_blockwise(*w.alpha, m, [&](auto i, auto j) {
                 return f.block_image(i) == g.block_image(j);
               });
      case Relation::EqD:
        return w.alpha && holds_blockwise(*w.alpha, m, [&](auto i, auto j) {
                 return f.block_image_size(i) == g.block_image_size(j);
               });
      case Relation::LeqJ:
        return w.alpha && holds_blockwise(*w.alpha, m, [&](auto i, auto j) {
                 return f.block_image_size(i) <= g.block_image_size(j);
               });
      case Relation::EqJ:
        return w.alpha && w.beta
               && holds_blockwise(*w.alpha,
                                  m,
                                  [&](auto i, auto j) {
                                    return f.block_image_size(i)
                                           <= g.block_image_size(j);
                                  })
               && holds_blockwise(*w.beta, m, [&](auto i, auto j) {
                    return g.block_image_size(i) <= f.block_image_size(j);
                  });
      case Relation::LeqR:
        return refines(g.kernel(), f.kernel());
      case Relation::EqR:
        return f.kernel() == g.kernel();
      case Relation::EqH:
        return f.kernel() == g.kernel() && eq_L(f, g).has_value();
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // D = J
  ////////////////////////////////////////////////////////////////////////

  bool d_equals_j_semigroup(Partition const& P) {
    std::vector<std::size_t> large;
    for (std::size_t i = 0; i < P.number_of_blocks(); ++i) {
      if (P.block_size(i) >= 3) {
        large.push_back(i);
      }
    }
    // Holds iff `large` is finite, which every index set here is.
    return large.size() <= P.number_of_blocks();
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  two_consecutive_condition(BElement const& f) {
    auto const profile = f.size_profile();
    auto const lo      = profile.counts.begin()->first;
    auto const hi      = profile.counts.rbegin()->first;
    if (hi - lo > 1) {
      return std::nullopt;
    }
    return std::pair{lo, lo + 1};
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  two_consecutive_condition(Transformation const& f, Partition const& P) {
    return two_consecutive_condition(BElement(f, P));
  }

  ConjectureTriple conjecture_condition(BElement const& f) {
    auto const        sizes = f.block_image_sizes();
    std::size_t const top   = *std::max_element(sizes.begin(), sizes.end());

    ConjectureTriple best{1, 2, {}};
    std::size_t      best_outside = sizes.size() + 1;
    for (std::size_t lambda = 1; lambda <= top; ++lambda) {
      std::vector<std::size_t> outside;
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] != lambda && sizes[i] != lambda + 1) {
          outside.push_back(i);
        }
      }
      if (outside.size() < best_outside) {
        best_outside = outside.size();
        best         = {lambda, lambda + 1, std::move(outside)};
      }
    }
    return best;
  }

  ConjectureTriple conjecture_condition(Transformation const& f,
                                        Partition const&      P) {
    return conjecture_condition(BElement(f, P));
  }

}  // namespace bxp
