#include "bxp/survey.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "bxp/instance.hpp"
#include "bxp/regularity.hpp"

namespace bxp {

  namespace {
    std::string show(Transformation const& f) {
      return format_list(f.images());
    }

    std::string mismatch(std::string_view      what,
                         Transformation const& f,
                         Transformation const& g,
                         bool                  characterization,
                         bool                  oracle) {
      return std::string(what) + "(" + show(f) + ", " + show(g)
             + "): characterization=" + (characterization ? "yes" : "no")
             + " oracle=" + (oracle ? "yes" : "no");
    }

    // Collects discrepancy messages from worker threads, keyed by row so the
    // final list does not depend on scheduling.
    class Discrepancies {
     public:
      explicit Discrepancies(std::size_t max_messages)
          : _max_messages(max_messages) {}

      void add(std::size_t row, std::string msg) {
        std::lock_guard lock(_mutex);
        ++_count;
        _messages.emplace(row, _serial++, std::move(msg));
      }

      std::uint64_t count() const {
        return _count;
      }

      std::vector<std::string> messages() const {
        std::vector<std::string> out;
        for (auto const& [row, serial, msg] : _messages) {
          if (out.size() == _max_messages) {
            break;
          }
          out.push_back(msg);
        }
        return out;
      }

     private:
      std::size_t                                              _max_messages;
      std::mutex                                               _mutex;
      std::uint64_t                                            _count  = 0;
      std::uint64_t                                            _serial = 0;
      std::set<std::tuple<std::size_t, std::uint64_t, std::string>> _messages;
    };

    template <typename Fn>
    void for_each_row(std::size_t n, unsigned threads, Fn&& fn) {
      if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
      }
      threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
      if (threads <= 1) {
        for (std::size_t row = 0; row < n; ++row) {
          fn(row);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t row = next++; row < n; row = next++) {
            fn(row);
          }
        });
      }
    }

    std::vector<BElement> wrap_all(SemigroupTable const& T) {
      std::vector<BElement> result;
      result.reserve(T.size());
      for (auto const& f : T.elements()) {
        result.emplace_back(f, T.shared_partition());
      }
      return result;
    }

    bool is_regularity_witness(Transformation const& f,
                               Transformation const& g,
                               Partition const&      P) {
      return compose(compose(f, g), f) == f && in_B(g, P)
             && character(g, P).as_permutation()
                    == character(f, P).as_permutation()->inverse();
    }

    // One element's checks against the oracle.
    void check_element(std::size_t           k,
                       SemigroupTable const& T,
                       Discrepancies&        bad,
                       std::atomic<std::size_t>& regular,
                       std::atomic<std::size_t>& unit_regular) {
      auto const& P = T.partition();
      auto const& f = T.at(k);

      bool const oracle_reg = oracle_regular(f, T);
      regular += oracle_reg;
      auto const w = regular_witness(f, P);
      if (!oracle_reg || !is_regularity_witness(f, w.g, P)) {
        bad.add(k, "regular_witness(" + show(f) + ") failed");
      }

      bool const oracle_ureg = oracle_unit_regular(f, T);
      bool const char_ureg   = is_unit_regular(f, P);
      unit_regular += oracle_ureg;
      if (oracle_ureg != char_ureg) {
        bad.add(k, mismatch("unit_regular", f, f, char_ureg, oracle_ureg));
      }
      if (char_ureg) {
        auto const u = unit_regular_witness(f, P);
        if (!is_unit(u.g, P) || !is_regularity_witness(f, u.g, P)) {
          bad.add(k, "unit_regular_witness(" + show(f) + ") failed");
        }
      }
    }

    void check_row(std::size_t                  r,
                   SemigroupTable const&        T,
                   IdealOracle const&           O,
                   std::vector<BElement> const& elements,
                   Discrepancies&               bad) {
      auto const& ef = elements[r];
      auto const& f  = ef.transformation();

      auto compare = [&](std::string_view what, std::size_t c, bool mine,
                         bool theirs) {
        if (mine != theirs) {
          bad.add(r, mismatch(what, f, elements[c].transformation(), mine, theirs));
        }
      };
      auto check_witness = [&](std::optional<GreensWitness> const& w,
                               std::size_t                         c) {
        if (w && !verify(*w, ef, elements[c])) {
          bad.add(r,
                  std::string("invalid ") + std::string(to_string(w->relation))
                      + " witness for (" + show(f) + ", "
                      + show(elements[c].transformation()) + ")");
        }
      };

      for (std::size_t c = 0; c < T.size(); ++c) {
        auto const& eg = elements[c];

        auto const ll = leq_L(ef, eg);
        compare("leqL", c, ll.has_value(), O.leq_L(r, c));
        check_witness(ll, c);

        auto const l = eq_L(ef, eg);
        compare("L", c, l.has_value(), O.eq_L(r, c));
        check_witness(l, c);

        compare("leqR", c, leq_R(ef, eg), O.leq_R(r, c));
        compare("R", c, eq_R(ef, eg), O.eq_R(r, c));
        compare("H", c, eq_H(ef, eg), O.eq_H(r, c));

        auto const d  = eq_D(ef, eg);
        auto const dm = eq_D_by_matching(ef, eg);
        compare("D", c, d.has_value(), O.eq_D(r, c));
        compare("D(matching vs profile)", c, dm.has_value(), d.has_value());
        check_witness(d, c);
        check_witness(dm, c);

        auto const lj = leq_J(ef, eg);
        compare("leqJ", c, lj.has_value(), O.leq_J(r, c));
        check_witness(lj, c);

        auto const ej = eq_J(ef, eg);
        compare("J", c, ej.has_value(), O.eq_J(r, c));
        check_witness(ej, c);

        compare("D=J(oracle)", c, O.eq_D(r, c), O.eq_J(r, c));
      }
    }
  }  // namespace

  SurveyReport survey(Partition const& P, SurveyOptions const& opts) {
    SemigroupTable const T(P, opts.cap);
    IdealOracle const    O(T);
    auto const           elements = wrap_all(T);

    SurveyReport report;
    report.degree = P.degree();
    for (auto const& b : P.blocks()) {
      report.block_sizes.push_back(b.size());
    }
    report.blocks                 = format_partition(P);
    report.formula_size           = b_size(P);
    report.size                   = T.size();
    report.l_classes              = O.number_of_l_classes();
    report.r_classes              = O.number_of_r_classes();
    report.h_classes              = O.number_of_h_classes();
    report.d_classes              = O.number_of_d_classes();
    report.j_classes              = O.number_of_j_classes();
    report.units                  = T.units().size();
    report.semigroup_unit_regular = semigroup_unit_regular(P);

    Discrepancies bad(opts.max_messages);
    if (report.formula_size != report.size) {
      bad.add(0, "counting formula gives " + std::to_string(report.formula_size)
                     + " but enumeration found " + std::to_string(report.size));
    }

    std::set<SizeProfile::Map> profiles;
    for (auto const& e : elements) {
      profiles.insert(e.size_profile().counts);
      report.two_consecutive += two_consecutive_condition(e).has_value();
    }
    report.distinct_size_profiles = profiles.size();
    if (profiles.size() != report.d_classes) {
      bad.add(0, "D-class count " + std::to_string(report.d_classes)
                     + " differs from the number of size profiles "
                     + std::to_string(profiles.size()));
    }

    std::atomic<std::size_t> regular{0}, unit_regular{0};
    for_each_row(T.size(), opts.threads, [&](std::size_t r) {
      check_element(r, T, bad, regular, unit_regular);
      check_row(r, T, O, elements, bad);
    });
    report.regular       = regular;
    report.unit_regular  = unit_regular;
    report.pairs_checked = std::uint64_t(T.size()) * T.size();

    if (report.semigroup_unit_regular != (report.unit_regular == report.size)) {
      bad.add(T.size(), "semigroup_unit_regular disagrees with the oracle");
    }

    report.discrepancy_count = bad.count();
    report.discrepancies     = bad.messages();
    return report;
  }

  ConjectureReport conjecture_survey(Partition const&     P,
                                     SurveyOptions const& opts) {
    SemigroupTable const T(P, opts.cap);
    IdealOracle const    O(T);

    ConjectureReport report;
    report.blocks = format_partition(P);
    report.size   = T.size();
    report.rows.resize(T.size());
    for_each_row(T.size(), opts.threads, [&](std::size_t r) {
      BElement const e(T.at(r), T.shared_partition());
      auto&          row = report.rows[r];
      row.f               = T.at(r);
      row.profile         = e.size_profile();
      row.triple          = conjecture_condition(e);
      row.two_consecutive = two_consecutive_condition(e).has_value();
      row.d_equals_j      = true;
      for (std::size_t c = 0; c < T.size(); ++c) {
        if (O.eq_D(r, c) != O.eq_J(r, c)) {
          row.d_equals_j = false;
          break;
        }
      }
    });
    for (auto const& row : report.rows) {
      report.two_consecutive += row.two_consecutive;
      report.d_neq_j += !row.d_equals_j;
    }
    return report;
  }

}  // namespace bxp
