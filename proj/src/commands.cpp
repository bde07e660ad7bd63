#include "bxp/commands.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "bxp/instance.hpp"
#include "bxp/regularity.hpp"
#include "bxp/survey.hpp"

namespace bxp::cli {

  using ordered_json = nlohmann::ordered_json;

  namespace {
    // Runs `body`, mapping library errors to exit codes.
    template <typename Body>
    int guarded(std::ostream& err, Body&& body) {
      try {
        return body();
      } catch (TooLarge const& e) {
        err << "error: " << e.what() << '\n';
        return exit_cap_exceeded;
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
      }
    }

    BElement wrap(InstanceFile const&                     inst,
                  std::string const&                      name,
                  std::shared_ptr<Partition const> const& P) {
      try {
        return BElement(inst.at(name), P);
      } catch (NotInB const& e) {
        throw NotInB(e.block(), "(in '" + name + "')");
      }
    }

    ordered_json profile_json(SizeProfile const& p) {
      ordered_json j = ordered_json::object();
      for (auto const& [lambda, n] : p.counts) {
        j[std::to_string(lambda)] = n;
      }
      return j;
    }

    std::string profile_text(SizeProfile const& p) {
      std::string out = "{";
      for (auto const& [lambda, n] : p.counts) {
        if (out.size() > 1) {
          out += ", ";
        }
        out += std::to_string(lambda) + ":" + std::to_string(n);
      }
      return out + "}";
    }
  }  // namespace

  std::optional<Relation> parse_relation(std::string const& name) {
    static constexpr std::pair<char const*, Relation> table[] = {
        {"L", Relation::EqL},
        {"R", Relation::EqR},
        {"H", Relation::EqH},
        {"D", Relation::EqD},
        {"J", Relation::EqJ},
        {"leqL", Relation::LeqL},
        {"leqR", Relation::LeqR},
        {"leqJ", Relation::LeqJ},
    };
    for (auto const& [key, r] : table) {
      if (name == key) {
        return r;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // check
  ////////////////////////////////////////////////////////////////////////

  int cmd_check(CheckOptions const& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      auto const inst = load_instance(opts.file);
      auto const P    = std::make_shared<Partition const>(inst.partition);
      auto const f    = wrap(inst, opts.f, P);
      auto const g    = wrap(inst, opts.g, P);

      std::optional<GreensWitness> witness;
      bool                         holds = false;
      switch (opts.relation) {
        case Relation::LeqL:
          witness = leq_L(f, g);
          break;
        case Relation::EqL:
          witness = eq_L(f, g);
          break;
        case Relation::EqD:
          witness = eq_D(f, g);
          break;
        case Relation::LeqJ:
          witness = leq_J(f, g);
          break;
        case Relation::EqJ:
          witness = eq_J(f, g);
          break;
        case Relation::LeqR:
          holds = leq_R(f, g);
          break;
        case Relation::EqR:
          holds = eq_R(f, g);
          break;
        case Relation::EqH:
          holds = eq_H(f, g);
          break;
      }
      if (witness) {
        holds = true;
        if (!verify(*witness, f, g)) {
          err << "internal error: witness fails its defining condition\n";
          return int(exit_input_error);
        }
      }

      if (opts.format == Format::structured) {
        ordered_json j;
        j["relation"] = to_string(opts.relation);
        j["f"]        = opts.f;
        j["g"]        = opts.g;
        j["holds"]    = holds;
        if (witness && witness->alpha) {
          j["alpha"] = witness->alpha->images();
        }
        if (witness && witness->beta) {
          j["beta"] = witness->beta->images();
        }
        out << j.dump() << '\n';
      } else {
        out << (holds ? "YES" : "NO") << '\n';
        if (witness && witness->alpha) {
          out << "alpha: " << format_list(witness->alpha->images()) << '\n';
        }
        if (witness && witness->beta) {
          out << "beta: " << format_list(witness->beta->images()) << '\n';
        }
      }
      return int(holds ? exit_yes : exit_no);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // witness
  ////////////////////////////////////////////////////////////////////////

  int cmd_witness(WitnessOptions const& opts,
                  std::ostream&         out,
                  std::ostream&         err) {
    return guarded(err, [&] {
      auto const inst = load_instance(opts.file);
      auto const P    = std::make_shared<Partition const>(inst.partition);
      auto const f    = wrap(inst, opts.f, P).transformation();

      RegularityWitness w;
      try {
        w = opts.unit ? unit_regular_witness(f, *P) : regular_witness(f, *P);
      } catch (NotUnitRegular const& e) {
        if (opts.format == Format::structured) {
          ordered_json j;
          j["f"]           = opts.f;
          j["unit"]        = true;
          j["obstruction"] = {{"block", e.block()},
                              {"c", e.collapse()},
                              {"d", e.defect()}};
          out << j.dump() << '\n';
        } else {
          out << "NO: block " << e.block() << " has c=" << e.collapse()
              << ", d=" << e.defect() << '\n';
        }
        return int(exit_no);
      }

      bool const regular = compose(compose(f, w.g), f) == f;
      bool const unit    = is_unit(w.g, *P);
      if (!regular || (opts.unit && !unit)) {
        err << "internal error: witness failed verification\n";
        return int(exit_input_error);
      }
      if (opts.format == Format::structured) {
        ordered_json j;
        j["f"]        = opts.f;
        j["unit"]     = opts.unit;
        j["g"]        = w.g.images();
        j["fgf_eq_f"] = regular;
        j["g_is_unit"] = unit;
        out << j.dump() << '\n';
      } else {
        out << "g: " << format_list(w.g.images()) << '\n';
        out << "fgf = f: yes\n";
        out << "g is a unit: " << (unit ? "yes" : "no") << '\n';
      }
      return int(exit_yes);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // survey
  ////////////////////////////////////////////////////////////////////////

  int cmd_survey(SweepOptions const& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      auto const P = parse_partition_spec(opts.partition);
      SurveyOptions so;
      so.cap     = opts.cap;
      so.threads = opts.threads;
      auto const r = survey(P, so);

      if (opts.format == Format::structured) {
        ordered_json j;
        j["blocks"]       = P.blocks();
        j["n"]            = r.degree;
        j["block_sizes"]  = r.block_sizes;
        j["size"]         = r.size;
        j["formula_size"] = r.formula_size;
        j["classes"]      = {{"L", r.l_classes},
                             {"R", r.r_classes},
                             {"H", r.h_classes},
                             {"D", r.d_classes},
                             {"J", r.j_classes}};
        j["distinct_size_profiles"]  = r.distinct_size_profiles;
        j["units"]                   = r.units;
        j["regular"]                 = r.regular;
        j["unit_regular"]            = r.unit_regular;
        j["semigroup_unit_regular"]  = r.semigroup_unit_regular;
        j["two_consecutive"]         = r.two_consecutive;
        j["pairs_checked"]           = r.pairs_checked;
        j["discrepancy_count"]       = r.discrepancy_count;
        j["discrepancies"]           = r.discrepancies;
        out << j.dump() << '\n';
      } else {
        out << "partition        " << r.blocks << '\n';
        out << "|B(X,P)|         " << r.size << " (formula " << r.formula_size
            << ")\n";
        out << "classes          L=" << r.l_classes << " R=" << r.r_classes
            << " H=" << r.h_classes << " D=" << r.d_classes
            << " J=" << r.j_classes << '\n';
        out << "size profiles    " << r.distinct_size_profiles << '\n';
        out << "units            " << r.units << '\n';
        out << "regular          " << r.regular << '\n';
        out << "unit-regular     " << r.unit_regular
            << (r.semigroup_unit_regular ? " (unit-regular semigroup)" : "")
            << '\n';
        out << "two consecutive  " << r.two_consecutive << '\n';
        out << "pairs checked    " << r.pairs_checked << '\n';
        out << "discrepancies    " << r.discrepancy_count << '\n';
        for (auto const& d : r.discrepancies) {
          out << "  " << d << '\n';
        }
      }
      return int(r.ok() ? exit_yes : exit_no);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // conjecture
  ////////////////////////////////////////////////////////////////////////

  int cmd_conjecture(SweepOptions const& opts,
                     std::ostream&       out,
                     std::ostream&       err) {
    return guarded(err, [&] {
      auto const P = parse_partition_spec(opts.partition);
      SurveyOptions so;
      so.cap     = opts.cap;
      so.threads = opts.threads;
      auto const r = conjecture_survey(P, so);

      if (opts.format == Format::structured) {
        ordered_json j;
        j["blocks"]          = P.blocks();
        j["size"]            = r.size;
        j["two_consecutive"] = r.two_consecutive;
        j["d_neq_j"]         = r.d_neq_j;
        auto& rows = j["elements"] = ordered_json::array();
        for (auto const& row : r.rows) {
          rows.push_back({{"f", row.f.images()},
                          {"profile", profile_json(row.profile)},
                          {"lambda1", row.triple.lambda1},
                          {"lambda2", row.triple.lambda2},
                          {"K", row.triple.exceptional_blocks},
                          {"two_consecutive", row.two_consecutive},
                          {"d_equals_j", row.d_equals_j}});
        }
        out << j.dump() << '\n';
      } else {
        out << "partition " << r.blocks << ", |B(X,P)| = " << r.size << '\n';
        for (auto const& row : r.rows) {
          out << format_list(row.f.images()) << "  profile "
              << profile_text(row.profile) << "  lambda=("
              << row.triple.lambda1 << "," << row.triple.lambda2 << ")  K="
              << format_list(row.triple.exceptional_blocks)
              << (row.two_consecutive ? "  two-consecutive" : "")
              << (row.d_equals_j ? "  D=J" : "  D!=J") << '\n';
        }
        out << "two-consecutive instances: " << r.two_consecutive << '\n';
        out << "elements with D_f != J_f: " << r.d_neq_j << '\n';
      }
      return int(r.d_neq_j == 0 ? exit_yes : exit_no);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // dump
  ////////////////////////////////////////////////////////////////////////

  int cmd_dump(DumpOptions const& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      auto const P = parse_partition_spec(opts.partition);
      SemigroupTable const T(P, opts.cap);
      if (opts.output.empty() || opts.output == "-") {
        write_table(out, T);
      } else {
        std::ofstream file(opts.output);
        if (!file) {
          throw ParseError("cannot write '" + opts.output + "'");
        }
        write_table(file, T);
      }
      return int(exit_yes);
    });
  }

}  // namespace bxp::cli
