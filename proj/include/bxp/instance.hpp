// Instance files: a partition plus named transformations, as a JSON object
//
//   {
//     "n": 4,
//     "blocks": [[0, 1], [2, 3]],
//     "f": [0, 0, 2, 2],
//     "g": [1, 1, 3, 3]
//   }
//
// Every key other than "n" and "blocks" names a transformation. See
// docs/formats.md for the full grammar.

#ifndef BXP_INSTANCE_HPP_
#define BXP_INSTANCE_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "bxp/core.hpp"

namespace bxp {

  struct InstanceFile {
    Partition                             partition;
    std::map<std::string, Transformation> maps;

    //! Throws ParseError naming the missing transformation.
    Transformation const& at(std::string const& name) const;

    bool operator==(InstanceFile const&) const = default;
  };

  //! Throws ParseError on malformed input, unknown structure, or a
  //! transformation whose length differs from n.
  InstanceFile parse_instance(std::string_view text);
  InstanceFile read_instance(std::istream& in);
  InstanceFile load_instance(std::string const& path);

  //! Canonical form: "n", "blocks", then transformations by name, one key
  //! per line. parse_instance(print_instance(x)) == x.
  std::string print_instance(InstanceFile const& inst);

  //! A partition written as bracketed integer lists, e.g. "[[0,1],[2,3]]".
  //! The union of the blocks must be {0, ..., n - 1}. Throws ParseError.
  Partition parse_partition_spec(std::string_view text);

  std::string format_partition(Partition const& P);
  std::string format_list(std::vector<std::size_t> const& values);

}  // namespace bxp

#endif  // BXP_INSTANCE_HPP_
