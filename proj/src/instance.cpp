#include "bxp/instance.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace bxp {

  using json = nlohmann::json;

  namespace {
    std::vector<std::vector<point_type>> parse_blocks(json const& j) {
      if (!j.is_array()) {
        throw ParseError("blocks must be a list of integer lists");
      }
      std::vector<std::vector<point_type>> blocks;
      for (auto const& b : j) {
        if (!b.is_array()) {
          throw ParseError("blocks must be a list of integer lists");
        }
        std::vector<point_type> block;
        for (auto const& x : b) {
          if (!x.is_number_unsigned()) {
            throw ParseError("block entries must be nonnegative integers");
          }
          block.push_back(x.get<point_type>());
        }
        blocks.push_back(std::move(block));
      }
      return blocks;
    }

    Partition make_partition(std::vector<std::vector<point_type>> blocks) {
      try {
        return Partition(std::move(blocks));
      } catch (InvalidPartition const& e) {
        throw ParseError(e.what());
      }
    }
  }  // namespace

  Transformation const& InstanceFile::at(std::string const& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) {
      throw ParseError("no transformation named '" + name + "'");
    }
    return it->second;
  }

  InstanceFile parse_instance(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("malformed instance: ") + e.what());
    }
    if (!doc.is_object()) {
      throw ParseError("an instance must be an object");
    }
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
      throw ParseError("missing or invalid field 'n'");
    }
    if (!doc.contains("blocks")) {
      throw ParseError("missing field 'blocks'");
    }
    auto const n         = doc["n"].get<std::size_t>();
    Partition  partition = make_partition(parse_blocks(doc["blocks"]));
    if (partition.degree() != n) {
      throw ParseError("n = " + std::to_string(n) + " but the blocks cover "
                       + std::to_string(partition.degree()) + " points");
    }

    InstanceFile result{std::move(partition), {}};
    for (auto const& [name, value] : doc.items()) {
      if (name == "n" || name == "blocks") {
        continue;
      }
      if (!value.is_array()) {
        throw ParseError("'" + name + "' must be an integer list");
      }
      std::vector<point_type> images;
      for (auto const& y : value) {
        if (!y.is_number_unsigned()) {
          throw ParseError("'" + name + "' must contain nonnegative integers");
        }
        images.push_back(y.get<point_type>());
      }
      if (images.size() != n) {
        throw ParseError("'" + name + "' has length "
                         + std::to_string(images.size()) + ", expected "
                         + std::to_string(n));
      }
      try {
        result.maps.emplace(name, Transformation(std::move(images)));
      } catch (InvalidTransformation const& e) {
        throw ParseError("'" + name + "': " + e.what());
      }
    }
    return result;
  }

  InstanceFile read_instance(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_instance(text);
  }

  InstanceFile load_instance(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open '" + path + "'");
    }
    return read_instance(in);
  }

  std::string format_list(std::vector<std::size_t> const& values) {
    std::string out = "[";
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k > 0) {
        out += ", ";
      }
      out += std::to_string(values[k]);
    }
    return out + "]";
  }

  std::string format_partition(Partition const& P) {
    std::string out = "[";
    for (std::size_t i = 0; i < P.number_of_blocks(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += format_list(P.block(i));
    }
    return out + "]";
  }

  std::string print_instance(InstanceFile const& inst) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"n\": " << inst.partition.degree() << ",\n";
    out << "  \"blocks\": " << format_partition(inst.partition);
    for (auto const& [name, f] : inst.maps) {
      out << ",\n  " << json(name).dump() << ": " << format_list(f.images());
    }
    out << "\n}\n";
    return out.str();
  }

  Partition parse_partition_spec(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError("malformed partition '" + std::string(text)
                       + "': expected e.g. [[0,1],[2,3]]");
    }
    return make_partition(parse_blocks(doc));
  }

}  // namespace bxp
