#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "tambara/functors.hpp"
#include "tambara/lindner.hpp"
#include "tambara/polynomial.hpp"
#include "tambara/slice.hpp"
#include "tambara/transfer.hpp"

namespace tambara::io {

using Json = nlohmann::ordered_json;

// Reads the file formats. A reference is either an inline object or a path,
// resolved against the directory of the file that mentions it. Group
// references may also name a built-in group.
class Loader {
 public:
  explicit Loader(std::filesystem::path base = {}) : base_(std::move(base)) {}

  FiniteGroup group(const Json& ref);
  GSet gset(const Json& ref);
  EquivariantMap map(const Json& ref);
  SliceObject slice_object(const Json& ref);
  SpanClass span(const Json& ref);
  BispanClass bispan(const Json& ref);
  TransferRelation relation(const Json& ref);
  MackeyValue mackey_value(const Json& ref);
  TambaraValue tambara_value(const Json& ref);

  // Parses a file; malformed JSON raises MalformedSpec.
  Json read(const std::filesystem::path& p) const;

 private:
  // Inline object, or the parsed file together with its directory.
  std::pair<Json, std::filesystem::path> resolve(const Json& ref) const;

  std::filesystem::path base_;
  std::map<std::string, FiniteGroup> builtins_;
};

Json to_json(const FiniteGroup& g);
Json to_json(const GSet& x);
Json to_json(const EquivariantMap& f);
Json to_json(const SliceObject& a);
Json to_json(const SpanClass& s);
Json to_json(const BispanClass& b);
Json to_json(const TransferRelation& o);
Json to_json(const MackeyValue& v);
Json to_json(const TambaraValue& v);

}  // namespace tambara::io
