#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "aquiver/ar.hpp"
#include "aquiver/homological.hpp"
#include "aquiver/tables.hpp"

namespace aquiver {

using Json = nlohmann::ordered_json;

/// Orientation plus exactly one of a barcode or a tame representation.
struct Document {
  Orientation orientation;
  Field field = Field::rationals();
  std::optional<BarMultiset> bars;
  std::optional<TameRep> tame;
};

/// Parses JSON text; syntax errors report "line L, column C".
Json parse_json(std::string_view text);

/// Readers throw InputError naming the JSON pointer of the offending value.
Orientation orientation_from_json(const Json& j, const std::string& path = "");
Field field_from_json(const Json& j, const std::string& path = "");
Interval interval_from_json(const Json& j, const std::string& path = "");
BarMultiset bars_from_json(const Json& j, const std::string& path = "");
TameRep tame_from_json(const Json& j, const Orientation& o, Field field, const std::string& path = "");
Document document_from_json(const Json& j);

/// Accepts a bare orientation object or any object with an "orientation" key.
Orientation orientation_from_any(const Json& j);

Json to_json(const Orientation& o);
Json to_json(const Field& f);
Json to_json(const Interval& i, std::size_t mult = 1);
Json to_json(const BarMultiset& b);
Json to_json(const Matrix& m);
Json to_json(const TameRep& v);
Json to_json(const Document& d);
Json to_json(const ProjPresentation& p, const Orientation& o);
Json to_json(const ARAnswer& a);
Json to_json(const SymbolicTable& t);
Json to_json(const Morphism& f);

/// Parses "Q", "Fp:5" or "F5".
Field parse_field(std::string_view text);

}  // namespace aquiver
