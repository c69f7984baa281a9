#include "disclosure/io.hpp"

#include <json.hpp>

#include "disclosure/errors.hpp"

namespace disclosure {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational rational_from(const ordered_json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  throw ValidationError(where + ": rationals must be integers or quoted strings");
}

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

DiscreteInstance parse_instance(std::string_view text) {
  const auto doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("goods") || !doc.contains("buyers")) {
    throw ValidationError("instance document needs 'goods' and 'buyers'");
  }
  const auto& goods = doc["goods"];
  if (!goods.is_number_unsigned() || goods.get<std::size_t>() == 0) {
    throw ValidationError("'goods' must be a positive integer");
  }
  if (!doc["buyers"].is_array()) throw ValidationError("'buyers' must be an array");

  std::vector<std::vector<BuyerType>> buyers;
  for (std::size_t j = 0; j < doc["buyers"].size(); ++j) {
    const auto& list = doc["buyers"][j];
    if (!list.is_array()) throw ValidationError("each buyer must be an array of types");
    std::vector<BuyerType> types;
    for (std::size_t t = 0; t < list.size(); ++t) {
      const auto& ty = list[t];
      const std::string where = "buyer " + std::to_string(j + 1) + " type " + std::to_string(t + 1);
      if (!ty.is_object() || !ty.contains("prob") || !ty.contains("values") ||
          !ty["values"].is_array()) {
        throw ValidationError(where + ": expected {\"prob\": ..., \"values\": [...]}");
      }
      BuyerType out{rational_from(ty["prob"], where), {}};
      for (const auto& v : ty["values"]) out.values.push_back(rational_from(v, where));
      types.push_back(std::move(out));
    }
    buyers.push_back(std::move(types));
  }
  return DiscreteInstance(goods.get<std::size_t>(), std::move(buyers));
}

std::string serialize_instance(const DiscreteInstance& inst) {
  ordered_json doc;
  doc["goods"] = inst.goods_count();
  doc["buyers"] = ordered_json::array();
  for (const auto& types : inst.buyers()) {
    ordered_json list = ordered_json::array();
    for (const auto& ty : types) {
      ordered_json t;
      t["prob"] = ty.prob.str();
      t["values"] = ordered_json::array();
      for (const auto& v : ty.values) t["values"].push_back(v.str());
      list.push_back(std::move(t));
    }
    doc["buyers"].push_back(std::move(list));
  }
  return doc.dump(2) + "\n";
}

PartitionProfile parse_profile(std::string_view text, const DiscreteInstance& inst) {
  const auto doc = parse_json(text);
  if (!doc.is_array() || doc.size() != inst.buyer_count()) {
    throw ValidationError("partition document needs one entry per buyer");
  }
  PartitionProfile profile;
  for (std::size_t j = 0; j < doc.size(); ++j) {
    if (!doc[j].is_array()) throw ValidationError("each buyer entry must be a list of blocks");
    SetPartition p;
    for (const auto& block : doc[j]) {
      if (!block.is_array()) throw ValidationError("each block must be a list of type indices");
      Block b;
      for (const auto& idx : block) {
        if (!idx.is_number_unsigned() || idx.get<std::size_t>() == 0) {
          throw ValidationError("type indices are positive integers");
        }
        b.push_back(idx.get<std::size_t>() - 1);
      }
      if (b.empty()) throw ValidationError("empty block");
      p.push_back(std::move(b));
    }
    p = canonicalize(std::move(p));
    if (!is_partition_of(p, inst.type_count(j))) {
      throw ValidationError("entry " + std::to_string(j + 1) +
                            " is not a partition of that buyer's types");
    }
    profile.push_back(std::move(p));
  }
  return profile;
}

std::string serialize_profile(const PartitionProfile& profile) {
  ordered_json doc = ordered_json::array();
  for (const auto& p : profile) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : p) {
      ordered_json idx = ordered_json::array();
      for (auto i : b) idx.push_back(i + 1);
      blocks.push_back(std::move(idx));
    }
    doc.push_back(std::move(blocks));
  }
  return doc.dump() + "\n";
}

std::string partition_label(const SetPartition& p) {
  std::string out;
  for (const auto& b : p) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i] + 1);
    }
    out += '}';
  }
  return out;
}

std::string profile_label(const PartitionProfile& profile) {
  std::string out;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j) out += " | ";
    out += partition_label(profile[j]);
  }
  return out;
}

}  // namespace disclosure
