#pragma once

#include <string>

#include <json.hpp>

#include "rbg/cochain.hpp"
#include "rbg/group.hpp"
#include "rbg/rota_baxter.hpp"

namespace rbg {

using json = nlohmann::ordered_json;

json read_json_file(const std::string& path);

// {"order": n, "identity": 0, "table": [[...]], "labels": [...]}
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);
FiniteGroup load_group(const std::string& path);

// {"group": <descriptor or inline table>, "images": [...]}; images may be
// element indices or labels of the group.
json operator_to_json(const json& group_ref, const Table& images);
RotaBaxterOperator operator_from_json(const json& j, const Limits& limits = {});
// images only, resolved against a known group (no RB check)
Table images_from_json(const json& images, const FiniteGroup& g);

// {"arity": n, "values": {"(h1,...,hn)": i, ...}} with nonzero entries only.
json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j, int h_order);

}  // namespace rbg
