#include "rbg/io.hpp"

#include <fstream>

#include "rbg/catalog.hpp"

namespace rbg {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path + "': " + e.what());
  }
}

json group_to_json(const FiniteGroup& g) {
  const int n = g.order();
  json table = json::array();
  for (Elem a = 0; a < n; ++a) {
    table.push_back(std::vector<Elem>(g.row(a), g.row(a) + n));
  }
  json j{{"order", n}, {"identity", 0}, {"table", std::move(table)}};
  if (g.has_labels()) {
    json labels = json::array();
    for (Elem a = 0; a < n; ++a) labels.push_back(g.label(a));
    j["labels"] = std::move(labels);
  }
  return j;
}

FiniteGroup group_from_json(const json& j) {
  try {
    const std::size_t n = j.at("order").get<std::size_t>();
    if (j.contains("identity") && j.at("identity").get<int>() != 0) {
      throw InvalidInput("Cayley table must use index 0 as the identity");
    }
    const auto& rows = j.at("table");
    if (rows.size() != n) throw InvalidInput("Cayley table has wrong number of rows");
    Table t;
    t.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw InvalidInput("Cayley table row has wrong length");
      for (const auto& v : row) t.push_back(v.get<Elem>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(t), n, std::move(labels));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("Cayley table JSON: ") + e.what());
  }
}

FiniteGroup load_group(const std::string& path) { return group_from_json(read_json_file(path)); }

json operator_to_json(const json& group_ref, const Table& images) {
  return json{{"group", group_ref}, {"images", images}};
}

Table images_from_json(const json& images, const FiniteGroup& g) {
  if (!images.is_array() || static_cast<int>(images.size()) != g.order()) {
    throw InvalidInput("operator images must be an array of length " + std::to_string(g.order()));
  }
  Table out;
  for (const auto& v : images) {
    if (v.is_number_integer()) {
      Elem x = v.get<Elem>();
      if (x < 0 || x >= g.order()) throw InvalidInput("operator image out of range");
      out.push_back(x);
    } else if (v.is_string()) {
      auto x = g.find_label(v.get<std::string>());
      if (!x) throw InvalidInput("unknown element label '" + v.get<std::string>() + "'");
      out.push_back(*x);
    } else {
      throw InvalidInput("operator image must be an index or a label");
    }
  }
  return out;
}

RotaBaxterOperator operator_from_json(const json& j, const Limits& limits) {
  if (!j.contains("group") || !j.contains("images")) {
    throw InvalidInput("operator JSON needs \"group\" and \"images\"");
  }
  const auto& gref = j.at("group");
  FiniteGroup g = gref.is_string() ? make_group(gref.get<std::string>(), limits) : group_from_json(gref);
  return make_rb_operator(g, images_from_json(j.at("images"), g));
}

json cochain_to_json(const Cochain& c) {
  json values = json::object();
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c.values()[s] == 0) continue;
    std::string key = "(";
    auto t = c.tuple(s);
    for (std::size_t k = 0; k < t.size(); ++k) key += (k ? "," : "") + std::to_string(t[k]);
    key += ")";
    values[key] = c.values()[s];
  }
  return json{{"arity", c.arity()}, {"values", std::move(values)}};
}

Cochain cochain_from_json(const json& j, int h_order) {
  try {
    Cochain c(j.at("arity").get<int>(), h_order);
    for (const auto& [key, v] : j.at("values").items()) {
      if (key.size() < 2 || key.front() != '(' || key.back() != ')') {
        throw InvalidInput("bad cochain key '" + key + "'");
      }
      std::vector<Elem> t;
      std::size_t i = 1;
      while (i < key.size() - 1) {
        std::size_t next = key.find_first_of(",)", i);
        t.push_back(static_cast<Elem>(std::stoi(key.substr(i, next - i))));
        i = next + 1;
      }
      c.set(t, v.get<Elem>());
    }
    return c;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("cochain JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InvalidInput(std::string("cochain JSON: ") + e.what());
  }
}

}  // namespace rbg
