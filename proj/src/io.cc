#include "mcfl/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mcfl/errors.hpp"

namespace mcfl {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int64_t>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

Cost cost_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Cost::infinity();
  if (j.is_number_integer()) return Cost(j.get<int64_t>());
  throw InputError("cost entries must be integers or \"inf\"");
}

json cost_to_json(const Cost& c) { return c.is_infinite() ? json("inf") : json(c.value()); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  throw InputError("rationals must be strings \"p/q\" or integers");
}

std::vector<int> index_list(const json& j, const char* what) {
  std::vector<int> out;
  for (const json& v : as_array(j, what)) out.push_back(static_cast<int>(as_int(v, what)) - 1);
  return out;
}

std::vector<int64_t> int_list(const json& j, const char* what) {
  std::vector<int64_t> out;
  for (const json& v : as_array(j, what)) out.push_back(as_int(v, what));
  return out;
}

}  // namespace

Instance instance_from_json(const json& j) {
  Instance inst;
  for (const json& f : as_array(field(j, "facilities"), "facilities")) {
    inst.facilities.push_back({as_int(field(f, "open_cost"), "open_cost"), as_int(field(f, "capacity"), "capacity")});
  }
  for (const json& c : as_array(field(j, "clients"), "clients")) {
    Client client;
    client.demand = as_int(field(c, "demand"), "demand");
    if (c.contains("release") && !c.at("release").is_null()) {
      client.release = static_cast<int>(as_int(c.at("release"), "release")) - 1;
    }
    if (c.contains("deadline") && !c.at("deadline").is_null()) {
      client.deadline = static_cast<int>(as_int(c.at("deadline"), "deadline")) - 1;
    }
    inst.clients.push_back(client);
  }
  std::vector<std::vector<Cost>> rows;
  for (const json& row : as_array(field(j, "costs"), "costs")) {
    std::vector<Cost>& r = rows.emplace_back();
    for (const json& v : as_array(row, "cost row")) r.push_back(cost_from_json(v));
  }
  inst.costs = CostMatrix::from_rows(rows);
  return inst;
}

json instance_to_json(const Instance& inst) {
  json facilities = json::array();
  for (const Facility& f : inst.facilities) facilities.push_back({{"open_cost", f.open_cost}, {"capacity", f.capacity}});
  json clients = json::array();
  for (const Client& c : inst.clients) {
    json entry = {{"demand", c.demand}};
    if (c.release) entry["release"] = *c.release + 1;
    if (c.deadline) entry["deadline"] = *c.deadline + 1;
    clients.push_back(std::move(entry));
  }
  json costs = json::array();
  for (int i = 0; i < inst.costs.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < inst.costs.cols(); ++k) row.push_back(cost_to_json(inst.costs(i, k)));
    costs.push_back(std::move(row));
  }
  return {{"facilities", facilities}, {"clients", clients}, {"costs", costs}};
}

LotSizingInstance lot_sizing_from_json(const json& j) {
  LotSizingInstance ls;
  ls.horizon = static_cast<int>(as_int(field(j, "horizon"), "horizon"));
  for (const json& o : as_array(field(j, "orders"), "orders")) {
    ls.orders.push_back({as_int(field(o, "cost"), "cost"), as_int(field(o, "capacity"), "capacity")});
  }
  for (const json& d : as_array(field(j, "demands"), "demands")) {
    LotSizingDemand entry;
    entry.period = static_cast<int>(as_int(field(d, "period"), "period")) - 1;
    if (d.contains("item")) entry.item = static_cast<int>(as_int(d.at("item"), "item"));
    entry.amount = as_int(field(d, "amount"), "amount");
    ls.demands.push_back(entry);
  }
  const json& holding = field(j, "holding");
  if (holding.is_object()) {
    for (const auto& [key, vec] : holding.items()) {
      int item = 0;
      try {
        item = std::stoi(key);
      } catch (const std::exception&) {
        throw InputError("per-item holding keys must be item numbers");
      }
      ls.item_holding[item] = int_list(vec, "holding");
    }
  } else {
    ls.holding = int_list(holding, "holding");
  }
  return ls;
}

json lot_sizing_to_json(const LotSizingInstance& ls) {
  json orders = json::array();
  for (const auto& o : ls.orders) orders.push_back({{"cost", o.cost}, {"capacity", o.capacity}});
  json demands = json::array();
  for (const auto& d : ls.demands) demands.push_back({{"period", d.period + 1}, {"item", d.item}, {"amount", d.amount}});
  json holding;
  if (ls.item_holding.empty()) {
    holding = ls.holding;
  } else {
    holding = json::object();
    for (const auto& [item, h] : ls.item_holding) holding[std::to_string(item)] = h;
  }
  return {{"horizon", ls.horizon}, {"orders", orders}, {"demands", demands}, {"holding", holding}};
}

Solution solution_from_json(const json& j) {
  Solution sol;
  sol.open = index_list(field(j, "open"), "open");
  for (const json& a : as_array(field(j, "assignment"), "assignment")) {
    const int i = static_cast<int>(as_int(field(a, "facility"), "facility")) - 1;
    const int k = static_cast<int>(as_int(field(a, "client"), "client")) - 1;
    sol.assignment[{i, k}] = rational_from_json(field(a, "fraction"));
  }
  const json& cost = field(j, "cost");
  if (cost.is_string() && cost.get<std::string>() == "inf") {
    sol.total_cost = RationalCost::infinity();
  } else {
    sol.total_cost = RationalCost(rational_from_json(cost));
  }
  return sol;
}

json solution_to_json(const Solution& sol) {
  json open = json::array();
  for (int i : sol.open) open.push_back(i + 1);
  json assignment = json::array();
  for (const auto& [key, fraction] : sol.assignment) {
    assignment.push_back({{"facility", key.first + 1}, {"client", key.second + 1}, {"fraction", to_string(fraction)}});
  }
  return {{"open", open}, {"assignment", assignment}, {"cost", sol.total_cost.str()}};
}

ClientPartition partition_from_json(const json& j) {
  return {index_list(field(j, "s1"), "s1"), index_list(field(j, "s2"), "s2")};
}

json partition_to_json(const ClientPartition& p) {
  json s1 = json::array();
  json s2 = json::array();
  for (int k : p.first) s1.push_back(k + 1);
  for (int k : p.second) s2.push_back(k + 1);
  return {{"s1", s1}, {"s2", s2}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Instance read_instance(const std::filesystem::path& path) {
  try {
    return instance_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_instance(const std::filesystem::path& path, const Instance& inst) { write_json(path, instance_to_json(inst)); }

std::string instance_digest(const Instance& inst) {
  const std::string text = instance_to_json(inst).dump();
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace mcfl
