#include "multfree/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace multfree {

std::string default_data_dir() {
#ifdef MULTFREE_DATA_DIR
  return MULTFREE_DATA_DIR;
#else
  return "data";
#endif
}

Catalog::Catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string name, deg_s, order_s, gens_s;
    if (!std::getline(ss, name, '\t') || !std::getline(ss, deg_s, '\t') ||
        !std::getline(ss, order_s, '\t') || !std::getline(ss, gens_s))
      throw std::runtime_error("malformed catalog line: " + line);
    int degree = std::stoi(deg_s);
    BigInt order(order_s);
    std::vector<Perm> gens;
    std::istringstream gs(gens_s);
    std::string one;
    while (std::getline(gs, one, ';'))
      gens.push_back(Perm::parse_cycles(one, degree));
    PermGroup g = PermGroup::generate(std::move(gens), degree);
    if (g.order() != order)
      throw std::runtime_error("catalog entry " + name + " has order " +
                               g.order().str() + ", expected " + order_s);
    groups_.emplace(name, std::move(g));
  }
}

const Catalog& Catalog::instance(const std::string& path) {
  static std::mutex m;
  static std::unique_ptr<Catalog> single;
  std::lock_guard<std::mutex> lock(m);
  if (!single) {
    std::string p = path;
    if (p.empty()) {
      if (const char* env = std::getenv("MULTFREE_CATALOG")) p = env;
    }
    if (p.empty()) p = default_data_dir() + "/catalog.tsv";
    single = std::make_unique<Catalog>(p);
  }
  return *single;
}

bool Catalog::has(const std::string& name) const {
  return groups_.count(name) > 0;
}

const PermGroup& Catalog::get(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end())
    throw std::invalid_argument("unknown named group: " + name);
  return it->second;
}

int Catalog::degree_of(const std::string& name) const {
  return get(name).degree();
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : groups_) out.push_back(k);
  return out;
}

}  // namespace multfree
