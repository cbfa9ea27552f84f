#pragma once

#include <map>
#include <string>

#include "multfree/perm_group.hpp"

namespace multfree {

/// Named-group catalog loaded from a TSV file
/// (name<TAB>degree<TAB>order<TAB>gen;gen;...). Each record's stated degree
/// and order are asserted against the constructed group at load time.
class Catalog {
 public:
  /// Resolution order: explicit path argument, MULTFREE_CATALOG env var,
  /// then the bundled data directory.
  static const Catalog& instance(const std::string& path = "");

  explicit Catalog(const std::string& path);

  bool has(const std::string& name) const;
  const PermGroup& get(const std::string& name) const;
  int degree_of(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, PermGroup> groups_;
};

/// Bundled data directory (compile-time default).
std::string default_data_dir();

}  // namespace multfree
