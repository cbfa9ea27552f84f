#include "multfree/group_spec.hpp"

#include <cctype>

#include "multfree/catalog.hpp"
#include "multfree/constructors.hpp"

namespace multfree {

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw SpecParseError(what + " at offset " + std::to_string(pos) + " in '" +
                         std::string(text) + "'");
  }
  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    int v = 0;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return v;
  }

  GroupSpec spec() {
    skip_ws();
    if (eat_word("alt(")) {
      GroupSpec inner = spec();
      expect(')');
      return GroupSpec::alt_wrap(std::move(inner));
    }
    if (eat_word("point(")) {
      GroupSpec inner = spec();
      expect(')');
      return GroupSpec::point(std::move(inner));
    }
    if (eat_word("prod(")) {
      GroupSpec a = spec();
      expect(',');
      GroupSpec b = spec();
      expect(')');
      return GroupSpec::prod(std::move(a), std::move(b));
    }
    return atom();
  }

  GroupSpec atom() {
    skip_ws();
    if (eat_word("wr(")) {
      GroupSpec base = spec();
      expect(',');
      skip_ws();
      bool alt_top;
      if (eat_word("S"))
        alt_top = false;
      else if (eat_word("A"))
        alt_top = true;
      else
        fail("wreath top must be S<k> or A<k>");
      int k = integer();
      expect(')');
      return GroupSpec::wreath(std::move(base), k, alt_top);
    }
    if (eat_word("sdp2(")) return family_tail(GroupSpec::Kind::Sdp2);
    if (eat_word("sdpka(")) return family_tail(GroupSpec::Kind::Sdpka);
    if (eat_word("sdpk(")) return family_tail(GroupSpec::Kind::Sdpk);
    if (eat_word("sdp3(")) return family_tail(GroupSpec::Kind::Sdp3);
    if (eat_word("SD(")) return family_tail(GroupSpec::Kind::SD);
    if (eat_word("RD(")) return family_tail(GroupSpec::Kind::RD);
    if (eat_word("named:")) {
      skip_ws();
      std::string name;
      int depth = 0;
      while (pos < text.size()) {
        char c = text[pos];
        if (c == '(') ++depth;
        if (c == ')') {
          if (depth == 0) break;
          --depth;
        }
        if (depth == 0 && (c == ',' || c == ' ')) break;
        name += c;
        ++pos;
      }
      if (name.empty()) fail("empty group name");
      return GroupSpec::named(std::move(name));
    }
    if (eat_word("S")) return GroupSpec::sym(integer());
    if (eat_word("A")) return GroupSpec::alt(integer());
    fail("expected a group atom");
  }

  GroupSpec family_tail(GroupSpec::Kind kind) {
    int p = integer();
    expect(')');
    return GroupSpec::family(kind, p);
  }
};

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  Parser p{text};
  GroupSpec s = p.spec();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return s;
}

GroupSpec GroupSpec::sym(int n) {
  GroupSpec s;
  s.kind_ = Kind::Sym;
  s.params_ = {n};
  return s;
}
GroupSpec GroupSpec::alt(int n) {
  GroupSpec s;
  s.kind_ = Kind::Alt;
  s.params_ = {n};
  return s;
}
GroupSpec GroupSpec::wreath(GroupSpec base, int k, bool alt_top) {
  GroupSpec s;
  s.kind_ = alt_top ? Kind::WreathAlt : Kind::WreathSym;
  s.params_ = {k};
  s.children_.push_back(std::make_shared<GroupSpec>(std::move(base)));
  return s;
}
GroupSpec GroupSpec::prod(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind_ = Kind::Prod;
  s.children_.push_back(std::make_shared<GroupSpec>(std::move(a)));
  s.children_.push_back(std::make_shared<GroupSpec>(std::move(b)));
  return s;
}
GroupSpec GroupSpec::alt_wrap(GroupSpec g) {
  GroupSpec s;
  s.kind_ = Kind::AltWrap;
  s.children_.push_back(std::make_shared<GroupSpec>(std::move(g)));
  return s;
}
GroupSpec GroupSpec::point(GroupSpec g) {
  GroupSpec s;
  s.kind_ = Kind::Point;
  s.children_.push_back(std::make_shared<GroupSpec>(std::move(g)));
  return s;
}
GroupSpec GroupSpec::family(Kind kind, int param) {
  GroupSpec s;
  s.kind_ = kind;
  s.params_ = {param};
  return s;
}
GroupSpec GroupSpec::named(std::string name) {
  GroupSpec s;
  s.kind_ = Kind::Named;
  s.name_ = std::move(name);
  return s;
}

int GroupSpec::degree(const Catalog& catalog) const {
  switch (kind_) {
    case Kind::Sym:
    case Kind::Alt:
      return params_[0];
    case Kind::WreathSym:
    case Kind::WreathAlt:
      return child().degree(catalog) * params_[0];
    case Kind::Prod:
      return child(0).degree(catalog) + child(1).degree(catalog);
    case Kind::AltWrap:
      return child().degree(catalog);
    case Kind::Point:
      return child().degree(catalog) + 1;
    case Kind::Sdp2:
      return 2 * params_[0];
    case Kind::Sdpk:
    case Kind::Sdpka:
      return 2 * params_[0];
    case Kind::Sdp3:
      return 3 * params_[0];
    case Kind::SD:
    case Kind::RD:
      return 3 * params_[0];
    case Kind::Named:
      return catalog.degree_of(name_);
  }
  throw std::logic_error("unreachable");
}

PermGroup GroupSpec::build(const Catalog& catalog) const {
  switch (kind_) {
    case Kind::Sym:
      return symmetric_group(params_[0]);
    case Kind::Alt:
      return alternating_group(params_[0]);
    case Kind::WreathSym:
      return wreath_product(child().build(catalog), params_[0], TopGroup::Sym);
    case Kind::WreathAlt:
      return wreath_product(child().build(catalog), params_[0], TopGroup::Alt);
    case Kind::Prod:
      return direct_product(child(0).build(catalog), child(1).build(catalog));
    case Kind::AltWrap:
      return child().build(catalog).intersect_alternating();
    case Kind::Point:
      return point_extension(child().build(catalog));
    case Kind::Sdp2:
      return alt_semidirect(params_[0], 2);
    case Kind::Sdpk:
      return alt_semidirect(2, params_[0]);
    case Kind::Sdpka:
      return alt_semidirect_alt(params_[0]);
    case Kind::Sdp3:
      return alt_semidirect(params_[0], 3);
    case Kind::SD:
      return sd_group(params_[0]);
    case Kind::RD:
      return rd_group(params_[0]);
    case Kind::Named:
      return catalog.get(name_);
  }
  throw std::logic_error("unreachable");
}

std::string GroupSpec::str() const {
  switch (kind_) {
    case Kind::Sym:
      return "S" + std::to_string(params_[0]);
    case Kind::Alt:
      return "A" + std::to_string(params_[0]);
    case Kind::WreathSym:
      return "wr(" + child().str() + ",S" + std::to_string(params_[0]) + ")";
    case Kind::WreathAlt:
      return "wr(" + child().str() + ",A" + std::to_string(params_[0]) + ")";
    case Kind::Prod:
      return "prod(" + child(0).str() + "," + child(1).str() + ")";
    case Kind::AltWrap:
      return "alt(" + child().str() + ")";
    case Kind::Point:
      return "point(" + child().str() + ")";
    case Kind::Sdp2:
      return "sdp2(" + std::to_string(params_[0]) + ")";
    case Kind::Sdpk:
      return "sdpk(" + std::to_string(params_[0]) + ")";
    case Kind::Sdpka:
      return "sdpka(" + std::to_string(params_[0]) + ")";
    case Kind::Sdp3:
      return "sdp3(" + std::to_string(params_[0]) + ")";
    case Kind::SD:
      return "SD(" + std::to_string(params_[0]) + ")";
    case Kind::RD:
      return "RD(" + std::to_string(params_[0]) + ")";
    case Kind::Named:
      return "named:" + name_;
  }
  throw std::logic_error("unreachable");
}

}  // namespace multfree
