#include "multfree/multiplicity_vector.hpp"

#include <stdexcept>

namespace multfree {

void MultiplicityVector::add(const Partition& p, long long c) {
  if (c == 0) return;
  if (p.n() != n_)
    throw std::invalid_argument("partition of wrong weight for this vector");
  auto [it, inserted] = entries_.try_emplace(p, 0);
  it->second += c;
  if (it->second == 0) entries_.erase(it);
}

void MultiplicityVector::set(const Partition& p, long long c) {
  if (p.n() != n_)
    throw std::invalid_argument("partition of wrong weight for this vector");
  if (c == 0)
    entries_.erase(p);
  else
    entries_[p] = c;
}

MultiplicityVector& MultiplicityVector::operator+=(
    const MultiplicityVector& o) {
  if (entries_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [p, c] : o.entries_) add(p, c);
  return *this;
}

MultiplicityVector MultiplicityVector::scaled(long long c) const {
  MultiplicityVector out(n_);
  if (c != 0)
    for (const auto& [p, m] : entries_) out.set(p, m * c);
  return out;
}

MultiplicityVector MultiplicityVector::conjugate_symmetrized() const {
  MultiplicityVector out(n_);
  for (const auto& [p, c] : entries_) {
    out.add(p, c);
    out.add(p.conjugate(), c);
  }
  return out;
}

MultiplicityVector MultiplicityVector::conjugated() const {
  MultiplicityVector out(n_);
  for (const auto& [p, c] : entries_) out.add(p.conjugate(), c);
  return out;
}

bool MultiplicityVector::multiplicity_free() const {
  for (const auto& [p, c] : entries_)
    if (c > 1 || c < 0) return false;
  return true;
}

long long MultiplicityVector::rank() const {
  long long r = 0;
  for (const auto& [p, c] : entries_) r += c * c;
  return r;
}

std::string MultiplicityVector::str() const {
  std::string s;
  for (const auto& [p, c] : entries_) {
    s += p.str();
    s += ": ";
    s += std::to_string(c);
    s += '\n';
  }
  return s;
}

std::string MultiplicityVector::compact() const {
  std::string s;
  for (const auto& [p, c] : entries_) {
    if (!s.empty()) s += ';';
    s += p.str();
    s += ':';
    s += std::to_string(c);
  }
  return s;
}

MultiplicityVector MultiplicityVector::parse_compact(int n,
                                                     std::string_view text) {
  MultiplicityVector out(n);
  size_t pos = 0;
  while (pos < text.size()) {
    size_t semi = text.find(';', pos);
    std::string_view item = text.substr(
        pos, semi == std::string_view::npos ? std::string_view::npos
                                            : semi - pos);
    size_t colon = item.rfind(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("bad multiplicity item");
    Partition p = Partition::parse(item.substr(0, colon));
    long long c = std::stoll(std::string(item.substr(colon + 1)));
    out.add(p, c);
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return out;
}

}  // namespace multfree
