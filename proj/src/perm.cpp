#include "multfree/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace multfree {

Perm Perm::identity(int n) {
  std::vector<uint8_t> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
  if (img_.size() > 255) throw std::invalid_argument("degree too large");
  std::vector<bool> seen(img_.size(), false);
  for (uint8_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::parse_cycles(std::string_view text, int degree) {
  Perm p = identity(degree);
  size_t i = 0, m = text.size();
  auto skip_ws = [&] { while (i < m && text[i] == ' ') ++i; };
  skip_ws();
  while (i < m) {
    if (text[i] != '(')
      throw std::invalid_argument("bad cycle string: " + std::string(text));
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < m && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad cycle string: " + std::string(text));
      int v = 0;
      while (i < m && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle point out of range");
      cyc.push_back(v - 1);
      skip_ws();
      if (i < m && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= m) throw std::invalid_argument("unbalanced cycle string");
    ++i;  // ')'
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
      if (p.img_[static_cast<size_t>(from)] != from && cyc.size() > 1)
        throw std::invalid_argument("point repeated across cycles");
      p.img_[static_cast<size_t>(from)] = static_cast<uint8_t>(to);
    }
    skip_ws();
  }
  std::vector<bool> seen(p.img_.size(), false);
  for (uint8_t v : p.img_) {
    if (seen[v]) throw std::invalid_argument("cycles do not form a bijection");
    seen[v] = true;
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<uint8_t> inv(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<uint8_t>(i);
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<uint8_t> img(a.img_.size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = a.img_[b.img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

int Perm::sign() const {
  std::vector<bool> seen(img_.size(), false);
  int transpositions = 0;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Partition Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return Partition(std::move(lens));
}

Perm Perm::extended(int degree) const {
  if (degree < this->degree()) throw std::invalid_argument("cannot shrink");
  std::vector<uint8_t> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i)
    img[static_cast<size_t>(i)] =
        i < this->degree() ? img_[static_cast<size_t>(i)] : static_cast<uint8_t>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::shifted(int offset, int degree) const {
  if (offset + this->degree() > degree)
    throw std::invalid_argument("shift out of range");
  Perm p = identity(degree);
  for (int i = 0; i < this->degree(); ++i)
    p.img_[static_cast<size_t>(i + offset)] =
        static_cast<uint8_t>(img_[static_cast<size_t>(i)] + offset);
  return p;
}

std::string Perm::str() const {
  std::vector<bool> seen(img_.size(), false);
  std::string s;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    s += '(';
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) s += ',';
      s += std::to_string(j + 1);
      seen[j] = true;
      first = false;
      j = img_[j];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace multfree
