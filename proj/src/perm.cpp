#include "psilab/perm.hpp"

#include <algorithm>
#include <numeric>

namespace psilab {

Perm::Perm(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x]) throw Error("Perm: image sequence is not a bijection");
    seen[x] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw Error("Perm: degree mismatch in product");
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm Perm::power(i64 n) const {
  int d = degree();
  i64 o = static_cast<i64>(order());
  n %= o;
  if (n < 0) n += o;
  // walk each cycle once
  Perm r(d);
  std::vector<bool> done(d, false);
  std::vector<int> cyc;
  for (int s = 0; s < d; ++s) {
    if (done[s]) continue;
    cyc.clear();
    int x = s;
    do {
      cyc.push_back(x);
      done[x] = true;
      x = img_[x];
    } while (x != s);
    int len = static_cast<int>(cyc.size());
    int shift = static_cast<int>(n % len);
    for (int i = 0; i < len; ++i) r.img_[cyc[i]] = static_cast<std::uint16_t>(cyc[(i + shift) % len]);
  }
  return r;
}

Perm Perm::conjugate_by(const Perm& g) const {
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

u64 Perm::order() const {
  int d = degree();
  std::vector<bool> done(d, false);
  u64 o = 1;
  for (int s = 0; s < d; ++s) {
    if (done[s]) continue;
    u64 len = 0;
    int x = s;
    do {
      done[x] = true;
      x = img_[x];
      ++len;
    } while (x != s);
    o = lcm_u64(o, len);
  }
  return o;
}

bool Perm::commutes_with(const Perm& rhs) const {
  for (int i = 0; i < degree(); ++i)
    if (rhs.img_[img_[i]] != img_[rhs.img_[i]]) return false;
  return true;
}

std::string Perm::key() const {
  return std::string(reinterpret_cast<const char*>(img_.data()), img_.size() * sizeof(std::uint16_t));
}

std::string Perm::to_cycles() const {
  std::string s;
  std::vector<bool> done(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || img_[i] == i) {
      done[i] = true;
      continue;
    }
    s += '(';
    int x = i;
    bool first = true;
    do {
      if (!first) s += ',';
      s += std::to_string(x + 1);
      done[x] = true;
      x = img_[x];
      first = false;
    } while (x != i);
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  Perm r(degree);
  std::vector<int> cyc;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error("Perm: expected '(' in cycle text: " + text);
    ++i;
    cyc.clear();
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw Error("Perm: expected point in cycle text: " + text);
      int pt = std::stoi(text.substr(i, j - i)) - 1;  // text is 1-based
      if (pt < 0 || pt >= degree) throw Error("Perm: point out of range in: " + text);
      cyc.push_back(pt);
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      int from = cyc[t], to = cyc[(t + 1) % cyc.size()];
      if (r.img_[from] != from) throw Error("Perm: repeated point in cycle text: " + text);
      r.img_[from] = static_cast<std::uint16_t>(to);
    }
    skip_ws();
  }
  // re-validate bijectivity after the patching above
  return Perm(r.img_);
}

}  // namespace psilab
