#include "rwgraph/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace rwgraph {

Partition Partition::from_multiplicities(std::vector<std::uint32_t> mult) {
  while (!mult.empty() && mult.back() == 0) mult.pop_back();
  Partition p;
  p.mult_ = std::move(mult);
  return p;
}

Partition Partition::from_parts(const std::vector<std::uint32_t>& parts) {
  std::vector<std::uint32_t> mult;
  for (std::uint32_t i : parts) {
    if (i == 0) throw std::invalid_argument("Partition: zero part");
    if (i > mult.size()) mult.resize(i, 0);
    ++mult[i - 1];
  }
  return from_multiplicities(std::move(mult));
}

Partition Partition::parse(const std::string& text) {
  std::vector<std::uint32_t> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find_first_of(",+", pos);
    if (end == std::string::npos) end = text.size();
    std::string tok = text.substr(pos, end - pos);
    if (tok.empty()) throw std::invalid_argument("Partition: empty component in '" + text + "'");
    unsigned long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("Partition: bad component '" + tok + "'");
    }
    if (v == 0 || v % 2 != 0)
      throw std::invalid_argument("Partition: index must be even positive, got '" + tok + "'");
    parts.push_back(static_cast<std::uint32_t>(v / 2));
    pos = end + (end < text.size() ? 1 : 0);
  }
  return from_parts(parts);
}

std::string Partition::str(char sep) const {
  std::string out;
  auto ps = parts();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(2 * ps[i]);
  }
  return out;
}

std::uint64_t Partition::weight() const {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) w += (i + 1) * std::uint64_t(mult_[i]);
  return w;
}

std::uint64_t Partition::length() const {
  std::uint64_t l = 0;
  for (std::uint32_t m : mult_) l += m;
  return l;
}

Rational Partition::factorial() const {
  Rational f(1);
  for (std::uint32_t m : mult_) f *= Rational::factorial(m);
  return f;
}

std::uint32_t Partition::multiplicity(std::uint32_t i) const {
  if (i == 0 || i > mult_.size()) return 0;
  return mult_[i - 1];
}

std::vector<std::uint32_t> Partition::parts() const {
  std::vector<std::uint32_t> ps;
  for (std::size_t i = mult_.size(); i > 0; --i)
    for (std::uint32_t r = 0; r < mult_[i - 1]; ++r) ps.push_back(static_cast<std::uint32_t>(i));
  return ps;
}

bool operator<(const Partition& a, const Partition& b) {
  auto wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.parts() < b.parts();
}

namespace {
void gen_partitions(unsigned n, unsigned max_part, std::vector<std::uint32_t>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition::from_parts(acc));
    return;
  }
  for (unsigned p = 1; p <= std::min(n, max_part); ++p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(unsigned max_weight) {
  std::vector<Partition> out;
  for (unsigned n = 1; n <= max_weight; ++n) {
    auto pn = enumerate_partitions(n);
    out.insert(out.end(), pn.begin(), pn.end());
  }
  return out;
}

}  // namespace rwgraph
