#include "jtk/ktype/partition.hpp"

#include <charconv>

#include "jtk/error.hpp"

namespace jtk {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
  std::vector<unsigned> parts;
  if (s.empty()) return Partition();
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("bad partition '" + std::string(text) + "'", pos);
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

unsigned Partition::size() const noexcept {
  unsigned s = 0;
  for (auto p : parts_) s += p;
  return s;
}

bool Partition::contains(const Partition& mu) const noexcept {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i)
    if (parts_[i] < mu.parts_[i]) return false;
  return true;
}

Partition Partition::drop_first(std::size_t l) const {
  if (l >= parts_.size()) return Partition();
  return Partition(std::vector<unsigned>(parts_.begin() + static_cast<std::ptrdiff_t>(l), parts_.end()));
}

std::optional<Partition> Partition::add_box(std::size_t i) const {
  if (i > 0 && (*this)[i - 1] <= (*this)[i]) return std::nullopt;
  auto p = padded(i + 1);
  ++p[i];
  return Partition(std::move(p));
}

std::vector<unsigned> Partition::padded(std::size_t n) const {
  std::vector<unsigned> p = parts_;
  if (p.size() < n) p.resize(n, 0);
  return p;
}

std::string Partition::str() const {
  if (parts_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void gen(unsigned n, unsigned max_part, std::size_t max_len, std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == max_len) return;
  for (unsigned p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(n - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n, std::size_t max_len) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  gen(n, n, max_len, cur, out);
  return out;
}

std::vector<std::pair<unsigned, std::size_t>> rectangular_decomposition(const Partition& lambda) {
  std::vector<std::pair<unsigned, std::size_t>> out;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i + 1 == p.size() || p[i + 1] != p[i]) out.emplace_back(p[i], i + 1);
  return out;
}

Partition rectangle(unsigned n, std::size_t l) { return Partition(std::vector<unsigned>(l, n)); }

}  // namespace jtk
