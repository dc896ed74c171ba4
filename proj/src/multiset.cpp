#include "binconf/multiset.hpp"

#include <algorithm>
#include <numeric>

namespace binconf {

Ground letter_ground(int m) {
  if (m < 0 || m > 26) throw Error("letter ground set supports 0..26 atoms");
  auto atoms = std::make_shared<std::vector<std::string>>();
  for (int i = 0; i < m; ++i) atoms->push_back(std::string(1, static_cast<char>('a' + i)));
  return atoms;
}

Multiset::Multiset(Ground ground, std::vector<std::uint32_t> counts)
    : ground_(std::move(ground)), counts_(std::move(counts)) {
  if (!ground_) throw Error("multiset requires a ground set");
  if (counts_.size() != ground_->size()) throw Error("count vector does not match ground set");
}

Multiset Multiset::empty(Ground ground) {
  std::vector<std::uint32_t> counts(ground->size(), 0);
  return Multiset(std::move(ground), std::move(counts));
}

std::size_t Multiset::cardinality() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::vector<int> Multiset::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > 0) out.push_back(static_cast<int>(i));
  return out;
}

std::uint32_t Multiset::degree(const std::string& atom) const {
  auto it = std::find(ground_->begin(), ground_->end(), atom);
  if (it == ground_->end()) throw Error("atom '" + atom + "' outside ground set");
  return counts_[static_cast<std::size_t>(it - ground_->begin())];
}

bool Multiset::same_ground(const Multiset& other) const {
  return ground_ == other.ground_ || *ground_ == *other.ground_;
}

Multiset Multiset::mul(const Multiset& other) const {
  if (!same_ground(other)) throw Error("multiset product requires equal ground sets");
  std::vector<std::uint32_t> counts(counts_);
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts_[i];
  return Multiset(ground_, std::move(counts));
}

Multiset Multiset::divide(const Multiset& other) const {
  if (!same_ground(other)) throw Error("multiset quotient requires equal ground sets");
  std::vector<std::uint32_t> counts(counts_);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (other.counts_[i] > counts[i])
      throw Error("multiset '" + to_string() + "' not divisible by '" + other.to_string() + "'");
    counts[i] -= other.counts_[i];
  }
  return Multiset(ground_, std::move(counts));
}

Multiset Multiset::times_atom(int atom_idx, std::uint32_t times) const {
  std::vector<std::uint32_t> counts(counts_);
  counts.at(atom_idx) += times;
  return Multiset(ground_, std::move(counts));
}

Multiset Multiset::divide_atom(int atom_idx, std::uint32_t times) const {
  std::vector<std::uint32_t> counts(counts_);
  if (counts.at(atom_idx) < times) throw Error("multiset atom quotient underflow");
  counts[atom_idx] -= times;
  return Multiset(ground_, std::move(counts));
}

std::string Multiset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    out += (*ground_)[i];
    if (counts_[i] > 1) out += "^" + std::to_string(counts_[i]);
  }
  return out.empty() ? "1" : out;
}

bool Multiset::operator==(const Multiset& other) const {
  return same_ground(other) && counts_ == other.counts_;
}

Multiset mul(const Multiset& f, const Multiset& g) { return f.mul(g); }
Multiset divide(const Multiset& f, const Multiset& g) { return f.divide(g); }
std::uint32_t degree(const std::string& atom, const Multiset& f) { return f.degree(atom); }

namespace {

void enumerate_rec(const Ground& ground, int k, int min_atom,
                   std::vector<std::uint32_t>& counts, std::vector<Multiset>& out) {
  if (k == 0) {
    out.emplace_back(ground, counts);
    return;
  }
  // Next atom chosen non-decreasing: yields the repeated-atom word order.
  for (int a = min_atom; a < static_cast<int>(ground->size()); ++a) {
    ++counts[a];
    enumerate_rec(ground, k - 1, a, counts, out);
    --counts[a];
  }
}

}  // namespace

std::vector<Multiset> enumerate_multisets(const Ground& ground, int k) {
  if (k < 0) throw Error("multiset size must be nonnegative");
  std::vector<Multiset> out;
  std::vector<std::uint32_t> counts(ground->size(), 0);
  enumerate_rec(ground, k, 0, counts, out);
  return out;
}

std::string KSubset::to_string() const { return subset_id(members); }

std::string subset_id(const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

std::vector<KSubset> enumerate_subsets(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error("subset size out of range");
  std::vector<KSubset> out;
  std::vector<int> members(k);
  std::iota(members.begin(), members.end(), 1);
  while (true) {
    out.push_back(KSubset{n, members});
    int i = k - 1;
    while (i >= 0 && members[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++members[i];
    for (int j = i + 1; j < k; ++j) members[j] = members[j - 1] + 1;
  }
  return out;
}

}  // namespace binconf
