#include "harbourne/profile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace harbourne {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ProfileError(ProfileError::Kind::kBadArgument, "malformed profile '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Profile::Profile(int d, std::vector<Entry> entries) : d_(d), entries_(std::move(entries)) {
  if (d_ < 2) throw ProfileError(ProfileError::Kind::kBadArgument, "profile needs d >= 2");
  std::int64_t pairs = 0;
  for (const auto& [k, t] : entries_) {
    if (k < 2 || k > d_)
      throw ProfileError(ProfileError::Kind::kBadArgument,
                         "multiplicity " + std::to_string(k) + " outside 2.." + std::to_string(d_));
    if (t < 0) throw ProfileError(ProfileError::Kind::kBadArgument, "negative count t" + std::to_string(k));
    pairs += t * binom2(k);
    s_ += t;
  }
  if (s_ == 0) throw ProfileError(ProfileError::Kind::kEmptySingularSet, "profile has no singular points");
  if (pairs != binom2(d_))
    throw ProfileError(ProfileError::Kind::kIdentityViolation,
                       "pair count identity fails: C(" + std::to_string(d_) + ",2) = " + std::to_string(binom2(d_)) +
                           " but sum t_k C(k,2) = " + std::to_string(pairs));
}

Profile Profile::from_dense(int d, std::span<const std::int64_t> dense) {
  if (d < 2) throw ProfileError(ProfileError::Kind::kBadArgument, "profile needs d >= 2");
  if (dense.size() > static_cast<std::size_t>(d) + 1)
    throw ProfileError(ProfileError::Kind::kBadArgument, "t-vector longer than d");
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (dense[k] == 0) continue;
    if (k < 2) throw ProfileError(ProfileError::Kind::kBadArgument, "t_0 and t_1 must be zero");
    entries.emplace_back(static_cast<int>(k), dense[k]);
  }
  return Profile(d, std::move(entries));
}

Profile Profile::from_counts(int d, std::vector<Entry> counts) {
  std::map<int, std::int64_t> merged;
  for (const auto& [k, t] : counts) {
    if (t < 0) throw ProfileError(ProfileError::Kind::kBadArgument, "negative count t" + std::to_string(k));
    merged[k] += t;
  }
  std::vector<Entry> entries;
  for (const auto& [k, t] : merged)
    if (t != 0) entries.emplace_back(k, t);
  return Profile(d, std::move(entries));
}

Profile Profile::from_multiset(int d, const MultiplicityMultiset& m) {
  std::vector<Entry> counts;
  counts.reserve(m.entries.size());
  for (int k : m.entries) counts.emplace_back(k, 1);
  return from_counts(d, std::move(counts));
}

Profile Profile::parse(std::string_view text) {
  const auto semi = text.find(';');
  std::string_view head = text.substr(0, semi);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front()))) head.remove_prefix(1);
  if (head.substr(0, 2) != "d=")
    throw ProfileError(ProfileError::Kind::kBadArgument, "malformed profile '" + std::string(text) + "'");
  const auto d = static_cast<int>(parse_int(head.substr(2), text));
  std::vector<Entry> counts;
  if (semi != std::string_view::npos) {
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (item.front() != 't' || eq == std::string_view::npos)
        throw ProfileError(ProfileError::Kind::kBadArgument, "malformed profile '" + std::string(text) + "'");
      counts.emplace_back(static_cast<int>(parse_int(item.substr(1, eq - 1), text)), parse_int(item.substr(eq + 1), text));
    }
  }
  return from_counts(d, std::move(counts));
}

std::int64_t Profile::count(int k) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const Entry& e, int key) { return e.first < key; });
  return it != entries_.end() && it->first == k ? it->second : 0;
}

std::int64_t Profile::incidences() const {
  std::int64_t total = 0;
  for (const auto& [k, t] : entries_) total += k * t;
  return total;
}

std::vector<std::int64_t> Profile::dense() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(d_) + 1, 0);
  for (const auto& [k, t] : entries_) out[static_cast<std::size_t>(k)] = t;
  return out;
}

MultiplicityMultiset Profile::to_multiset() const {
  MultiplicityMultiset m;
  m.entries.reserve(static_cast<std::size_t>(s_));
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    m.entries.insert(m.entries.end(), static_cast<std::size_t>(it->second), it->first);
  return m;
}

std::string Profile::canonical() const {
  std::ostringstream os;
  os << "d=" << d_ << ";";
  const char* sep = " ";
  for (const auto& [k, t] : entries_) {
    os << sep << "t" << k << "=" << t;
    sep = ",";
  }
  return os.str();
}

Rational combinatorial_quotient(const Profile& p) {
  BigInt num = BigInt(p.d()) * p.d();
  for (const auto& [k, t] : p.entries()) num -= BigInt(t) * k * k;
  return Rational(num, BigInt(p.num_points()));
}

Rational simplified_quotient(const Profile& p) {
  return Rational(BigInt(p.d()) - BigInt(p.incidences()), BigInt(p.num_points()));
}

Rational harbourne_of_multiset(int d, const MultiplicityMultiset& m) {
  if (m.entries.empty()) throw ProfileError(ProfileError::Kind::kEmptySingularSet, "empty multiplicity multiset");
  BigInt squares = 0;
  BigInt linear = 0;
  BigInt pairs = 0;
  for (int k : m.entries) {
    if (k < 2) throw ProfileError(ProfileError::Kind::kBadArgument, "multiplicity " + std::to_string(k) + " is below 2");
    squares += BigInt(k) * k;
    linear += k;
    pairs += binom2(k);
  }
  const BigInt s(m.size());
  Rational value(BigInt(d) * d - squares, s);
  if (pairs == binom2(d)) {
    const Rational simplified(BigInt(d) - linear, s);
    if (value != simplified) throw std::logic_error("harbourne_of_multiset: quotient forms disagree");
  }
  return value;
}

}  // namespace harbourne
