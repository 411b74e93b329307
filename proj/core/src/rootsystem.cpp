#include "intertwine/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "intertwine/errors.hpp"
#include "linalg.hpp"

namespace intertwine {

char to_char(CartanType t) {
  switch (t) {
    case CartanType::A: return 'A';
    case CartanType::B: return 'B';
    case CartanType::C: return 'C';
    case CartanType::D: return 'D';
    case CartanType::E: return 'E';
    case CartanType::F: return 'F';
    case CartanType::G: return 'G';
  }
  return '?';
}

int RootSystemSpec::rank() const {
  int n = 0;
  for (const auto& c : components) n += c.rank;
  return n;
}

std::string RootSystemSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += 'x';
    out += to_char(components[i].type);
    out += std::to_string(components[i].rank);
  }
  return out;
}

void validate(const RootSystemSpec& spec) {
  if (spec.components.empty()) throw ValidationError("root system needs at least one simple component");
  for (const auto& c : spec.components) {
    const std::string name = std::string(1, to_char(c.type)) + std::to_string(c.rank);
    auto fail = [&](const std::string& why) { throw ValidationError("inadmissible type " + name + ": " + why); };
    switch (c.type) {
      case CartanType::A:
        if (c.rank < 1) fail("A requires rank >= 1");
        break;
      case CartanType::B:
        if (c.rank < 2) fail("B requires rank >= 2");
        break;
      case CartanType::C:
        if (c.rank < 2) fail("C requires rank >= 2");
        break;
      case CartanType::D:
        if (c.rank < 4) fail("D requires rank >= 4");
        break;
      case CartanType::E:
        if (c.rank < 6 || c.rank > 8) fail("E requires rank 6, 7 or 8");
        break;
      case CartanType::F:
        if (c.rank != 4) fail("F requires rank 4");
        break;
      case CartanType::G:
        if (c.rank != 2) fail("G requires rank 2");
        break;
    }
  }
}

std::size_t expected_positive_root_count(const RootSystemSpec& spec) {
  std::size_t total = 0;
  for (const auto& c : spec.components) {
    const std::size_t n = static_cast<std::size_t>(c.rank);
    switch (c.type) {
      case CartanType::A: total += n * (n + 1) / 2; break;
      case CartanType::B:
      case CartanType::C: total += n * n; break;
      case CartanType::D: total += n * (n - 1); break;
      case CartanType::E: total += (n == 6 ? 36 : n == 7 ? 63 : 120); break;
      case CartanType::F: total += 24; break;
      case CartanType::G: total += 6; break;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Weight / Root

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& q : a.coords_) q = -q;
  return a;
}

Weight operator*(const Rational& c, Weight a) {
  for (auto& q : a.coords_) q *= c;
  return a;
}

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  return out + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& q : w.coords()) h = (h ^ hash_value(q)) * 0x100000001b3ULL;
  return h;
}

std::string to_string(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    const int c = r.coords[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += 'a';
    out += std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// RootSystem construction

namespace {

// Cartan matrix of one simple component, entry [i][j] = <alpha_i^vee, alpha_j>.
std::vector<std::vector<int>> simple_cartan(const SimpleComponent& c) {
  const int n = c.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (c.type) {
    case CartanType::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case CartanType::C:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case CartanType::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case CartanType::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    case CartanType::F:
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a[2][1] = -2;  // alpha_3 short, alpha_2 long
      break;
    case CartanType::G:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

}  // namespace

RootSystem::RootSystem(RootSystemSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  rank_ = spec_.rank();
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  half_lengths_.assign(rank_, Rational(1));

  int offset = 0;
  for (const auto& comp : spec_.components) {
    const auto block = simple_cartan(comp);
    for (int i = 0; i < comp.rank; ++i)
      for (int j = 0; j < comp.rank; ++j) cartan_[offset + i][offset + j] = block[i][j];

    // d_i a_ij = d_j a_ji along the (connected) Dynkin diagram, then rescale
    // so the longest simple root has (a,a) = 2.
    std::vector<std::optional<Rational>> d(comp.rank);
    d[0] = Rational(1);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < comp.rank; ++j) {
        if (j == i || block[i][j] == 0 || d[j]) continue;
        d[j] = *d[i] * Rational(block[i][j], block[j][i]);
        queue.push_back(j);
      }
    }
    Rational largest(0);
    for (const auto& x : d) largest = std::max(largest, *x);
    for (int i = 0; i < comp.rank; ++i) half_lengths_[offset + i] = *d[i] / largest;
    offset += comp.rank;
  }

  cartan_inverse_ = *detail::inverse(detail::to_rational(cartan_));

  // Every root is W-conjugate to a simple root: close the simple roots under
  // simple reflections, s_i(c) = c - (A c)_i e_i.
  std::vector<std::vector<int>> all;
  std::map<std::vector<int>, bool> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    seen[e] = true;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    all.push_back(c);
    for (int i = 0; i < rank_; ++i) {
      int pair = 0;
      for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * c[j];
      if (pair == 0) continue;
      auto next = c;
      next[i] -= pair;
      if (!seen.count(next)) {
        seen[next] = true;
        queue.push_back(std::move(next));
      }
    }
  }

  auto height = [](const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::vector<std::vector<int>> pos;
  for (const auto& c : all)
    if (height(c) > 0) pos.push_back(c);
  std::sort(pos.begin(), pos.end(), [&](const auto& x, const auto& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;  // within a height, alpha_1 side first
  });

  auto make_record = [&](const std::vector<int>& c) {
    RootRecord rec;
    rec.root = Root{c};
    rec.weight.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) rec.weight[i] += cartan_[i][j] * c[j];
    // beta^vee = sum_j c_j d_j / d_beta alpha_j^vee with d_beta = (beta,beta)/2.
    Rational d_beta(0);
    for (int j = 0; j < rank_; ++j) d_beta += Rational(c[j]) * half_lengths_[j] * Rational(rec.weight[j]);
    d_beta /= 2;
    rec.coroot.assign(rank_, 0);
    for (int j = 0; j < rank_; ++j) {
      const Rational k = Rational(c[j]) * half_lengths_[j] / d_beta;
      rec.coroot[j] = static_cast<int>(k.numerator());  // always integral for a root
    }
    return rec;
  };

  for (const auto& c : pos) {
    positive_.push_back(Root{c});
    records_.push_back(make_record(c));
  }
  for (const auto& c : pos) {
    std::vector<int> neg(c.size());
    std::transform(c.begin(), c.end(), neg.begin(), std::negate<>());
    records_.push_back(make_record(neg));
  }
  for (std::size_t k = 0; k < records_.size(); ++k) {
    by_coords_[records_[k].root.coords] = k;
    by_weight_[records_[k].weight] = k;
  }

  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& row : cartan_)
    for (int x : row) h = (h ^ static_cast<std::uint64_t>(x + 16)) * 0x100000001b3ULL;
  fingerprint_ = (h ^ static_cast<std::uint64_t>(rank_)) * 0x100000001b3ULL;
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw DomainError("simple root index " + std::to_string(i) + " out of range");
  std::vector<int> c(rank_, 0);
  c[i - 1] = 1;
  return Root{std::move(c)};
}

bool RootSystem::is_root(const Root& r) const { return by_coords_.count(r.coords) != 0; }

bool RootSystem::is_positive(const Root& r) const {
  auto it = by_coords_.find(r.coords);
  return it != by_coords_.end() && it->second < positive_.size();
}

const RootSystem::RootRecord& RootSystem::record(const Root& beta) const {
  auto it = by_coords_.find(beta.coords);
  if (it == by_coords_.end()) throw DomainError(to_string(beta) + " is not a root of " + name());
  return records_[it->second];
}

Rational RootSystem::pairing(const Root& beta, const Weight& mu) const {
  const auto& rec = record(beta);
  Rational s(0);
  for (int j = 0; j < rank_; ++j) s += Rational(rec.coroot[j]) * mu[j];
  return s;
}

Weight RootSystem::reflect(const Root& beta, const Weight& mu) const {
  const auto& rec = record(beta);
  Rational p(0);
  for (int j = 0; j < rank_; ++j) p += Rational(rec.coroot[j]) * mu[j];
  if (p.numerator() == 0) return mu;
  std::vector<Rational> out = mu.coords();
  for (int i = 0; i < rank_; ++i) out[i] -= p * Rational(rec.weight[i]);
  return Weight(std::move(out));
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  return std::none_of(positive_.begin(), positive_.end(),
                      [&](const Root& a) { return is_negative_integer(pairing(a, lambda)); });
}

Weight RootSystem::rho() const { return Weight(std::vector<Rational>(rank_, Rational(1))); }

Weight RootSystem::to_weight(const Root& r) const {
  std::vector<Rational> out(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += Rational(cartan_[i][j] * r.coords[j]);
  return Weight(std::move(out));
}

std::optional<Root> RootSystem::root_from_weight(const Weight& mu) const {
  if (!mu.is_integral()) return std::nullopt;
  std::vector<int> key(rank_);
  for (int i = 0; i < rank_; ++i) key[i] = static_cast<int>(mu[i].numerator());
  auto it = by_weight_.find(key);
  if (it == by_weight_.end()) return std::nullopt;
  return records_[it->second].root;
}

const std::vector<int>& RootSystem::coroot(const Root& beta) const { return record(beta).coroot; }

std::vector<Rational> RootSystem::to_root_coords(const Weight& mu) const {
  std::vector<Rational> out(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += cartan_inverse_[i][j] * mu[j];
  return out;
}

bool RootSystem::in_root_lattice(const Weight& mu) const {
  const auto c = to_root_coords(mu);
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
}

Rational RootSystem::form(const Root& a, const Root& b) const {
  // (alpha_i, alpha_j) = d_i a_ij
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += Rational(a.coords[i] * b.coords[j]) * half_lengths_[i] * Rational(cartan_[i][j]);
  }
  return s;
}

}  // namespace intertwine
