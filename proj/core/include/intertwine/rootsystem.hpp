#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intertwine/rational.hpp"

namespace intertwine {

enum class CartanType { A, B, C, D, E, F, G };

char to_char(CartanType t);

struct SimpleComponent {
  CartanType type;
  int rank;

  bool operator==(const SimpleComponent&) const = default;
};

/// A semisimple type as a direct sum of simple components, e.g. A1xB2.
struct RootSystemSpec {
  std::vector<SimpleComponent> components;

  int rank() const;
  std::string to_string() const;

  bool operator==(const RootSystemSpec&) const = default;
};

/// Throws ValidationError naming the violated constraint.
void validate(const RootSystemSpec& spec);

/// An element of h^* in the fundamental-weight basis: coords[i] = <alpha_i^vee, mu>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<Rational>(rank, Rational(0))); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[i]; }

  bool is_integral() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(const Rational& c, Weight a);

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates; fixes every output order in the project.
  friend bool operator<(const Weight& a, const Weight& b);

 private:
  std::vector<Rational> coords_;
};

/// "(a,b,...)" with rationals in lowest terms.
std::string to_string(const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// A root in the simple-root basis.
struct Root {
  std::vector<int> coords;

  friend bool operator==(const Root&, const Root&) = default;
  friend bool operator<(const Root& a, const Root& b) { return a.coords < b.coords; }
};

/// "a1+a2", "-a1-2a2".
std::string to_string(const Root& r);

/// Finite crystallographic root system with a fixed positive system and
/// Bourbaki numbering of simple roots. Immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  std::string name() const { return spec_.to_string(); }
  int rank() const { return rank_; }

  /// cartan()[i][j] = <alpha_i^vee, alpha_j>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// Positive roots ordered by height, then by coordinates.
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }

  /// 1-based, Bourbaki order.
  Root simple_root(int i) const;

  bool is_root(const Root& r) const;
  bool is_positive(const Root& r) const;

  /// <beta^vee, mu>. Throws DomainError when beta is not a root.
  Rational pairing(const Root& beta, const Weight& mu) const;

  /// s_beta(mu) = mu - <beta^vee, mu> beta.
  Weight reflect(const Root& beta, const Weight& mu) const;

  /// No positive root pairs with lambda to a negative integer.
  bool is_dominant(const Weight& lambda) const;

  Weight rho() const;

  /// Fundamental-weight coordinates of a root (any integer vector is accepted).
  Weight to_weight(const Root& r) const;

  /// Inverse of to_weight restricted to roots.
  std::optional<Root> root_from_weight(const Weight& mu) const;

  /// Coefficients of beta^vee in the simple-coroot basis.
  const std::vector<int>& coroot(const Root& beta) const;

  /// Simple-root coordinates of mu (A^{-1} applied to the fundamental coordinates).
  std::vector<Rational> to_root_coords(const Weight& mu) const;

  bool in_root_lattice(const Weight& mu) const;
  bool in_weight_lattice(const Weight& mu) const { return mu.is_integral(); }

  /// Normalized invariant form: long roots of each simple component have (a,a) = 2.
  Rational form(const Root& a, const Root& b) const;

  /// Identifies the Cartan matrix; Weyl elements carry it to reject mixing.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  struct RootRecord {
    Root root;
    std::vector<int> weight;  // fundamental-weight coordinates
    std::vector<int> coroot;  // simple-coroot coordinates
  };

  const RootRecord& record(const Root& beta) const;

  RootSystemSpec spec_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> half_lengths_;  // (alpha_i, alpha_i) / 2
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<Root> positive_;
  std::vector<RootRecord> records_;               // all roots
  std::map<std::vector<int>, std::size_t> by_coords_;
  std::map<std::vector<int>, std::size_t> by_weight_;
  std::uint64_t fingerprint_ = 0;
};

/// Closed-form |positive roots| for a spec; used to check construction.
std::size_t expected_positive_root_count(const RootSystemSpec& spec);

}  // namespace intertwine
