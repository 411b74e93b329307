#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intertwine/rootsystem.hpp"
#include "intertwine/weyl.hpp"

namespace intertwine::cli {

enum class Command { aset, hom_verma, hom_ps, integral, table, selfcheck };
enum class Format { human, json, tsv };
enum class TableKind { verma, ps };

std::string to_string(Command c);
std::string to_string(Format f);

/// A fully parsed invocation. Everything that can change the emitted report
/// lives here; where the cache lives does not (see RunOptions).
struct Query {
  Command command = Command::selfcheck;
  std::optional<RootSystemSpec> system;
  std::vector<Word> words;
  std::vector<Weight> weights;
  std::optional<Weight> lambda;

  // table
  std::optional<Weight> mu_orbit;
  bool w_all = false;
  TableKind kind = TableKind::verma;

  // hom-ps: treat (w, mu) as the module L(M(w lambda), dM(mu)) with lambda arbitrary
  bool normalize = false;

  Format format = Format::human;
  bool certificates = false;
  bool no_cache = false;
  bool verify_cache = false;

  // selfcheck / grids
  int rank_bound = 3;
  int grid_radius = 2;
  std::uint64_t seed = 20240229;
  std::size_t random_pairs = 200;

  bool operator==(const Query&) const = default;
};

struct RunOptions {
  std::optional<std::string> cache_dir;
  bool show_help = false;
  std::string help_text;
};

struct ParsedArgs {
  Query query;
  RunOptions options;
};

/// argv without the program name. ParseError / ValidationError on bad input.
/// `env_cache_dir` is the fallback when --cache-dir is not given.
ParsedArgs parse_args(const std::vector<std::string>& args, std::optional<std::string> env_cache_dir = std::nullopt);

/// Whitespace-free tokens joined by single spaces; parse_args on the split
/// string reproduces the query.
std::string to_canonical_string(const Query& q);

/// Splits on ASCII whitespace.
std::vector<std::string> split_canonical(const std::string& s);

/// "e" or "s1s2s1".
std::string compact_word(const Word& w);

}  // namespace intertwine::cli
