#include "query.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "intertwine/errors.hpp"
#include "intertwine/parse.hpp"

namespace intertwine::cli {

std::string to_string(Command c) {
  switch (c) {
    case Command::aset: return "aset";
    case Command::hom_verma: return "hom-verma";
    case Command::hom_ps: return "hom-ps";
    case Command::integral: return "integral";
    case Command::table: return "table";
    case Command::selfcheck: return "selfcheck";
  }
  return "?";
}

std::string to_string(Format f) {
  switch (f) {
    case Format::human: return "human";
    case Format::json: return "json";
    case Format::tsv: return "tsv";
  }
  return "?";
}

std::string compact_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int i : w) out += "s" + std::to_string(i);
  return out;
}

std::vector<std::string> split_canonical(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

namespace {

struct Raw {
  std::string system;
  std::vector<std::string> positional;
  std::string lambda;
  std::string mu_orbit;
  std::string format = "human";
  std::string kind = "verma";
  std::string cache_dir;
};

void add_common(CLI::App* sub, Raw& raw, Query& q) {
  sub->add_option("--format", raw.format, "json, tsv or human")
      ->check(CLI::IsMember({"json", "tsv", "human"}));
  sub->add_flag("--no-cache", q.no_cache, "bypass the A-set cache");
  sub->add_flag("--verify-cache", q.verify_cache, "recompute every cache hit and compare");
  sub->add_option("--cache-dir", raw.cache_dir, "A-set cache directory (default: $INTERTWINE_CACHE_DIR)");
}

}  // namespace

ParsedArgs parse_args(const std::vector<std::string>& args, std::optional<std::string> env_cache_dir) {
  ParsedArgs parsed;
  Query& q = parsed.query;
  Raw raw;

  CLI::App app{"Hom-existence between twisted Verma modules and principal series", "intertwine"};
  app.require_subcommand(1);

  auto* aset = app.add_subcommand("aset", "A-set of a Weyl element and weight");
  aset->add_option("system", raw.system, "root system, e.g. A2 or A1xB2")->required();
  aset->add_option("args", raw.positional, "W MU")->expected(2)->required();
  aset->add_option("--lambda", raw.lambda, "integrality parameter (default: rho)");
  aset->add_flag("--certificates", q.certificates, "print a subsequence certificate per element");
  add_common(aset, raw, q);

  auto* verma = app.add_subcommand("hom-verma", "Hom between twisted Verma modules");
  verma->add_option("system", raw.system, "root system")->required();
  verma->add_option("args", raw.positional, "W1 MU1 W2 MU2")->expected(4)->required();
  add_common(verma, raw, q);

  auto* ps = app.add_subcommand("hom-ps", "Hom between principal series");
  ps->add_option("system", raw.system, "root system")->required();
  ps->add_option("args", raw.positional, "W1 MU1 W2 MU2")->expected(4)->required();
  ps->add_option("--lambda", raw.lambda, "dominant parameter")->required();
  ps->add_flag("--normalize", q.normalize, "rewrite a non-dominant lambda first");
  add_common(ps, raw, q);

  auto* integral = app.add_subcommand("integral", "integral root system of a weight");
  integral->add_option("system", raw.system, "root system")->required();
  integral->add_option("args", raw.positional, "LAMBDA")->expected(1)->required();
  add_common(integral, raw, q);

  auto* table = app.add_subcommand("table", "verdict for every (w1, mu1, w2, mu2) in a grid");
  table->add_option("system", raw.system, "root system")->required();
  table->add_option("--mu-orbit", raw.mu_orbit, "weights: the W-orbit of MU");
  table->add_flag("--w-all", q.w_all, "w1, w2 range over the whole group (default: identity only)");
  table->add_option("--kind", raw.kind, "verma or ps")->check(CLI::IsMember({"verma", "ps"}));
  table->add_option("--lambda", raw.lambda, "dominant parameter for --kind ps");
  table->add_option("--grid-radius", q.grid_radius, "weights: integral box of this radius (around lambda for ps)");
  add_common(table, raw, q);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the oracle sweeps");
  selfcheck->add_option("--rank-bound", q.rank_bound, "largest rank swept")->check(CLI::Range(1, 4));
  selfcheck->add_option("--grid-radius", q.grid_radius, "integral grid radius")->check(CLI::Range(0, 3));
  selfcheck->add_option("--seed", q.seed, "random pair seed");
  selfcheck->add_option("--random-pairs", q.random_pairs, "random rational pairs per system");
  add_common(selfcheck, raw, q);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    parsed.options.show_help = true;
    parsed.options.help_text = app.help("", CLI::AppFormatMode::All);
    return parsed;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  const std::vector<std::pair<CLI::App*, Command>> commands = {
      {aset, Command::aset},   {verma, Command::hom_verma}, {ps, Command::hom_ps},
      {integral, Command::integral}, {table, Command::table}, {selfcheck, Command::selfcheck}};
  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) q.command = cmd;

  q.format = raw.format == "json" ? Format::json : raw.format == "tsv" ? Format::tsv : Format::human;
  q.kind = raw.kind == "ps" ? TableKind::ps : TableKind::verma;
  if (!raw.cache_dir.empty()) {
    parsed.options.cache_dir = raw.cache_dir;
  } else if (env_cache_dir && !env_cache_dir->empty()) {
    parsed.options.cache_dir = env_cache_dir;
  }
  if (q.command == Command::selfcheck) return parsed;

  q.system = parse_root_system_spec(raw.system);
  const int rank = q.system->rank();
  auto word = [&](const std::string& s) { q.words.push_back(parse_word(s, rank)); };
  auto weight = [&](const std::string& s) { q.weights.push_back(parse_weight(s, rank)); };
  switch (q.command) {
    case Command::aset:
      word(raw.positional[0]);
      weight(raw.positional[1]);
      break;
    case Command::hom_verma:
    case Command::hom_ps:
      word(raw.positional[0]);
      weight(raw.positional[1]);
      word(raw.positional[2]);
      weight(raw.positional[3]);
      break;
    case Command::integral:
      weight(raw.positional[0]);
      break;
    default:
      break;
  }
  if (!raw.lambda.empty()) q.lambda = parse_weight(raw.lambda, rank);
  if (!raw.mu_orbit.empty()) q.mu_orbit = parse_weight(raw.mu_orbit, rank);
  if (q.command == Command::table) {
    if (q.kind == TableKind::ps && !q.lambda) throw ParseError("table --kind ps needs --lambda");
    if (q.kind == TableKind::verma && !q.mu_orbit) throw ParseError("table --kind verma needs --mu-orbit");
  }
  return parsed;
}

std::string to_canonical_string(const Query& q) {
  std::vector<std::string> t{to_string(q.command)};
  if (q.system) t.push_back(q.system->to_string());
  std::size_t wi = 0, mi = 0;
  auto word = [&] { t.push_back(compact_word(q.words.at(wi++))); };
  auto weight = [&] { t.push_back(intertwine::to_string(q.weights.at(mi++))); };
  switch (q.command) {
    case Command::aset:
      word(), weight();
      break;
    case Command::hom_verma:
    case Command::hom_ps:
      word(), weight(), word(), weight();
      break;
    case Command::integral:
      weight();
      break;
    default:
      break;
  }
  if (q.lambda) t.insert(t.end(), {"--lambda", intertwine::to_string(*q.lambda)});
  if (q.command == Command::table) {
    if (q.mu_orbit) t.insert(t.end(), {"--mu-orbit", intertwine::to_string(*q.mu_orbit)});
    if (q.w_all) t.push_back("--w-all");
    t.insert(t.end(), {"--kind", q.kind == TableKind::ps ? "ps" : "verma"});
    t.insert(t.end(), {"--grid-radius", std::to_string(q.grid_radius)});
  }
  if (q.command == Command::selfcheck) {
    t.insert(t.end(), {"--rank-bound", std::to_string(q.rank_bound), "--grid-radius", std::to_string(q.grid_radius),
                       "--seed", std::to_string(q.seed), "--random-pairs", std::to_string(q.random_pairs)});
  }
  if (q.normalize) t.push_back("--normalize");
  if (q.certificates) t.push_back("--certificates");
  if (q.no_cache) t.push_back("--no-cache");
  if (q.verify_cache) t.push_back("--verify-cache");
  t.insert(t.end(), {"--format", to_string(q.format)});

  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? " " : "") + t[i];
  return out;
}

}  // namespace intertwine::cli
