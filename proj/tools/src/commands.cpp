#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cache.hpp"
#include "cli.hpp"
#include "intertwine/criteria.hpp"
#include "intertwine/errors.hpp"
#include "intertwine/oracle.hpp"

namespace intertwine::cli {

using json = nlohmann::ordered_json;

namespace {

std::string set_string(const std::vector<Weight>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ";" : "") + to_string(ws[i]);
  return out.empty() ? "-" : out;
}

json weights_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

json roots_json(const std::vector<Root>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(to_string(r));
  return out;
}

json certificate_json(const Certificate& c) {
  return json{{"positions", c.positions}, {"roots", roots_json(c.roots)}};
}

std::string word_of(const RootSystem& rs, const WeylElem& w) { return compact_word(canonical_reduced_word(rs, w)); }

std::string positions_string(const Certificate& c) {
  if (c.positions.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < c.positions.size(); ++i) out += (i ? "," : "") + std::to_string(c.positions[i]);
  return out;
}

// --- hom-verma / hom-ps ------------------------------------------------------

json parameters_json(const RootSystem& rs, const CriterionQuery& q) {
  return std::visit(
      [&](const auto& p) {
        json out;
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, PrincipalSeriesQuery>) out["lambda"] = to_string(p.lambda);
        out["w1"] = word_of(rs, p.w1);
        out["mu1"] = to_string(p.mu1);
        out["w2"] = word_of(rs, p.w2);
        out["mu2"] = to_string(p.mu2);
        return out;
      },
      q);
}

json witness_json(const RootSystem& rs, const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json out{{"weight", to_string(w->weight)},
           {"left_source", to_string(w->left_source)},
           {"left_certificate", certificate_json(w->left_certificate)},
           {"right_source", to_string(w->right_source)},
           {"right_certificate", certificate_json(w->right_certificate)}};
  if (w->stabilizer) out["stabilizer"] = word_of(rs, *w->stabilizer);
  return out;
}

void emit_verdict(const Query& q, const RootSystem& rs, const HomVerdict& v, const std::optional<json>& input,
                  std::ostream& out) {
  const bool verma = q.command == Command::hom_verma;
  const json params = parameters_json(rs, v.parameters);
  switch (q.format) {
    case Format::json: {
      json doc{{"command", to_string(q.command)}, {"system", rs.name()}};
      doc["hom_nonzero"] = v.hom_nonzero;
      doc["ext_all_vanish"] = v.ext_all_vanish;
      doc["witness"] = witness_json(rs, v.witness);
      doc["left_set"] = weights_json(v.left_set);
      doc["right_set"] = weights_json(v.right_set);
      doc["parameters"] = params;
      if (input) doc["input"] = *input;
      if (verma) doc["lattice_mismatch"] = v.lattice_mismatch;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::tsv: {
      std::vector<std::string> head, row;
      for (const auto& [k, val] : params.items()) {
        head.push_back(k);
        row.push_back(val.get<std::string>());
      }
      head.insert(head.end(), {"hom_nonzero", "ext_all_vanish", "witness", "left_set", "right_set"});
      row.insert(row.end(), {v.hom_nonzero ? "true" : "false", v.ext_all_vanish ? "true" : "false",
                             v.witness ? to_string(v.witness->weight) : "-", set_string(v.left_set),
                             set_string(v.right_set)});
      if (verma) {
        head.push_back("lattice_mismatch");
        row.push_back(v.lattice_mismatch ? "true" : "false");
      }
      for (const auto* line : {&head, &row}) {
        for (std::size_t i = 0; i < line->size(); ++i) out << (i ? "\t" : "") << (*line)[i];
        out << '\n';
      }
      break;
    }
    case Format::human: {
      out << to_string(q.command) << ' ' << rs.name();
      for (const auto& [k, val] : params.items()) out << "  " << k << '=' << val.get<std::string>();
      out << '\n';
      if (input) out << "normalized from " << input->dump() << '\n';
      out << "Hom nonzero:        " << (v.hom_nonzero ? "yes" : "no") << '\n';
      out << "Ext vanishes in all degrees: " << (v.ext_all_vanish ? "yes" : "no") << '\n';
      if (v.witness) {
        const Witness& w = *v.witness;
        out << "witness:            " << to_string(w.weight) << "  (left from " << to_string(w.left_source)
            << " at " << positions_string(w.left_certificate) << ", right from " << to_string(w.right_source) << " at "
            << positions_string(w.right_certificate);
        if (w.stabilizer) out << ", stabilizer " << word_of(rs, *w.stabilizer);
        out << ")\n";
      }
      out << "left set  (" << v.left_set.size() << "): " << set_string(v.left_set) << '\n';
      out << "right set (" << v.right_set.size() << "): " << set_string(v.right_set) << '\n';
      if (verma && v.lattice_mismatch) out << "note: mu1 - mu2 is not in the weight lattice\n";
      break;
    }
  }
}

int hom_verma(const Query& q, const RootSystem& rs, const ASetProvider& provider, std::ostream& out) {
  const TwistedVermaQuery tq{from_word(rs, q.words[0]), q.weights[0], from_word(rs, q.words[1]), q.weights[1]};
  emit_verdict(q, rs, hom_twisted_verma(rs, tq, provider), std::nullopt, out);
  return kExitOk;
}

int hom_ps(const Query& q, const RootSystem& rs, const ASetProvider& provider, std::ostream& out) {
  PrincipalSeriesQuery pq{*q.lambda, from_word(rs, q.words[0]), q.weights[0], from_word(rs, q.words[1]), q.weights[1]};
  std::optional<json> input;
  if (q.normalize) {
    input = json{{"lambda", to_string(pq.lambda)}, {"w1", compact_word(q.words[0])}, {"mu1", to_string(pq.mu1)},
                 {"w2", compact_word(q.words[1])}, {"mu2", to_string(pq.mu2)}};
    // (w, mu) names L(M(w lambda), dM(mu)), i.e. mu = w (w^{-1} mu).
    const auto n1 = normalize_principal_series(rs, pq.lambda, pq.w1, act(inverse(pq.w1), pq.mu1));
    const auto n2 = normalize_principal_series(rs, pq.lambda, pq.w2, act(inverse(pq.w2), pq.mu2));
    pq.lambda = n1.lambda;
    std::tie(pq.w1, pq.mu1) = n1.slot();
    std::tie(pq.w2, pq.mu2) = n2.slot();
  }
  emit_verdict(q, rs, hom_principal_series(rs, pq, provider), input, out);
  return kExitOk;
}

// --- aset ----------------------------------------------------------------------

int aset(const Query& q, const RootSystem& rs, const ASetProvider& provider, std::ostream& out) {
  const Weight lambda = q.lambda.value_or(rs.rho());
  const IntegralData ctx = integral_data(rs, lambda);
  const WeylElem w = from_word(rs, q.words[0]);
  if (!is_in_W_lambda(rs, w, ctx)) throw DomainError(compact_word(q.words[0]) + " is not in W_lambda");
  const Weight& mu = q.weights[0];
  const std::vector<Root> letters = letters_of(ctx, integral_reduced_word(rs, w, ctx));
  const ASet set = provider(rs, w, mu, ctx);

  switch (q.format) {
    case Format::json: {
      json doc{{"command", "aset"}, {"system", rs.name()}, {"w", word_of(rs, w)}, {"mu", to_string(mu)},
               {"lambda", to_string(lambda)}, {"integral_word", roots_json(letters)},
               {"beta_sequence", roots_json(beta_sequence(rs, letters))}, {"size", set.size()}};
      json elements = json::array();
      for (const auto& [nu, cert] : set.elements)
        elements.push_back({{"weight", to_string(nu)}, {"certificate", certificate_json(cert)}});
      doc["elements"] = std::move(elements);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::tsv:
      out << "weight\tpositions\troots\n";
      for (const auto& [nu, cert] : set.elements) {
        std::string roots;
        for (std::size_t i = 0; i < cert.roots.size(); ++i) roots += (i ? "," : "") + to_string(cert.roots[i]);
        out << to_string(nu) << '\t' << positions_string(cert) << '\t' << (roots.empty() ? "-" : roots) << '\n';
      }
      break;
    case Format::human:
      for (const auto& [nu, cert] : set.elements) {
        out << to_string(nu);
        if (q.certificates) {
          out << "  <- " << (cert.positions.empty() ? "empty subsequence" : "positions " + positions_string(cert));
          for (std::size_t i = 0; i < cert.roots.size(); ++i) out << (i ? ", " : " via ") << to_string(cert.roots[i]);
        }
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

// --- integral ------------------------------------------------------------------

int integral(const Query& q, const RootSystem& rs, std::ostream& out) {
  const Weight& lambda = q.weights[0];
  const IntegralData ctx = integral_data(rs, lambda);
  const auto group = integral_weyl_group(rs, ctx);
  const auto stab = stabilizer_elements(rs, ctx);
  std::size_t p_shift = 0;
  for (const auto& w : enumerate_group(rs))
    if (shifts_into_weight_lattice(w, lambda)) ++p_shift;

  switch (q.format) {
    case Format::json: {
      json doc{{"command", "integral"},
               {"system", rs.name()},
               {"lambda", to_string(lambda)},
               {"dominant", rs.is_dominant(lambda)},
               {"positive", roots_json(ctx.positive)},
               {"simple", roots_json(ctx.simple)},
               {"longest", word_of(rs, ctx.longest)},
               {"longest_integral_length", integral_length(rs, ctx.longest, ctx)},
               {"stabilizer_generators", roots_json(ctx.stabilizer_generators)},
               {"order", group.size()},
               {"stabilizer_order", stab.size()},
               {"weight_lattice_shift_count", p_shift}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::tsv: {
      auto join = [](const std::vector<Root>& rs) {
        std::string s;
        for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? ";" : "") + to_string(rs[i]);
        return s.empty() ? std::string("-") : s;
      };
      out << "lambda\tdominant\tpositive\tsimple\tlongest\tstabilizer_generators\torder\tstabilizer_order\t"
             "weight_lattice_shift_count\n";
      out << to_string(lambda) << '\t' << (rs.is_dominant(lambda) ? "true" : "false") << '\t' << join(ctx.positive)
          << '\t' << join(ctx.simple) << '\t' << word_of(rs, ctx.longest) << '\t' << join(ctx.stabilizer_generators)
          << '\t' << group.size() << '\t' << stab.size() << '\t' << p_shift << '\n';
      break;
    }
    case Format::human: {
      auto list = [&](const char* label, const std::vector<Root>& roots) {
        out << label << " (" << roots.size() << "):";
        for (const auto& r : roots) out << ' ' << to_string(r);
        out << '\n';
      };
      out << "lambda " << to_string(lambda) << " in " << rs.name() << (rs.is_dominant(lambda) ? " (dominant)" : "")
          << '\n';
      list("integral positive roots", ctx.positive);
      list("integral simple roots", ctx.simple);
      out << "longest element: " << word_of(rs, ctx.longest) << "  (integral length "
          << integral_length(rs, ctx.longest, ctx) << ")\n";
      list("stabilizer generators", ctx.stabilizer_generators);
      out << "|W_lambda| = " << group.size() << ", |W_lambda^0| = " << stab.size() << '\n';
      if (p_shift != group.size())
        out << "note: " << p_shift << " elements of W move lambda by a weight-lattice vector\n";
      break;
    }
  }
  return kExitOk;
}

// --- table ---------------------------------------------------------------------

int table(const Query& q, const RootSystem& rs, const ASetProvider& provider, std::ostream& out) {
  const bool ps = q.kind == TableKind::ps;
  std::vector<WeylElem> group;
  std::vector<Weight> mus;
  if (ps) {
    if (!rs.is_dominant(*q.lambda))
      throw PreconditionError("lambda = " + to_string(*q.lambda) + " is not dominant");
    const IntegralData ctx = integral_data(rs, *q.lambda);
    group = q.w_all ? integral_weyl_group(rs, ctx) : std::vector<WeylElem>{identity(rs)};
    if (q.mu_orbit) {
      for (const auto& mu : oracle::orbit_closure(rs, {*q.mu_orbit}))
        if ((mu - *q.lambda).is_integral()) mus.push_back(mu);
    } else {
      for (const auto& shift : oracle::integral_box(rs.rank(), q.grid_radius)) mus.push_back(*q.lambda + shift);
      std::sort(mus.begin(), mus.end());
    }
  } else {
    group = q.w_all ? enumerate_group(rs) : std::vector<WeylElem>{identity(rs)};
    mus = oracle::orbit_closure(rs, {*q.mu_orbit});
  }

  std::vector<std::string> labels;
  for (const auto& w : group) labels.push_back(word_of(rs, w));

  struct Row {
    std::size_t w1, m1, w2, m2;
    bool hom;
    std::optional<Weight> witness;
  };
  std::vector<Row> rows;
  rows.reserve(group.size() * group.size() * mus.size() * mus.size());
  for (std::size_t a = 0; a < group.size(); ++a)
    for (std::size_t m1 = 0; m1 < mus.size(); ++m1)
      for (std::size_t b = 0; b < group.size(); ++b)
        for (std::size_t m2 = 0; m2 < mus.size(); ++m2) {
          const HomVerdict v =
              ps ? hom_principal_series(rs, {*q.lambda, group[a], mus[m1], group[b], mus[m2]}, provider)
                 : hom_twisted_verma(rs, {group[a], mus[m1], group[b], mus[m2]}, provider);
          rows.push_back({a, m1, b, m2, v.hom_nonzero,
                          v.witness ? std::optional<Weight>(v.witness->weight) : std::nullopt});
        }

  const std::size_t nonzero = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.hom; });
  switch (q.format) {
    case Format::json: {
      json doc{{"command", "table"}, {"system", rs.name()}, {"kind", ps ? "ps" : "verma"}};
      if (ps) doc["lambda"] = to_string(*q.lambda);
      doc["group_size"] = group.size();
      doc["weights"] = weights_json(mus);
      doc["row_count"] = rows.size();
      doc["nonzero_count"] = nonzero;
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"w1", labels[r.w1]},
                       {"mu1", to_string(mus[r.m1])},
                       {"w2", labels[r.w2]},
                       {"mu2", to_string(mus[r.m2])},
                       {"hom_nonzero", r.hom},
                       {"witness", r.witness ? json(to_string(*r.witness)) : json(nullptr)}});
      }
      doc["rows"] = std::move(arr);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::human:
      out << "# " << (ps ? "principal series" : "twisted Verma") << " table for " << rs.name() << ": "
          << rows.size() << " rows, " << nonzero << " nonzero\n";
      [[fallthrough]];
    case Format::tsv:
      out << "w1\tmu1\tw2\tmu2\thom_nonzero\twitness\n";
      for (const auto& r : rows) {
        out << labels[r.w1] << '\t' << to_string(mus[r.m1]) << '\t' << labels[r.w2] << '\t' << to_string(mus[r.m2])
            << '\t' << (r.hom ? "true" : "false") << '\t' << (r.witness ? to_string(*r.witness) : "-") << '\n';
      }
      break;
  }
  return kExitOk;
}

// --- selfcheck -------------------------------------------------------------------

int selfcheck(const Query& q, std::ostream& out) {
  oracle::SelfcheckConfig cfg;
  cfg.rank_bound = q.rank_bound;
  cfg.grid_radius = q.grid_radius;
  cfg.seed = q.seed;
  cfg.random_pairs = q.random_pairs;

  std::function<void(const oracle::SweepReport&)> live;
  if (q.format == Format::human) live = [&](const oracle::SweepReport& r) { out << to_string(r) << std::endl; };
  const auto reports = oracle::run_selfcheck(cfg, live);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  if (q.format == Format::json) {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back({{"name", r.name},
                     {"system", r.system},
                     {"cases", r.cases},
                     {"passed", r.passed()},
                     {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}});
    }
    out << json{{"command", "selfcheck"}, {"passed", ok}, {"reports", arr}}.dump(2) << '\n';
  } else if (q.format == Format::tsv) {
    out << "system\tcheck\tcases\tpassed\tcounterexample\n";
    for (const auto& r : reports)
      out << r.system << '\t' << r.name << '\t' << r.cases << '\t' << (r.passed() ? "true" : "false") << '\t'
          << r.counterexample.value_or("-") << '\n';
  } else {
    out << (ok ? "all sweeps passed" : "COUNTEREXAMPLE FOUND") << " (" << reports.size() << " sweeps)\n";
  }
  return ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int execute(const Query& q, const RunOptions& options, std::ostream& out, std::ostream& err) {
  if (q.command == Command::selfcheck) return selfcheck(q, out);

  const RootSystem rs(*q.system);
  std::optional<ASetCache> cache;
  ASetProvider provider = default_aset_provider();
  if (!q.no_cache) {
    std::optional<std::filesystem::path> dir;
    if (options.cache_dir) dir = *options.cache_dir;
    cache.emplace(dir, err, q.verify_cache);
    provider = cache->provider();
  }

  int code = kExitOk;
  switch (q.command) {
    case Command::aset: code = aset(q, rs, provider, out); break;
    case Command::hom_verma: code = hom_verma(q, rs, provider, out); break;
    case Command::hom_ps: code = hom_ps(q, rs, provider, out); break;
    case Command::integral: code = integral(q, rs, out); break;
    case Command::table: code = table(q, rs, provider, out); break;
    case Command::selfcheck: break;
  }
  if (cache && cache->persistent())
    err << "cache: " << cache->hits() << " hits, " << cache->misses() << " misses\n";
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_cache_dir) {
  try {
    const ParsedArgs parsed = parse_args(args, std::move(env_cache_dir));
    if (parsed.options.show_help) {
      out << parsed.options.help_text;
      return kExitOk;
    }
    return execute(parsed.query, parsed.options, out, err);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace intertwine::cli
