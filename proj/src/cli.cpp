#include "fpg/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fpg/constructions.hpp"
#include "fpg/homology.hpp"
#include "fpg/reports.hpp"

namespace fpg {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write file: " + out_path);
  f << text << "\n";
}

// Splits a comma-separated word list, ignoring commas inside [ ] or ( ).
std::vector<Word> parse_word_list(const std::string& text, const Alphabet& a) {
  std::vector<Word> words;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    bool blank = cur.find_first_not_of(" \t") == std::string::npos;
    if (!blank) words.push_back(parse_word(cur, a));
    cur.clear();
  };
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    cur.push_back(c);
  }
  flush();
  return words;
}

std::string h1_text(const InvariantFactors& f) {
  if (f.trivial()) return "trivial";
  std::string s;
  if (f.free_rank > 0) s = "Z^" + std::to_string(f.free_rank);
  for (const mpz_class& d : f.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

struct Flags {
  std::string format = "text";
  std::string out_path;
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", f.out_path, "write output to a file instead of stdout");
}

EnumerationLimits limits_with(std::optional<int> cosets, std::optional<long> time_ms,
                              std::optional<long> nodes) {
  EnumerationLimits l = EnumerationLimits::from_env();
  if (cosets) l.max_cosets = *cosets;
  if (time_ms) l.max_time_ms = *time_ms;
  if (nodes) l.max_nodes = *nodes;
  return l;
}

int exit_for(const Certificate& c) {
  switch (c.status) {
    case CertStatus::certified: return 0;
    case CertStatus::refuted: return 1;
    default: return 2;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finitely presented group toolkit"};
  app.require_subcommand(1);

  std::string in_path, second_path, word_text, subgroup_text, seed_name = "higman",
                                                              sub_kind;
  int bound = 6, max_index = 2;
  long n_index = 0;
  std::optional<int> max_cosets;
  std::optional<long> max_time_ms, max_nodes;
  std::string strategy = "hlt", lambda_text = "1/6";
  RipsParameters rips_params;
  bool no_oracle = false;

  Flags flags;
  auto limit_opts = [&](CLI::App* c) {
    c->add_option("--max-cosets", max_cosets);
    c->add_option("--max-time-ms", max_time_ms);
    c->add_option("--max-nodes", max_nodes);
  };
  auto rips_opts = [&](CLI::App* c) {
    c->add_option("--block-base", rips_params.block_base);
    c->add_option("--max-rounds", rips_params.max_rounds);
  };

  CLI::App* c_parse = app.add_subcommand("parse", "canonicalize a presentation");
  c_parse->add_option("file", in_path)->required();
  add_common(c_parse, flags);

  CLI::App* c_h1 = app.add_subcommand("h1", "first integral homology");
  c_h1->add_option("file", in_path)->required();
  add_common(c_h1, flags);

  CLI::App* c_snf = app.add_subcommand("snf", "Smith normal form of a JSON matrix");
  c_snf->add_option("file", in_path)->required();
  add_common(c_snf, flags);

  CLI::App* c_tc = app.add_subcommand("tc", "coset enumeration");
  c_tc->add_option("file", in_path)->required();
  c_tc->add_option("--subgroup", subgroup_text, "comma-separated generator words");
  c_tc->add_option("--strategy", strategy)->check(CLI::IsMember({"hlt", "felsch"}));
  limit_opts(c_tc);
  add_common(c_tc, flags);

  CLI::App* c_li = app.add_subcommand("lowindex", "subgroups of index 2..n");
  c_li->add_option("file", in_path)->required();
  c_li->add_option("--max-index", max_index)->required();
  limit_opts(c_li);
  add_common(c_li, flags);

  CLI::App* c_cert = app.add_subcommand("certify", "bounded no-finite-quotient check");
  c_cert->add_option("file", in_path)->required();
  c_cert->add_option("--bound", bound)->required();
  limit_opts(c_cert);
  add_common(c_cert, flags);

  CLI::App* c_sc = app.add_subcommand("sc-check", "small-cancellation report");
  c_sc->add_option("file", in_path)->required();
  c_sc->add_option("--lambda", lambda_text, "strict target p/q");
  add_common(c_sc, flags);

  CLI::App* c_dehn = app.add_subcommand("dehn", "Dehn-reduce a word");
  c_dehn->add_option("file", in_path)->required();
  c_dehn->add_option("--word", word_text)->required();
  add_common(c_dehn, flags);

  CLI::App* c_rips = app.add_subcommand("rips", "Rips construction over q");
  c_rips->add_option("file", in_path)->required();
  rips_opts(c_rips);
  add_common(c_rips, flags);

  CLI::App* c_pipe = app.add_subcommand("pipeline", "theorem pipelines");
  c_pipe->add_option("kind", sub_kind)->required()->check(CLI::IsMember({"theorem-main"}));
  c_pipe->add_option("--q", in_path)->required();
  c_pipe->add_option("--bound", bound);
  limit_opts(c_pipe);
  rips_opts(c_pipe);
  add_common(c_pipe, flags);

  CLI::App* c_pair = app.add_subcommand("pair", "product pairs");
  c_pair->add_option("kind", sub_kind)->required()->check(CLI::IsMember({"gg"}));
  c_pair->add_option("--q", in_path)->required();
  c_pair->add_option("--b", second_path)->required();
  c_pair->add_option("--bound", bound);
  limit_opts(c_pair);
  rips_opts(c_pair);
  add_common(c_pair, flags);

  CLI::App* c_fibre = app.add_subcommand("fibre", "fibre product generators");
  c_fibre->add_option("--gamma", in_path, "rips output JSON")->required();
  add_common(c_fibre, flags);

  CLI::App* c_ns = app.add_subcommand("ns", "N-by-Z subgroup");
  c_ns->add_option("--gamma", in_path, "rips output JSON")->required();
  c_ns->add_option("--word", word_text)->required();
  add_common(c_ns, flags);

  CLI::App* c_fam = app.add_subcommand("family", "recursive family assembly");
  c_fam->add_option("kind", sub_kind)->required()->check(CLI::IsMember({"gn"}));
  c_fam->add_option("--seed", seed_name)->check(CLI::IsMember({"higman", "trivial"}));
  c_fam->add_option("--n", n_index);
  c_fam->add_option("--bound", bound);
  c_fam->add_flag("--no-oracle", no_oracle, "drop the seed nontriviality oracle");
  limit_opts(c_fam);
  rips_opts(c_fam);
  add_common(c_fam, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return 3;
  }

  PipelineOptions popts;
  popts.quotient_bound = bound;
  popts.rips = rips_params;
  popts.limits = limits_with(max_cosets, max_time_ms, max_nodes);

  try {
    if (*c_parse) {
      Presentation p = read_presentation_text(slurp(in_path));
      emit(flags.json() ? to_json(p).dump(2) : format_presentation(p),
           flags.out_path, out);
      return 0;
    }
    if (*c_h1) {
      InvariantFactors f = h1(read_presentation_text(slurp(in_path)));
      emit(flags.json() ? to_json(f).dump(2) : h1_text(f), flags.out_path, out);
      return 0;
    }
    if (*c_snf) {
      IntegerMatrix m = matrix_from_json(Json::parse(slurp(in_path)));
      SnfResult snf = smith_normal_form(m);
      if (flags.json()) {
        Json d = Json::array();
        for (const mpz_class& v : snf.diagonal) d.push_back(v.get_str());
        emit(Json{{"diagonal", std::move(d)}}.dump(2), flags.out_path, out);
      } else {
        std::string line;
        for (const mpz_class& v : snf.diagonal)
          line += (line.empty() ? "" : " ") + v.get_str();
        emit(line, flags.out_path, out);
      }
      return 0;
    }
    if (*c_tc) {
      Presentation p = read_presentation_text(slurp(in_path));
      std::vector<Word> sub = parse_word_list(subgroup_text, p.alphabet);
      TcResult r = todd_coxeter(p, sub, popts.limits,
                                strategy == "hlt" ? TcStrategy::hlt : TcStrategy::felsch);
      bool done = r.status == TcResult::Status::complete;
      if (flags.json()) {
        Json j{{"status", done ? "complete" : "exhausted"},
               {"cosets_reached", r.cosets_reached}};
        if (done) j["table"] = to_json(r.table);
        emit(j.dump(2), flags.out_path, out);
      } else {
        emit(done ? "index " + std::to_string(r.table.index)
                  : "exhausted after " + std::to_string(r.cosets_reached) + " cosets",
             flags.out_path, out);
      }
      return done ? 0 : 2;
    }
    if (*c_li) {
      Presentation p = read_presentation_text(slurp(in_path));
      LowIndexResult r = low_index_subgroups(p, max_index, popts.limits);
      bool done = r.status == LowIndexResult::Status::complete;
      if (flags.json()) {
        Json tables = Json::array();
        for (const CosetTable& t : r.tables) tables.push_back(to_json(t));
        emit(Json{{"status", done ? "complete" : "exhausted"},
                  {"count", r.tables.size()},
                  {"conjugacy_class", r.conjugacy_class},
                  {"tables", std::move(tables)}}
                 .dump(2),
             flags.out_path, out);
      } else {
        emit((done ? "" : "[exhausted] ") + std::to_string(r.tables.size()) +
                 " subgroups of index 2.." + std::to_string(max_index),
             flags.out_path, out);
      }
      return done ? 0 : 2;
    }
    if (*c_cert) {
      Presentation p = read_presentation_text(slurp(in_path));
      Certificate c = certify_no_finite_quotients(p, bound, popts.limits);
      emit(to_json(c).dump(2), flags.out_path, out);
      return exit_for(c);
    }
    if (*c_sc) {
      Presentation p = read_presentation_text(slurp(in_path));
      auto slash = lambda_text.find('/');
      if (slash == std::string::npos) throw Error("--lambda expects p/q");
      Rational target = Rational::of(std::stoll(lambda_text.substr(0, slash)),
                                     std::stoll(lambda_text.substr(slash + 1)));
      if (target.den <= 0 || target.num <= 0) throw Error("--lambda expects p/q > 0");
      CancellationReport r = sc_verify(p, target);
      emit(to_json(r).dump(2), flags.out_path, out);
      return r.passes ? 0 : 1;
    }
    if (*c_dehn) {
      Presentation p = read_presentation_text(slurp(in_path));
      DehnSolver solver(p);
      Word w = parse_word(word_text, p.alphabet);
      Word reduced = solver.reduce(w);
      if (flags.json()) {
        emit(Json{{"reduced", format_word(reduced, p.alphabet)},
                  {"trivial", reduced.empty()}}
                 .dump(2),
             flags.out_path, out);
      } else {
        emit(format_word(reduced, p.alphabet) +
                 (reduced.empty() ? "  (trivial)" : "  (nontrivial)"),
             flags.out_path, out);
      }
      return 0;
    }
    if (*c_rips) {
      Presentation q = read_presentation_text(slurp(in_path));
      RipsOutput r = rips_wise(q, rips_params);
      emit(to_json(r).dump(2), flags.out_path, out);
      return 0;
    }
    if (*c_pipe) {
      Presentation q = read_presentation_text(slurp(in_path));
      emit(to_json(theorem_main_pipeline(q, popts)).dump(2), flags.out_path, out);
      return 0;
    }
    if (*c_pair) {
      Presentation q = read_presentation_text(slurp(in_path));
      Presentation b = read_presentation_text(slurp(second_path));
      emit(to_json(goldstein_guralnick_pair(q, b, popts)).dump(2), flags.out_path, out);
      return 0;
    }
    if (*c_fibre) {
      RipsOutput r = rips_output_from_json(Json::parse(slurp(in_path)));
      emit(to_json(fibre_product_generators(r)).dump(2), flags.out_path, out);
      return 0;
    }
    if (*c_ns) {
      RipsOutput r = rips_output_from_json(Json::parse(slurp(in_path)));
      Word w = parse_word(word_text, r.gamma.alphabet);
      emit(to_json(nikolov_segal_subgroup(r, w)).dump(2), flags.out_path, out);
      return 0;
    }
    if (*c_fam) {
      SeedSequence seed =
          seed_name == "higman" ? constant_higman_seed() : constant_trivial_seed();
      if (no_oracle) seed.oracle.reset();
      emit(to_json(gn_family(seed, n_index, popts)).dump(2), flags.out_path, out);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisRefuted& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const RipsError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "no subcommand\n";
  return 3;
}

}  // namespace fpg
