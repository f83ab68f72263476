#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "immlab/immlab.hpp"

namespace immlab::cli {

enum class OutputMode { text, json };

struct Config {
  Caps caps{};
  std::uint64_t seed = 1;
  OutputMode output = OutputMode::text;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_input_error = 2;

inline constexpr const char* grammar =
    "usage:\n"
    "  immlab part info <lambda>\n"
    "  immlab part strips <lambda> <q> --horizontal|--vertical|--skew\n"
    "  immlab char value <lambda> <gamma>\n"
    "  immlab char table <n>\n"
    "  immlab lr <lambda> <alpha> <beta>\n"
    "  immlab imm eval <lambda> --matrix F\n"
    "  immlab per eval --matrix F [--ryser|--direct] [--stats]\n"
    "  immlab det eval --matrix F\n"
    "  immlab gadget build <lambda> [--row-index i] [--matrix A] --out F\n"
    "  immlab gadget verify <lambda> [--row-index i] --matrix F\n"
    "  immlab identity check <name|all> [--max-size n] [--seed s] [--json F]\n"
    "global options: --config F  --output text|json  --seed s\n"
    "                --stream-cap n --table-cap n --immanant-cap n --ryser-cap n\n"
    "environment:    IMMANANT_LAB_MAX_N overrides the immanant cap\n";

/// Layers a JSON config file onto `cfg`:
/// {"caps": {"stream_n":..,"table_n":..,"immanant_n":..,"ryser_n":..}, "seed":.., "output":"text"|"json"}
inline void apply_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::schema_error, "cannot open config " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::schema_error, std::string("config: ") + e.what());
  }
  try {
    if (doc.contains("caps")) {
      const auto& c = doc["caps"];
      if (c.contains("stream_n")) cfg.caps.stream_n = c["stream_n"].get<int>();
      if (c.contains("table_n")) cfg.caps.table_n = c["table_n"].get<int>();
      if (c.contains("immanant_n")) cfg.caps.immanant_n = c["immanant_n"].get<int>();
      if (c.contains("ryser_n")) cfg.caps.ryser_n = c["ryser_n"].get<int>();
    }
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("output")) {
      const auto mode = doc["output"].get<std::string>();
      if (mode != "text" && mode != "json") throw Error(Errc::schema_error, "config: output must be text or json");
      cfg.output = mode == "json" ? OutputMode::json : OutputMode::text;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::schema_error, std::string("config: ") + e.what());
  }
}

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

inline std::string show(const Partition& p) { return p.empty() ? "[]" : p.to_string(); }

inline void print_table(std::ostream& out, const CharacterTable& t) {
  const auto& classes = t.classes();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"class"}, sizes{"size"};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    header.push_back(classes[c].to_string());
    sizes.push_back(to_string(t.class_sizes()[c]));
  }
  cells.push_back(header);
  cells.push_back(sizes);
  for (std::size_t r = 0; r < t.irreducibles().size(); ++r) {
    std::vector<std::string> row{t.irreducibles()[r].to_string()};
    for (std::size_t c = 0; c < classes.size(); ++c) row.push_back(std::to_string(t.value(r, c)));
    cells.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0)
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << " |";
      else
        out << ' ' << std::right << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  }
}

}  // namespace detail

/// Executes one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 on a verification mismatch or failing identity, 2 on input errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact immanant, permanent and projection toolkit", "immlab"};
  app.require_subcommand(1);
  app.footer(grammar);
  app.fallthrough();

  std::string config_path, output_flag;
  std::optional<std::uint64_t> seed_flag;
  std::optional<int> stream_cap, table_cap, immanant_cap, ryser_cap;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--output", output_flag, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed_flag, "seed for sampled matrices");
  app.add_option("--stream-cap", stream_cap);
  app.add_option("--table-cap", table_cap);
  app.add_option("--immanant-cap", immanant_cap);
  app.add_option("--ryser-cap", ryser_cap);

  // part
  auto* part = app.add_subcommand("part", "partition utilities")->require_subcommand(1);
  std::string lambda_text, alpha_text, beta_text, gamma_text;
  auto* part_info = part->add_subcommand("info", "size, conjugate and separation");
  part_info->add_option("lambda", lambda_text)->required();
  auto* part_strips = part->add_subcommand("strips", "strip and skew-hook removals");
  int strip_q = 0;
  part_strips->add_option("lambda", lambda_text)->required();
  part_strips->add_option("q", strip_q)->required();
  bool horizontal = false, vertical = false, skew = false;
  auto* f_h = part_strips->add_flag("--horizontal", horizontal);
  auto* f_v = part_strips->add_flag("--vertical", vertical);
  auto* f_s = part_strips->add_flag("--skew", skew);
  f_h->excludes(f_v)->excludes(f_s);
  f_v->excludes(f_s);

  // char
  auto* chr = app.add_subcommand("char", "symmetric group characters")->require_subcommand(1);
  auto* char_value = chr->add_subcommand("value", "χ_λ at cycle type γ");
  char_value->add_option("lambda", lambda_text)->required();
  char_value->add_option("gamma", gamma_text)->required();
  auto* char_table = chr->add_subcommand("table", "full character table of S_n");
  int table_n = 0;
  char_table->add_option("n", table_n)->required();

  auto* lr = app.add_subcommand("lr", "Littlewood–Richardson coefficient c^λ_{α,β}");
  lr->add_option("lambda", lambda_text)->required();
  lr->add_option("alpha", alpha_text)->required();
  lr->add_option("beta", beta_text)->required();

  std::string matrix_path, out_path, json_path;
  auto* imm = app.add_subcommand("imm", "immanants")->require_subcommand(1);
  auto* imm_eval = imm->add_subcommand("eval", "im_λ of a matrix file");
  imm_eval->add_option("lambda", lambda_text)->required();
  imm_eval->add_option("--matrix", matrix_path)->required();

  auto* per = app.add_subcommand("per", "permanents")->require_subcommand(1);
  auto* per_eval = per->add_subcommand("eval", "permanent of a matrix file");
  per_eval->add_option("--matrix", matrix_path)->required();
  bool use_ryser = false, use_direct = false, stats = false;
  auto* f_r = per_eval->add_flag("--ryser", use_ryser);
  per_eval->add_flag("--direct", use_direct)->excludes(f_r);
  per_eval->add_flag("--stats", stats, "print Ryser operation counts");

  auto* det = app.add_subcommand("det", "determinants")->require_subcommand(1);
  auto* det_eval = det->add_subcommand("eval", "determinant of a matrix file");
  det_eval->add_option("--matrix", matrix_path)->required();

  auto* gadget = app.add_subcommand("gadget", "immanant-to-permanent projection")->require_subcommand(1);
  std::optional<int> row_index;
  auto* gadget_build = gadget->add_subcommand("build", "assemble G = diag(A, H..., E...)");
  gadget_build->add_option("lambda", lambda_text)->required();
  gadget_build->add_option("--row-index", row_index);
  gadget_build->add_option("--matrix", matrix_path, "source matrix A (sampled from the seed if omitted)");
  gadget_build->add_option("--out", out_path)->required();
  auto* gadget_verify = gadget->add_subcommand("verify", "check per(A) = im_λ(G)");
  gadget_verify->add_option("lambda", lambda_text)->required();
  gadget_verify->add_option("--row-index", row_index);
  gadget_verify->add_option("--matrix", matrix_path, "A (k×k) or an assembled G (|λ|×|λ|)")->required();

  auto* identity = app.add_subcommand("identity", "identity suites")->require_subcommand(1);
  auto* identity_check = identity->add_subcommand("check", "run an identity family");
  std::string identity_name;
  int max_size = 6;
  identity_check->add_option("name", identity_name)->required();
  identity_check->add_option("--max-size", max_size);
  identity_check->add_option("--seed", seed_flag);
  identity_check->add_option("--json", json_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << grammar;
    return exit_input_error;
  }

  try {
    Config cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (const char* env = std::getenv("IMMANANT_LAB_MAX_N"); env && *env) {
      try {
        cfg.caps.immanant_n = std::stoi(env);
      } catch (const std::exception&) {
        throw Error(Errc::schema_error, "IMMANANT_LAB_MAX_N must be an integer");
      }
    }
    if (stream_cap) cfg.caps.stream_n = *stream_cap;
    if (table_cap) cfg.caps.table_n = *table_cap;
    if (immanant_cap) cfg.caps.immanant_n = *immanant_cap;
    if (ryser_cap) cfg.caps.ryser_n = *ryser_cap;
    if (seed_flag) cfg.seed = *seed_flag;
    if (!output_flag.empty()) cfg.output = output_flag == "json" ? OutputMode::json : OutputMode::text;
    cfg.caps.validate();
    const bool as_json = cfg.output == OutputMode::json;
    using nlohmann::json;

    if (part_info->parsed()) {
      const auto lambda = parse_partition(lambda_text);
      const auto conj = conjugate(lambda);
      const auto sep = separation(lambda);
      if (as_json) {
        out << json{{"partition", lambda.to_string()}, {"size", lambda.size()},   {"length", lambda.length()},
                    {"width", lambda.width()},         {"conjugate", conj.to_string()},
                    {"separation", {{"k", sep.k}, {"indices", sep.indices}}}}
                   .dump()
            << '\n';
      } else {
        out << "size=" << lambda.size() << "\nlength=" << lambda.length() << "\nwidth=" << lambda.width()
            << "\nconjugate=" << conj.to_string() << "\nseparation k=" << sep.k << " at i=" << detail::join(sep.indices)
            << '\n';
      }
      return exit_ok;
    }

    if (part_strips->parsed()) {
      if (!horizontal && !vertical && !skew)
        throw Error(Errc::schema_error, "choose one of --horizontal, --vertical, --skew");
      const auto lambda = parse_partition(lambda_text);
      if (skew) {
        const auto hooks = skew_hook_removals(lambda, strip_q);
        json doc = json::array();
        for (const auto& h : hooks) {
          if (as_json)
            doc.push_back({{"remainder", h.remainder.to_string()}, {"rows", h.row_span}, {"sign", h.sign_exponent % 2 ? -1 : 1}});
          else
            out << detail::show(h.remainder) << " rows=" << h.row_span << " sign=" << (h.sign_exponent % 2 ? "-" : "+") << '\n';
        }
        if (as_json) out << doc.dump() << '\n';
      } else {
        const auto removals = horizontal ? horizontal_strip_removals(lambda, strip_q) : vertical_strip_removals(lambda, strip_q);
        json doc = json::array();
        for (const auto& mu : removals) {
          if (as_json)
            doc.push_back(mu.to_string());
          else
            out << detail::show(mu) << '\n';
        }
        if (as_json) out << doc.dump() << '\n';
      }
      return exit_ok;
    }

    if (char_value->parsed()) {
      const long long v = character(parse_partition(lambda_text), parse_partition(gamma_text));
      if (as_json)
        out << json{{"lambda", lambda_text}, {"gamma", gamma_text}, {"value", v}}.dump() << '\n';
      else
        out << v << '\n';
      return exit_ok;
    }

    if (char_table->parsed()) {
      const auto table = character_table(table_n, cfg.caps);
      if (as_json) {
        json doc{{"n", table_n}, {"classes", json::array()}, {"class_sizes", json::array()}, {"rows", json::array()}};
        for (std::size_t c = 0; c < table.classes().size(); ++c) {
          doc["classes"].push_back(table.classes()[c].to_string());
          doc["class_sizes"].push_back(to_string(table.class_sizes()[c]));
        }
        for (std::size_t r = 0; r < table.irreducibles().size(); ++r) {
          json values = json::array();
          for (std::size_t c = 0; c < table.classes().size(); ++c) values.push_back(table.value(r, c));
          doc["rows"].push_back({{"lambda", table.irreducibles()[r].to_string()}, {"values", values}});
        }
        out << doc.dump() << '\n';
      } else {
        detail::print_table(out, table);
      }
      return exit_ok;
    }

    if (lr->parsed()) {
      const long long c = lr_coefficient(parse_partition(lambda_text), parse_partition(alpha_text), parse_partition(beta_text));
      if (as_json)
        out << json{{"lambda", lambda_text}, {"alpha", alpha_text}, {"beta", beta_text}, {"value", c}}.dump() << '\n';
      else
        out << c << '\n';
      return exit_ok;
    }

    auto print_value = [&](const char* what, const Rational& v) {
      if (as_json)
        out << json{{what, to_string(v)}}.dump() << '\n';
      else
        out << to_string(v) << '\n';
    };

    if (imm_eval->parsed()) {
      print_value("imm", immanant_direct(parse_partition(lambda_text), load_matrix(matrix_path), cfg.caps));
      return exit_ok;
    }

    if (per_eval->parsed()) {
      const auto m = load_matrix(matrix_path);
      const bool ryser = use_ryser || (!use_direct && m.size() > 10);
      RyserStats rs;
      const Rational v = ryser ? permanent_ryser(m, cfg.caps, &rs) : permanent_direct(m, cfg.caps);
      if (as_json) {
        json doc{{"per", to_string(v)}, {"method", ryser ? "ryser" : "direct"}};
        if (stats && ryser) doc["stats"] = {{"additions", rs.additions}, {"multiplications", rs.multiplications}};
        out << doc.dump() << '\n';
      } else {
        out << to_string(v) << '\n';
        if (stats && ryser) out << "additions=" << rs.additions << " multiplications=" << rs.multiplications << '\n';
      }
      return exit_ok;
    }

    if (det_eval->parsed()) {
      print_value("det", determinant(load_matrix(matrix_path)));
      return exit_ok;
    }

    if (gadget_build->parsed()) {
      const auto lambda = parse_partition(lambda_text);
      const int i = row_index ? *row_index : default_row_index(lambda);
      const auto plan = plan_projection(lambda, i);
      RationalSampler rng(cfg.seed);
      const auto a = matrix_path.empty() ? rng.matrix(static_cast<std::size_t>(plan.k)) : load_matrix(matrix_path);
      const auto g = build_projection(plan, a);
      save_matrix(g, out_path);
      std::string blocks;
      for (const auto& b : plan.blocks) blocks += (blocks.empty() ? "" : ",") + to_string(b);
      if (as_json)
        out << json{{"lambda", lambda.to_string()}, {"i", i}, {"k", plan.k}, {"blocks", blocks}, {"out", out_path}}.dump()
            << '\n';
      else
        out << "lambda=" << lambda.to_string() << " i=" << i << " k=" << plan.k << " blocks=[" << blocks << "]\nwrote "
            << out_path << '\n';
      return exit_ok;
    }

    if (gadget_verify->parsed()) {
      const auto lambda = parse_partition(lambda_text);
      const int i = row_index ? *row_index : default_row_index(lambda);
      const auto plan = plan_projection(lambda, i);
      auto m = load_matrix(matrix_path);
      Matrix<Rational> a = m;
      if (m.size() != static_cast<std::size_t>(plan.k)) {
        if (m.size() != static_cast<std::size_t>(lambda.size()))
          throw Error(Errc::dimension_mismatch, "matrix must be k×k (A) or |λ|×|λ| (G); k = " + std::to_string(plan.k));
        a = Matrix<Rational>(static_cast<std::size_t>(plan.k));
        for (std::size_t r = 0; r < a.size(); ++r)
          for (std::size_t c = 0; c < a.size(); ++c) a(r, c) = m(r, c);
        if (build_projection(plan, a) != m)
          throw Error(Errc::schema_error, "matrix is not the projection of its leading " + std::to_string(plan.k) + "×" +
                                              std::to_string(plan.k) + " block for λ = " + lambda.to_string());
      }
      const auto report = verify_projection(lambda, i, a, cfg.caps);
      if (as_json)
        out << report_to_json(report).dump() << '\n';
      else
        out << "lambda=" << report.lambda.to_string() << " i=" << report.row_index << " k=" << report.k
            << "\nper(A)=" << to_string(report.per) << "\nim(G)=" << to_string(report.imm)
            << "\nequal: " << (report.equal ? "true" : "false") << '\n';
      return report.equal ? exit_ok : exit_mismatch;
    }

    if (identity_check->parsed()) {
      SuiteOptions opts{max_size, cfg.seed, cfg.caps};
      const auto reports = run_identity(identity_name, opts);
      int failed = 0;
      json cases = json::array();
      for (const auto& r : reports) {
        if (!r.pass) ++failed;
        out << (r.pass ? "PASS " : "FAIL ") << r.name << ' ' << r.parameters << '\n';
        if (!json_path.empty())
          cases.push_back({{"name", r.name}, {"parameters", r.parameters}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
      }
      out << reports.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
      if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw Error(Errc::schema_error, "cannot write " + json_path);
        f << json{{"identity", identity_name},
                  {"max_size", max_size},
                  {"seed", cfg.seed},
                  {"passed", reports.size() - static_cast<std::size_t>(failed)},
                  {"failed", failed},
                  {"cases", cases}}
                 .dump(2)
          << '\n';
      }
      return failed == 0 ? exit_ok : exit_mismatch;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::internal ? exit_mismatch : exit_input_error;
  }
  err << grammar;
  return exit_input_error;
}

}  // namespace immlab::cli
