#include "spshuffle/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "spshuffle/expr.hpp"
#include "spshuffle/oracle.hpp"
#include "spshuffle/series.hpp"
#include "spshuffle/trees.hpp"
#include "spshuffle/verify.hpp"

namespace spshuffle {
namespace {

const char* const kSchema = R"({"hasse":1,"vector":1,"polynomial":1,"factorization":1,"shuffle":1})";

struct Input {
  std::string expr, rpn, hasse, tree, format, value;

  void add_to(CLI::App* app) {
    auto* g = app->add_option_group("input", "exactly one input");
    g->add_option("--expr", expr, "infix expression, '*' series binds tighter than '|'");
    g->add_option("--rpn", rpn, "postfix labels with U (parallel) and O (series)");
    g->add_option("--hasse", hasse, "Hasse JSON file, '-' for stdin");
    g->add_option("--tree", tree, "rooted tree, its vertex poset is used");
    g->add_option("--input", value, "input text for --format");
    app->add_option("--format", format, "format of --input")
        ->check(CLI::IsMember({"expr", "rpn", "hasse-json", "tree"}));
  }

  // Returns the poset and, for infix input, the parsed expression.
  std::pair<Poset, std::optional<PosetExpr>> load(std::istream& in) const {
    std::vector<std::pair<std::string, std::string>> given;
    if (!expr.empty()) given.emplace_back("expr", expr);
    if (!rpn.empty()) given.emplace_back("rpn", rpn);
    if (!hasse.empty()) given.emplace_back("hasse-json", hasse);
    if (!tree.empty()) given.emplace_back("tree", tree);
    if (!value.empty()) {
      if (format.empty()) throw CLI::ValidationError("--input needs --format");
      given.emplace_back(format, value);
    }
    if (given.size() != 1)
      throw CLI::ValidationError("give exactly one of --expr, --rpn, --hasse, --tree, --input");
    return parse_input(given[0].first, given[0].second, in);
  }

  static std::pair<Poset, std::optional<PosetExpr>> parse_input(
      const std::string& kind, const std::string& text, std::istream& in) {
    if (kind == "expr") {
      PosetExpr e = parse_expr(text);
      return {expr_to_poset(e), e};
    }
    if (kind == "rpn") return {expr_to_poset(parse_rpn(std::string_view(text))), std::nullopt};
    if (kind == "tree") return {vertex_poset(parse_tree(text)), std::nullopt};
    nlohmann::json j;
    if (text == "-") {
      j = nlohmann::json::parse(in);
    } else {
      std::ifstream file(text);
      if (!file) throw Error("cannot open '" + text + "'");
      j = nlohmann::json::parse(file);
    }
    return {poset_from_hasse_json(j), std::nullopt};
  }
};

const std::map<std::string, SeriesForm> kForms{
    {"shuffle", SeriesForm::Shuffle},     {"strict", SeriesForm::Strict},
    {"weak", SeriesForm::Weak},           {"weaksurj", SeriesForm::WeakSurjective},
    {"rdd", SeriesForm::RightDD},         {"ldd", SeriesForm::LeftDD}};

std::vector<std::string> form_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : kForms) names.push_back(k);
  return names;
}

ShuffleVector vector_of(const Poset& p, const std::optional<PosetExpr>& e) {
  if (e) return evaluate(*e);
  return shuffle_vector(p);
}

DVector d_vector_of(const Poset& p, const std::optional<PosetExpr>& e, bool allow_oracle) {
  if (!allow_oracle || is_series_parallel(p)) return to_d_vector(vector_of(p, e), p.size());
  return oracle_d_vector(p);
}

nlohmann::json integers_json(const std::vector<Integer>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

std::string integers_text(const std::vector<Integer>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ']';
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Shuffle series of series-parallel posets"};
  app.name("spshuffle");
  app.require_subcommand(0, 1);
  bool schema = false;
  app.add_flag("--schema", schema, "print JSON schema versions");

  Input input;
  bool json = false;
  std::uint64_t n = 0;
  std::string kind = "shuffle", basis;
  std::size_t terms = 10;

  auto* series = app.add_subcommand("series", "shuffle vector of a poset");
  input.add_to(series);
  series->add_option("--basis", basis, "also expand one of the six series")
      ->check(CLI::IsMember(form_names()));
  series->add_option("--terms", terms, "highest power in the expansion");
  series->add_flag("--json", json);

  auto* count = app.add_subcommand("count", "closed-form count at --n");
  input.add_to(count);
  count->add_option("--kind", kind)->check(CLI::IsMember(form_names()));
  count->add_option("--n", n)->required();
  count->add_flag("--json", json);

  auto* fact = app.add_subcommand("factorize", "canonical SP factorization");
  input.add_to(fact);
  fact->add_flag("--json", json);

  std::string a_text, b_text, pair_format = "expr";
  auto* dopp = app.add_subcommand("doppelganger", "compare two shuffle vectors");
  dopp->add_option("--a", a_text)->required();
  dopp->add_option("--b", b_text)->required();
  dopp->add_option("--format", pair_format)
      ->check(CLI::IsMember({"expr", "rpn", "hasse-json", "tree"}));
  dopp->add_flag("--json", json);

  bool list = false;
  std::size_t cap = kShuffleCap;
  auto* oracle = app.add_subcommand("oracle", "brute-force counts");
  input.add_to(oracle);
  oracle->add_option("--n", n)->required();
  oracle->add_option("--cap", cap, "shuffle enumeration cap on |P| + n");
  oracle->add_flag("--list", list, "print every shuffle as Hasse JSON");
  oracle->add_flag("--json", json);

  std::string tree_text;
  bool do_reduce = false;
  auto* trees = app.add_subcommand("tree-shuffles", "shuffles of a tree with a linear tree");
  trees->add_option("--tree", tree_text)->required();
  trees->add_option("--n", n)->required();
  trees->add_flag("--reduce", do_reduce, "reduce the tree first");
  trees->add_flag("--json", json);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "closed forms against the oracle");
  verify->add_option("--max-points", vopt.max_points);
  verify->add_option("--max-n", vopt.max_n);
  verify->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (schema) {
      out << kSchema << '\n';
      return kExitOk;
    }
    if (app.got_subcommand(series)) {
      auto [p, e] = input.load(in);
      const ShuffleVector v = vector_of(p, e);
      nlohmann::json j = to_json(v, p.size());
      std::vector<Integer> expansion;
      if (!basis.empty())
        expansion = expand_coefficients(kForms.at(basis), to_d_vector(v, p.size()), terms);
      if (json) {
        if (!basis.empty()) j["expansion"] = {{"form", basis}, {"coefficients", integers_json(expansion)}};
        out << j.dump() << '\n';
      } else {
        out << to_coefficient_map(v) << '\n' << to_string(v) << '\n';
        if (!p.empty()) {
          const DVector d = to_d_vector(v, p.size());
          out << "d = " << to_string(d) << '\n'
              << "strict = " << to_string(strict_polynomial(d)) << '\n';
        }
        if (!basis.empty()) out << basis << ": " << integers_text(expansion) << '\n';
      }
      return kExitOk;
    }
    if (app.got_subcommand(count)) {
      auto [p, e] = input.load(in);
      Integer result;
      if (kind == "shuffle") {
        result = count_shuffles(vector_of(p, e), n);
      } else {
        const bool any_poset = kind == "strict" || kind == "weak" || kind == "weaksurj";
        const DVector d = d_vector_of(p, e, any_poset);
        if (kind == "strict") result = count_strict(d, n);
        if (kind == "weak") result = count_weak(d, n);
        if (kind == "weaksurj") result = count_weak_surjective(d, n);
        if (kind == "rdd") result = count_right_dd(d, n);
        if (kind == "ldd") result = count_left_dd(d, n);
      }
      if (json)
        out << nlohmann::json{{"kind", kind}, {"n", n}, {"count", integer_to_json(result)}}.dump()
            << '\n';
      else
        out << result << '\n';
      return kExitOk;
    }
    if (app.got_subcommand(fact)) {
      auto [p, e] = input.load(in);
      const FactorizationTree t = factorize(p);
      if (!json) out << to_text(t);
      out << to_json(t).dump() << '\n';
      return kExitOk;
    }
    if (app.got_subcommand(dopp)) {
      auto load = [&](const std::string& text) {
        auto [p, e] = Input::parse_input(pair_format, text, in);
        return vector_of(p, e);
      };
      const ShuffleVector a = load(a_text), b = load(b_text);
      const bool same = is_doppelganger(a, b);
      if (json)
        out << nlohmann::json{{"doppelganger", same},
                              {"a", to_json(a, a.max_degree())},
                              {"b", to_json(b, b.max_degree())}}
                   .dump()
            << '\n';
      else
        out << (same ? "equal" : "different") << '\n';
      return kExitOk;
    }
    if (app.got_subcommand(oracle)) {
      auto [p, e] = input.load(in);
      const auto shuffles = enumerate_colimit_shuffles(p, n, cap);
      if (list) {
        for (const auto& a : shuffles) out << to_json(a, p).dump() << '\n';
        return kExitOk;
      }
      Integer rdd = 0, ldd = 0;
      for (const auto& a : shuffles) {
        if (is_right_deck_divider(a, n)) rdd += 1;
        if (is_left_deck_divider(a)) ldd += 1;
      }
      std::vector<std::pair<std::string, Integer>> rows{
          {"strict maps", count_monotone_maps(p, n, MapMode::Strict)},
          {"weak maps", count_monotone_maps(p, n, MapMode::Weak)},
          {"strict surjective maps", count_monotone_maps(p, n, MapMode::StrictSurjective)},
          {"weak surjective maps", count_monotone_maps(p, n, MapMode::WeakSurjective)},
          {"shuffles", Integer(static_cast<std::uint64_t>(shuffles.size()))},
          {"right deck-divider shuffles", rdd},
          {"left deck-divider shuffles", ldd},
          {"lattice points", lattice_points(p, n)}};
      std::optional<DVector> d;
      if (p.size() <= kOracleDVectorCap) d = oracle_d_vector(p);
      if (json) {
        nlohmann::json j{{"points", p.size()}, {"n", n}};
        if (d) j["d"] = integers_json(d->d);
        for (const auto& [name, v] : rows) j[name] = integer_to_json(v);
        out << j.dump() << '\n';
      } else {
        out << "points: " << p.size() << "\nn: " << n << '\n';
        if (d) out << "d = " << to_string(*d) << '\n';
        for (const auto& [name, v] : rows) out << name << ": " << v << '\n';
      }
      return kExitOk;
    }
    if (app.got_subcommand(trees)) {
      RootedTree t = parse_tree(tree_text);
      if (do_reduce) t = reduce(t);
      const Integer shuffles = count_tree_shuffles(t, n);
      const Integer dendroidal = dendroidal_count(t, n);
      if (json)
        out << nlohmann::json{{"tree", to_string(t)},
                              {"n", n},
                              {"shuffles", integer_to_json(shuffles)},
                              {"dendroidal", integer_to_json(dendroidal)}}
                   .dump()
            << '\n';
      else
        out << "shuffles: " << shuffles << "\ndendroidal: " << dendroidal << '\n';
      return kExitOk;
    }
    if (app.got_subcommand(verify)) {
      const VerifyReport report = run_verification(vopt);
      out << (json ? report.to_json().dump() + "\n" : report.table());
      return report.ok() ? kExitOk : kExitVerificationFailed;
    }
    out << app.help();
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotSeriesParallel& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotSeriesParallel;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace spshuffle
