#include "staircase/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "staircase/errors.hpp"
#include "staircase/partition.hpp"
#include "staircase/poset.hpp"
#include "staircase/splitting.hpp"
#include "staircase/tableau.hpp"
#include "staircase/tropical.hpp"

namespace staircase {

namespace {

std::string join(const std::vector<int>& values, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

CVector parse_cvec(const std::string& text, int k) {
  std::vector<long long> entries;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    std::size_t used = 0;
    entries.push_back(std::stoll(field, &used));
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
      ++used;
    if (used != field.size())
      throw std::invalid_argument("invalid vector entry: '" + field + "'");
  }
  if (entries.empty()) throw std::invalid_argument("empty vector");
  if (k != 0 && k != static_cast<int>(entries.size()))
    throw std::invalid_argument("k must equal the number of vector entries");
  return CVector(std::move(entries));
}

struct VerifyStats {
  long long cases = 0;
  long long mismatches = 0;
};

void report_case(std::ostream& out, const std::string& label,
                 const BigInt& closed, const BigInt& recurrence,
                 VerifyStats& stats) {
  ++stats.cases;
  const bool ok = closed == recurrence;
  if (!ok) ++stats.mismatches;
  out << label << " closed " << closed.str() << " recurrence "
      << recurrence.str() << (ok ? " ok" : " MISMATCH") << "\n";
}

BigInt alpha_of(std::vector<long long> entries) {
  return count_maximal_chains(CVector(std::move(entries)));
}

int run_verify(const std::string& family, long long z_max, int k_max,
               long long entry_min, std::ostream& out) {
  VerifyStats stats;
  auto label = [](std::initializer_list<std::pair<const char*, long long>>
                      params) {
    std::ostringstream text;
    bool first = true;
    for (const auto& [name, value] : params) {
      if (!first) text << ' ';
      first = false;
      text << name << '=' << value;
    }
    return text.str();
  };

  if (family == "onecol") {
    const long long zm = z_max > 0 ? z_max : 8;
    const int km = k_max > 0 ? k_max : 7;
    for (int k = 2; k <= km; ++k)
      for (long long z = 0; z <= zm; ++z) {
        std::vector<long long> entries(static_cast<std::size_t>(k), 0);
        entries[0] = z;
        report_case(out, "onecol " + label({{"k", k}, {"z", z}}),
                    alpha_one_column(k, z), alpha_of(std::move(entries)),
                    stats);
      }
  } else if (family == "trigonal") {
    const long long lo = entry_min < 0 ? entry_min : -6;
    for (long long a = lo; a <= 0; ++a)
      for (long long b = a + 1; b <= 0; ++b)
        for (long long c = b + 1; c <= 0; ++c) {
          const SplittingType mu({a, b, c});
          report_case(
              out, "trigonal " + label({{"mu1", a}, {"mu2", b}, {"mu3", c}}),
              alpha_trigonal(mu), count_maximal_chains(c_vector(mu)), stats);
        }
  } else if (family == "four") {
    const long long zm = z_max > 0 ? z_max : 8;
    for (long long z = 1; z <= zm; ++z) {
      report_case(out, "four " + label({{"z", z}, {"variant", 0}}),
                  alpha_gonality_four(z), alpha_of({z, z, 0, 0}), stats);
      report_case(out, "four " + label({{"z", z}, {"variant", 1}}),
                  alpha_gonality_four(z), alpha_of({z + 1, z - 1, 0, 0}),
                  stats);
    }
  } else if (family == "fibonacci") {
    const long long zm = z_max > 0 ? z_max : 7;
    for (long long z = 1; z <= zm; ++z) {
      report_case(out, "fibonacci " + label({{"z", z}, {"variant", 0}}),
                  alpha_gonality_five(z, false), alpha_of({z, z, 0, 0, 0}),
                  stats);
      report_case(out, "fibonacci " + label({{"z", z}, {"variant", 1}}),
                  alpha_gonality_five(z, true),
                  alpha_of({z + 2, z - 1, 0, 0, 0}), stats);
    }
  } else if (family == "six2") {
    const long long zm = z_max > 0 ? z_max : 6;
    for (long long z = 1; z <= zm; ++z) {
      report_case(out, "six2 " + label({{"z", z}, {"variant", 0}}),
                  alpha_gonality_six_jump2(z, 0),
                  alpha_of({z, z, 0, 0, 0, 0}), stats);
      if (z >= 2)
        report_case(out, "six2 " + label({{"z", z}, {"variant", 1}}),
                    alpha_gonality_six_jump2(z, 1),
                    alpha_of({z + 2, z - 2, 0, 0, 0, 0}), stats);
      report_case(out, "six2 " + label({{"z", z}, {"variant", 2}}),
                  alpha_gonality_six_jump2(z, 2),
                  alpha_of({z + 1, 0, 0, z - 1, 0, 0}), stats);
    }
  } else if (family == "six3") {
    const long long zm = z_max > 0 ? z_max : 5;
    for (long long z = 1; z <= zm; ++z) {
      report_case(out, "six3 " + label({{"z", z}, {"variant", 0}}),
                  alpha_gonality_six_jump3(z, 0),
                  alpha_of({z, z, z, 0, 0, 0}), stats);
      if (z >= 2)
        report_case(out, "six3 " + label({{"z", z}, {"variant", 1}}),
                    alpha_gonality_six_jump3(z, 1),
                    alpha_of({z + 1, z + 1, z - 2, 0, 0, 0}), stats);
      report_case(out, "six3 " + label({{"z", z}, {"variant", 2}}),
                  alpha_gonality_six_jump3(z, 2),
                  alpha_of({z + 2, z - 1, z - 1, 0, 0, 0}), stats);
      report_case(out, "six3 " + label({{"z", z}, {"variant", 3}}),
                  alpha_gonality_six_jump3(z, 3),
                  alpha_of({z - 1, 0, z, 0, z + 1, 0}), stats);
    }
  } else if (family == "onerowonecol") {
    const long long zm = z_max > 0 ? z_max : 4;
    const int km = k_max > 0 ? k_max : 6;
    for (int k = 3; k <= km; ++k)
      for (long long z2 = 0; z2 <= zm; ++z2)
        for (long long z1 = z2; z1 <= zm; ++z1)
          for (long long i = 0; i <= k - 2; ++i) {
            if (i > 0 && z2 < 1) continue;
            for (long long j = 0; j <= k - 1; ++j) {
              if (!one_row_one_column_applicable(k, z1, z2, i, j)) continue;
              const CVector v = one_row_one_column_vector(k, z1, z2, i, j);
              report_case(out,
                          "onerowonecol " + label({{"k", k},
                                                   {"z1", z1},
                                                   {"z2", z2},
                                                   {"i", i},
                                                   {"j", j}}),
                          alpha_one_row_one_column(k, z1, z2, i),
                          count_maximal_chains(v), stats);
            }
          }
  } else if (family == "classic") {
    for (long long rows = 1; rows <= 4; ++rows)
      for (long long cols = rows; cols <= 4; ++cols) {
        std::vector<long long> shape(static_cast<std::size_t>(rows), cols);
        const int k = static_cast<int>(rows + cols);
        report_case(out, "classic " + label({{"rows", rows}, {"cols", cols}}),
                    alpha_rectangle(rows, cols),
                    count_maximal_chains(c_vector(Partition(shape), k)),
                    stats);
      }
  } else if (family == "catalan") {
    const int km = k_max > 0 ? k_max : 7;
    for (int k = 3; k <= km; ++k) {
      std::vector<long long> entries{-3};
      for (int t = 0; t < k - 3; ++t) entries.push_back(-2);
      entries.push_back(0);
      entries.push_back(0);
      const SplittingType mu(entries);
      report_case(out, "catalan " + label({{"k", k}}), alpha_catalan_type(k),
                  count_maximal_chains(c_vector(mu)), stats);
    }
  } else if (family == "quadric") {
    for (int k = 4; k <= 6; ++k) {
      BigInt total = 2;
      for (int i = 0; i <= k - 4; ++i) {
        std::vector<long long> entries{-3, -3};
        for (int t = 0; t < i; ++t) entries.push_back(-2);
        for (int t = 0; t < k - 4 - i; ++t) entries.push_back(-1);
        entries.push_back(0);
        entries.push_back(0);
        total += count_maximal_chains(c_vector(SplittingType(entries)));
      }
      report_case(out, "quadric " + label({{"k", k}}),
                  2 * rank4_quadric_count(k), total, stats);
    }
  } else {
    throw std::invalid_argument("unknown verify family: " + family);
  }

  out << "cases " << stats.cases << " mismatches " << stats.mismatches << "\n";
  return stats.mismatches == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact toolkit for staircase partitions, chain counts, and "
               "loop-chain splitting loci"};
  app.require_subcommand(1);

  std::string mu_text;
  std::string cvec_text;
  int k = 0;
  long long genus = 0;
  std::string format;
  std::string input_path;
  int alphabet = 0;
  bool saturated = false;
  long long max_nodes = 200000;
  std::string max_chains = "1000000";
  long long max_boxes = 16;
  std::string max_tori = "100000";
  std::string family;
  long long z_max = 0;
  int k_max = 0;
  long long entry_min = 0;

  CLI::App* cmd_lambda = app.add_subcommand(
      "lambda", "Staircase partition, column-height vector, and magnitude of "
                "a splitting type");
  cmd_lambda->add_option("--mu", mu_text, "splitting type, e.g. --mu=-3,-1,1")
      ->required();
  cmd_lambda->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_count =
      app.add_subcommand("count", "Number of maximal chains below a vector");
  CLI::Option* count_mu =
      cmd_count->add_option("--mu", mu_text, "splitting type");
  CLI::Option* count_cvec =
      cmd_count->add_option("--cvec", cvec_text, "column-height vector");
  cmd_count->add_option("--k", k, "modulus (must match the vector length)")
      ->needs(count_cvec);
  count_mu->excludes(count_cvec);

  CLI::App* cmd_hasse = app.add_subcommand(
      "hasse", "Order ideal below a vector as a labeled diagram");
  CLI::Option* hasse_mu =
      cmd_hasse->add_option("--mu", mu_text, "splitting type");
  CLI::Option* hasse_cvec =
      cmd_hasse->add_option("--cvec", cvec_text, "column-height vector");
  cmd_hasse->add_option("--k", k, "modulus")->needs(hasse_cvec);
  hasse_mu->excludes(hasse_cvec);
  cmd_hasse->add_option("--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  cmd_hasse->add_option("--max-nodes", max_nodes, "node guard");

  CLI::App* cmd_chains =
      app.add_subcommand("chains", "Enumerate maximal chains below a vector");
  CLI::Option* chains_mu =
      cmd_chains->add_option("--mu", mu_text, "splitting type");
  CLI::Option* chains_cvec =
      cmd_chains->add_option("--cvec", cvec_text, "column-height vector");
  cmd_chains->add_option("--k", k, "modulus")->needs(chains_cvec);
  chains_mu->excludes(chains_cvec);
  cmd_chains->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_chains->add_option("--max-chains", max_chains, "chain guard");

  CLI::App* cmd_tableaux = app.add_subcommand(
      "tableaux", "Enumerate uniform or saturated tableaux on the staircase");
  cmd_tableaux->add_option("--mu", mu_text, "splitting type")->required();
  cmd_tableaux->add_option("--genus,-g", genus, "alphabet bound")->required();
  cmd_tableaux->add_flag("--saturated", saturated,
                         "enumerate saturated tableaux only");
  cmd_tableaux->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_tableaux->add_option("--max-boxes", max_boxes,
                           "box guard for uniform enumeration");
  cmd_tableaux->add_option("--max-chains", max_chains,
                           "chain guard for saturated enumeration");

  CLI::App* cmd_saturate =
      app.add_subcommand("saturate", "Saturate a tableau read from a file");
  cmd_saturate->add_option("--input", input_path, "tableau file")->required();
  cmd_saturate->add_option("--k", k, "modulus")->required();
  cmd_saturate->add_option("--alphabet", alphabet,
                           "alphabet bound (default: largest symbol)");
  cmd_saturate->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_locus = app.add_subcommand(
      "locus", "Tori of the splitting-type locus on a chain of loops");
  cmd_locus->add_option("--mu", mu_text, "splitting type")->required();
  cmd_locus->add_option("--genus,-g", genus, "genus of the chain")->required();
  cmd_locus->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_locus->add_option("--max-tori", max_tori, "torus guard");

  CLI::App* cmd_connect = app.add_subcommand(
      "connect", "Codimension-one connectivity of the splitting-type locus");
  cmd_connect->add_option("--mu", mu_text, "splitting type")->required();
  cmd_connect->add_option("--genus,-g", genus, "genus of the chain")
      ->required();
  cmd_connect->add_option("--max-tori", max_tori, "torus guard");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Check a closed-form chain-count family against the "
                "recurrence");
  cmd_verify
      ->add_option("--family", family,
                   "onecol|trigonal|four|fibonacci|six2|six3|onerowonecol|"
                   "classic|catalan|quadric")
      ->required()
      ->check(CLI::IsMember({"onecol", "trigonal", "four", "fibonacci", "six2",
                             "six3", "onerowonecol", "classic", "catalan",
                             "quadric"}));
  cmd_verify->add_option("--z-max", z_max, "parameter bound");
  cmd_verify->add_option("--k-max", k_max, "modulus bound");
  cmd_verify->add_option("--entry-min", entry_min,
                         "smallest splitting-type entry (trigonal)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("staircase");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if ((app.got_subcommand(cmd_count) || app.got_subcommand(cmd_hasse) ||
       app.got_subcommand(cmd_chains)) &&
      mu_text.empty() && cvec_text.empty()) {
    err << "usage error: one of --mu or --cvec is required\n";
    return 2;
  }

  try {
    auto resolve_vector = [&]() -> CVector {
      if (!mu_text.empty()) return c_vector(parse_splitting_type(mu_text));
      if (cvec_text.empty())
        throw std::invalid_argument("one of --mu or --cvec is required");
      return parse_cvec(cvec_text, k);
    };

    if (app.got_subcommand(cmd_lambda)) {
      const SplittingType mu = parse_splitting_type(mu_text);
      const Partition shape = staircase(mu);
      const CVector c = c_vector(mu);
      if (format == "json") {
        nlohmann::json doc;
        doc["mu"] = mu.entries();
        doc["k"] = mu.k();
        doc["lambda"] = shape.rows();
        doc["cvec"] = c.entries();
        doc["rho"] = c.sum();
        doc["magnitude"] = magnitude(mu);
        out << doc.dump(2) << "\n";
      } else {
        out << "lambda " << shape.to_string() << "\n";
        out << "cvec " << c.to_string() << "\n";
        out << "rho " << c.sum() << "\n";
        out << "magnitude " << magnitude(mu) << "\n";
      }
    } else if (app.got_subcommand(cmd_count)) {
      out << count_maximal_chains(resolve_vector()).str() << "\n";
    } else if (app.got_subcommand(cmd_hasse)) {
      const HasseDiagram h = build_hasse(resolve_vector(), max_nodes);
      if (format == "json")
        out << hasse_to_json(h).dump(2) << "\n";
      else
        out << hasse_to_dot(h);
    } else if (app.got_subcommand(cmd_chains)) {
      const CVector c = resolve_vector();
      const BigInt guard(max_chains);
      if (format == "json") {
        nlohmann::json doc;
        doc["k"] = c.k();
        doc["cvec"] = c.entries();
        doc["chains"] = nlohmann::json::array();
        for_each_maximal_chain(
            c,
            [&doc](const MaximalChain& chain) {
              doc["chains"].push_back(chain.residues);
            },
            guard);
        out << doc.dump(2) << "\n";
      } else {
        for_each_maximal_chain(
            c,
            [&out](const MaximalChain& chain) {
              out << join(chain.residues, ',') << "\n";
            },
            guard);
      }
    } else if (app.got_subcommand(cmd_tableaux)) {
      const SplittingType mu = parse_splitting_type(mu_text);
      const Partition shape = staircase(mu);
      const int g = static_cast<int>(genus);
      std::vector<Tableau> found;
      if (saturated) {
        const BigInt chain_guard(max_chains);
        // Saturated tableaux = chosen symbols + maximal chain.
        std::vector<int> subset(static_cast<std::size_t>(magnitude(mu)));
        std::function<void(int, int)> pick = [&](int need, int top) {
          if (need == 0) {
            for_each_maximal_chain(
                c_vector(mu),
                [&](const MaximalChain& chain) {
                  found.push_back(phi(subset, chain, g));
                },
                chain_guard);
            return;
          }
          for (int value = need; value <= top; ++value) {
            subset[static_cast<std::size_t>(need - 1)] = value;
            pick(need - 1, value - 1);
          }
        };
        if (static_cast<long long>(subset.size()) <= genus)
          pick(static_cast<int>(subset.size()), g);
      } else {
        for_each_uniform(
            shape, mu.k(), g,
            [&found](const Tableau& t) { found.push_back(t); }, max_boxes);
      }
      if (format == "json") {
        nlohmann::json doc;
        doc["shape"] = shape.rows();
        doc["k"] = mu.k();
        doc["alphabet"] = g;
        doc["saturated"] = saturated;
        doc["count"] = found.size();
        doc["tableaux"] = nlohmann::json::array();
        for (const Tableau& t : found) doc["tableaux"].push_back(t.fill());
        out << doc.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < found.size(); ++i) {
          if (i > 0) out << "\n";
          out << to_text(found[i]);
        }
        out << "count " << found.size() << "\n";
      }
    } else if (app.got_subcommand(cmd_saturate)) {
      std::ifstream in(input_path);
      if (!in)
        throw std::invalid_argument("cannot read tableau file: " + input_path);
      std::ostringstream text;
      text << in.rdbuf();
      const Tableau t = parse_tableau(text.str(), alphabet);
      const Tableau result = saturate(t, k);
      if (format == "json") {
        nlohmann::json doc;
        doc["tableau"] = result.fill();
        doc["k"] = k;
        doc["alphabet"] = result.alphabet();
        out << doc.dump(2) << "\n";
      } else {
        out << to_text(result);
      }
    } else if (app.got_subcommand(cmd_locus)) {
      const SplittingType mu = parse_splitting_type(mu_text);
      const ChainOfLoops graph(genus, mu.k());
      const SplittingLocus locus = splitting_locus(mu, graph, BigInt(max_tori));
      if (format == "json") {
        out << locus_to_json(locus).dump(2) << "\n";
      } else {
        out << "mu " << mu.to_string() << "\n";
        out << "k " << mu.k() << "\n";
        out << "genus " << genus << "\n";
        out << "degree " << degree(mu, genus) << "\n";
        out << "magnitude " << magnitude(mu) << "\n";
        const auto dim = locus_dimension(locus);
        if (dim)
          out << "dimension " << *dim << "\n";
        else
          out << "dimension empty\n";
        if (genus == magnitude(mu))
          out << "cardinality " << locus_cardinality(locus).str() << "\n";
        out << "tori " << locus.tori.size() << "\n";
        for (std::size_t i = 0; i < locus.tori.size(); ++i) {
          out << "torus " << i << " constraints";
          for (const auto& [symbol, residue] :
               locus.tori[i].second.constraints())
            out << " " << symbol << ":" << residue;
          out << "\n";
        }
      }
    } else if (app.got_subcommand(cmd_connect)) {
      const SplittingType mu = parse_splitting_type(mu_text);
      const ChainOfLoops graph(genus, mu.k());
      const SplittingLocus locus = splitting_locus(mu, graph, BigInt(max_tori));
      out << (connectivity_check(locus) ? "connected true" : "connected false")
          << "\n";
    } else if (app.got_subcommand(cmd_verify)) {
      return run_verify(family, z_max, k_max, entry_min, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace staircase
