#include "dirac/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int usage_error = 2;

struct Options {
  std::string suite;
  std::optional<int> weight;
  int truncation = 40;
  std::string format = "text";
  std::string out;
};

std::string suffix(int w, bool many) { return many ? " [weight " + std::to_string(w) + "]" : ""; }

dirac::Report relabel(dirac::Report r, const std::string& tag) {
  if (tag.empty()) return r;
  dirac::Report out;
  for (const auto& c : r.checks()) {
    if (c.status == dirac::Status::skipped) {
      out.skip(c.suite, c.check + tag, c.details, c.paper_anchor);
    } else {
      out.add(c.suite, c.check + tag, c.status == dirac::Status::pass, c.details, c.paper_anchor);
    }
  }
  return out;
}

int emit(const Options& o, const dirac::Report& r, const std::vector<dirac::TableRow>* rows) {
  const std::string text = o.format == "json" ? dirac::render_json(r, rows) : dirac::render_text(r, rows);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 1;
    }
    f << text;
  }
  return r.ok() ? 0 : 1;
}

bool even_weight(const std::optional<int>& w, const std::string& command) {
  if (w && *w >= 0 && *w % 2 == 0) return true;
  std::cerr << command << ": --weight must be a nonnegative even integer\n";
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Dirac operator identities on the sl(2) transitive triple"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Write the report to a file");
  };

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", o.suite, "all, clifford, spin, triple, embedding or spectral")
      ->required()
      ->check(CLI::IsMember({"all", "clifford", "spin", "triple", "embedding", "spectral"}));
  verify->add_option("--weight", o.weight, "Highest weight of E");
  verify->add_option("--truncation", o.truncation, "Truncation level N of infinite modules")
      ->check(CLI::Range(2, 400));
  add_common(verify);

  auto* table = app.add_subcommand("table64", "Regenerate the table of L-representations");
  table->add_option("--weight", o.weight, "Highest weight 2m of E")->required();
  table->add_option("--truncation", o.truncation, "Truncation level N")->check(CLI::Range(2, 400));
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage_error;
  }

  try {
    const dirac::TransitiveTriple t = dirac::build_sl2_triple();
    const dirac::Sl2Pair p;

    if (table->parsed()) {
      if (!even_weight(o.weight, "table64")) return usage_error;
      auto result = dirac::table64(p, *o.weight, o.truncation);
      return emit(o, result.report, &result.rows);
    }

    dirac::Report r;
    if (o.suite == "embedding" || o.suite == "spectral") {
      if (!o.weight) {
        std::cerr << "verify " << o.suite << ": --weight is required\n";
        return usage_error;
      }
      if (o.suite == "embedding") {
        if (!even_weight(o.weight, "verify embedding")) return usage_error;
        r = dirac::embedding_suite(t, *o.weight);
      } else {
        if (*o.weight < 0) {
          std::cerr << "verify spectral: --weight must be nonnegative\n";
          return usage_error;
        }
        r = dirac::spectral_suite(t, p, *o.weight, o.truncation);
      }
      return emit(o, r, nullptr);
    }

    if (o.suite == "clifford" || o.suite == "all") r.merge(dirac::clifford_suite(t));
    if (o.suite == "spin" || o.suite == "all") r.merge(dirac::spin_suite(t));
    if (o.suite == "triple" || o.suite == "all") r.merge(dirac::triple_suite(t));
    if (o.suite == "all") {
      std::vector<int> weights;
      if (o.weight) {
        if (!even_weight(o.weight, "verify all")) return usage_error;
        weights = {*o.weight};
      } else {
        weights = {0, 2, 4, 6, 8, 10};
      }
      const bool many = weights.size() > 1;
      dirac::KernelCache cache(p);
      for (int w : weights) {
        r.merge(relabel(dirac::embedding_suite(t, w), suffix(w, many)));
        r.merge(relabel(dirac::spectral_suite(t, p, w, o.truncation, &cache), suffix(w, many)));
        r.merge(relabel(dirac::table64(p, w, o.truncation, &cache).report, suffix(w, many)));
      }
    } else if (o.weight) {
      std::cerr << "verify " << o.suite << ": --weight is not accepted\n";
      return usage_error;
    }
    return emit(o, r, nullptr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
