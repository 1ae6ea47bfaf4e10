#include "ordmetric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ordmetric/codec.hpp"
#include "ordmetric/errors.hpp"
#include "ordmetric/extend.hpp"
#include "ordmetric/generate.hpp"
#include "ordmetric/retract.hpp"
#include "ordmetric/space.hpp"

namespace ordmetric::cli {

namespace {

using codec::Json;

struct Config {
  std::vector<std::string> inputs;
  std::string tau = "2";
  std::string chain = "auto";
  std::uint64_t seed = 0;
  std::size_t count = 200;
  std::size_t bound = 7;
  std::size_t points = 8;
  std::size_t depth = 3;
  bool search = false;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path) { return codec::parse_json(read_file(path)); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_validate(const Config& cfg, std::string& text) {
  const auto file = codec::decode_space_file(read_json(cfg.inputs.at(0)));
  ValidationReport report;
  if (file.is_group_valued()) {
    report = validate(file.group_table(), file.flavor);
  } else {
    report = validate(std::get<1>(file.table).second, file.flavor);
  }
  text = dump(codec::encode(report, file.space));
  return report.ok() ? ExitCode::ok : ExitCode::domain_error;
}

template <TableValue V>
Json retract_table(const Config& cfg, const Table<V>& t, Flavor flavor) {
  const auto d = MetricTable<V>::checked(t, flavor);
  if (cfg.search) {
    auto r = find_one_lipschitz_retraction(d, cfg.bound);
    if (!r) throw DefectError("no 1-Lipschitz retraction exists on a finite ultrametric space");
    r->certificate = lipschitz_certificate(d, *r, Rational(1));
    if (!r->certificate->holds) throw DefectError("search returned a map that is not 1-Lipschitz");
    return codec::encode(*r);
  }
  return codec::encode(compute_retraction(d, Rational::parse(cfg.tau)));
}

int cmd_retract(const Config& cfg, std::string& text) {
  const auto file = codec::decode_space_file(read_json(cfg.inputs.at(0)));
  if (file.flavor != Flavor::ultrametric) throw DomainError("retract needs a file declared ultrametric");
  if (file.is_group_valued()) {
    text = dump(retract_table(cfg, file.group_table(), file.flavor));
  } else {
    text = dump(retract_table(cfg, std::get<1>(file.table).second, file.flavor));
  }
  return ExitCode::ok;
}

std::vector<Element> parse_chain_flag(const std::string& flag, const Domain& domain) {
  std::vector<Element> out;
  std::stringstream ss(flag);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (std::holds_alternative<RationalKind>(domain->kind)) {
      out.push_back(Element::rational(Rational::parse(item)));
    } else {
      out.push_back(codec::decode_element(codec::parse_json(item), domain));
    }
  }
  return out;
}

int cmd_extend(const Config& cfg, std::string& text) {
  const auto req = codec::decode_extension_request(read_json(cfg.inputs.at(0)));
  // Declared flavor is inferred: an ultrametric d is extended as one.
  const Flavor flavor = validate(req.d_on_A, Flavor::ultrametric).ok() ? Flavor::ultrametric : Flavor::metric;
  const auto d = MetricTable<Element>::checked(req.d_on_A, flavor);

  std::optional<std::vector<Element>> chain_values = req.chain;
  if (cfg.chain != "auto") chain_values = parse_chain_flag(cfg.chain, req.domain);
  std::optional<MetricTable<Element>> h;
  if (req.h) h = MetricTable<Element>::checked(*req.h, Flavor::ultrametric);
  std::optional<GaugeChain> chain;
  if (chain_values) {
    chain.emplace(*chain_values);
  } else {
    std::vector<const Table<Element>*> sources{&d.table()};
    if (h) sources.push_back(&h->table());
    chain.emplace(auto_chain(sources));
  }
  if (!h) h = constant_base(req.space, *chain);

  Retraction r;
  switch (req.retraction_kind) {
    case codec::ExtensionRequest::RetractionKind::tau:
      r = compute_retraction(*h, req.tau);
      break;
    case codec::ExtensionRequest::RetractionKind::nearest:
      r = nearest_point_retraction(*h);
      break;
    case codec::ExtensionRequest::RetractionKind::map: {
      r = Retraction{req.space, std::vector<std::size_t>(req.space.size()), std::nullopt, std::nullopt};
      for (std::size_t i = 0; i < req.space.size(); ++i) {
        const auto it = req.map.find(req.space.label(i));
        if (it == req.map.end()) {
          if (!req.space.in_subset(i)) throw DomainError("retraction map has no image for " + req.space.label(i));
          r.mapping[i] = i;
        } else {
          r.mapping[i] = req.space.index(it->second);
        }
      }
      break;
    }
  }
  text = dump(codec::encode(extensor_phi(d, *h, r, *chain)));
  return ExitCode::ok;
}

template <TableValue V>
V ud_of(const Table<V>& a, const Table<V>& b) {
  return ud_distance(MetricTable<V>::checked(a, Flavor::ultrametric), MetricTable<V>::checked(b, Flavor::ultrametric));
}

int cmd_ud(const Config& cfg, std::string& text) {
  if (cfg.inputs.size() != 2) throw ParseError("ud takes exactly two files");
  const auto f1 = codec::decode_space_file(read_json(cfg.inputs[0]));
  const auto f2 = codec::decode_space_file(read_json(cfg.inputs[1]));
  if (f1.flavor != Flavor::ultrametric || f2.flavor != Flavor::ultrametric) {
    throw DomainError("ud compares two files declared ultrametric");
  }
  if (f1.is_group_valued() != f2.is_group_valued()) throw DomainError("ud: the files use different value kinds");
  if (f1.is_group_valued()) {
    const Element v = ud_of(f1.group_table(), f2.group_table());
    text = (std::holds_alternative<RationalKind>(v.domain()->kind) ? v.as_rational().str() : codec::encode(v).dump()) + "\n";
  } else {
    const auto& [s1, t1] = std::get<1>(f1.table);
    const auto& [s2, t2] = std::get<1>(f2.table);
    if (!(s1 == s2)) throw DomainError("ud: the files use different ordered sets");
    text = s1.base().label(ud_of(t1, t2).pos) + "\n";
  }
  return ExitCode::ok;
}

int cmd_gen(const Config& cfg, std::string& text) {
  if (cfg.points == 0) throw DomainError("gen needs at least one point");
  Rng rng(cfg.seed);
  text = dump(codec::encode_space_file(random_ultrametric(rng, cfg.points, cfg.depth)));
  return ExitCode::ok;
}

int cmd_crosscheck(const Config& cfg, std::string& text, std::ostream& err) {
  Rng rng(cfg.seed);
  std::size_t equal = 0;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const auto inst = random_extension_instance(rng, cfg.points);
    const auto r = compute_retraction(inst.h, Rational::parse(cfg.tau));
    const auto result = crosscheck_embed(inst.d, inst.h, r, inst.chain);
    if (result.equal && result.embedded_metric) {
      ++equal;
    } else {
      err << "instance " << i << ": pipelines disagree\n";
    }
  }
  text = std::to_string(equal) + "/" + std::to_string(cfg.count) + " equal\n";
  return equal == cfg.count ? ExitCode::ok : ExitCode::defect;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metrics and ultrametrics valued in ordered groups: validation, retraction, extension"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--out", cfg.out, "Write the result to this file instead of stdout");

  auto* validate_cmd = app.add_subcommand("validate", "Check a space file against its declared flavor");
  validate_cmd->add_option("file", cfg.inputs, "Space file")->required()->expected(1);

  auto* retract_cmd = app.add_subcommand("retract", "Compute the tau-retraction onto the subset");
  retract_cmd->add_option("file", cfg.inputs, "Space file")->required()->expected(1);
  retract_cmd->add_option("--tau", cfg.tau, "Scale factor tau > 1 (p/q)");
  retract_cmd->add_flag("--search", cfg.search, "Search for a 1-Lipschitz retraction instead");
  retract_cmd->add_option("--bound", cfg.bound, "Largest space the search accepts");

  auto* extend_cmd = app.add_subcommand("extend", "Extend a metric on the subset to the whole space");
  extend_cmd->add_option("file", cfg.inputs, "Extension request")->required()->expected(1);
  extend_cmd->add_option("--chain", cfg.chain, "Gauge chain v1,v2,... or auto");

  auto* ud_cmd = app.add_subcommand("ud", "UD distance between two ultrametrics on one space");
  ud_cmd->add_option("files", cfg.inputs, "Two space files")->required()->expected(2);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random dyadic ultrametric space");
  gen_cmd->add_option("--points", cfg.points, "Number of points");
  gen_cmd->add_option("--depth", cfg.depth, "Depth of the random tree");
  gen_cmd->add_option("--seed", cfg.seed, "Seed");

  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare the rational and Hahn-embedded extensors");
  cross_cmd->add_option("--seed", cfg.seed, "Seed");
  cross_cmd->add_option("--count", cfg.count, "Number of instances");
  cross_cmd->add_option("--points", cfg.points, "Largest space size");
  cross_cmd->add_option("--tau", cfg.tau, "Scale factor of the retraction");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ExitCode::ok;
    }
    err << e.what() << "\n";
    return ExitCode::parse_error;
  }

  std::string text;
  int code = ExitCode::ok;
  try {
    if (validate_cmd->parsed()) {
      code = cmd_validate(cfg, text);
    } else if (retract_cmd->parsed()) {
      code = cmd_retract(cfg, text);
    } else if (extend_cmd->parsed()) {
      code = cmd_extend(cfg, text);
    } else if (ud_cmd->parsed()) {
      code = cmd_ud(cfg, text);
    } else if (gen_cmd->parsed()) {
      code = cmd_gen(cfg, text);
    } else {
      code = cmd_crosscheck(cfg, text, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return ExitCode::parse_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::domain_error;
  } catch (const DefectError& e) {
    err << "defect: " << e.what() << "\n";
    return ExitCode::defect;
  }

  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file || !(file << text)) {
      err << "cannot write \"" << cfg.out << "\"\n";
      return ExitCode::parse_error;
    }
  }
  return code;
}

}  // namespace ordmetric::cli
