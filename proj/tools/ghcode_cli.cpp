// ghcode: command-line front end.
//
// Exit status: 0 success, 1 a verification reported FAIL, 2 bad input, 3 over the memory
// budget.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "ghcode/classification.hpp"
#include "ghcode/equivalence.hpp"
#include "ghcode/gray.hpp"
#include "ghcode/gray_code.hpp"
#include "ghcode/invariants.hpp"
#include "ghcode/parallel.hpp"

using namespace ghcode;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

struct Options {
  std::uint32_t p = 0;
  std::string type;
  unsigned s = 0;
  std::string value;
  std::string format = "table";
  std::string output;
  std::uint64_t budget = ResourceLimits::kDefaultBudget;
  unsigned threads = 0;
};

template <class T>
std::string join_symbols(const T& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(static_cast<unsigned>(v[i]));
  return out;
}

TypeSignature parse_sig(const Options& o) { return validate_type(o.p, parse_type(o.type), {o.budget}); }

Json chain_json(const ChainPosition& c) {
  return Json{{"representative", c.representative.ts()},
              {"position", c.position},
              {"sigma", c.sigma},
              {"chain_length", c.chain_length}};
}

int cmd_construct(const Options& o, bool words, std::ostream& out) {
  const auto sig = parse_sig(o);
  const auto code = build_generator_matrix(sig);
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& r : code.generator) rows.push_back(std::vector<Residue>(r.entries().begin(), r.entries().end()));
    out << Json{{"p", sig.p()},          {"type", sig.ts()},
                {"s", sig.s()},          {"t", sig.t()},
                {"n", sig.n()},          {"gray_length", sig.gray_length()},
                {"size", sig.code_size()}, {"linear", is_linear_type(sig)},
                {"row_orders", code.row_exponents}, {"generator", rows}}
               .dump()
        << "\n";
  } else {
    out << "type " << sig.to_tuple_string() << " over Z_" << sig.params().modulus() << ": n=" << sig.n()
        << " gray_length=" << sig.gray_length() << " size=" << sig.code_size()
        << " linear=" << (is_linear_type(sig) ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < code.generator.size(); ++i) {
      out << "w" << i + 1 << " (order " << sig.p() << "^" << code.row_exponents[i] << "): "
          << join_symbols(code.generator[i].entries()) << "\n";
    }
  }
  if (words) {
    const auto image = materialize_gray(code, {o.budget});
    for (std::size_t i = 0; i < image.size(); ++i) {
      const auto w = image.word(i);
      if (o.p > 10) {
        out << join_symbols(w) << "\n";
        continue;
      }
      std::string line;
      for (auto x : w) line += static_cast<char>('0' + x);
      out << line << "\n";
    }
  }
  return 0;
}

int cmd_gray(const Options& o, bool with_tau, std::ostream& out) {
  const RingParams ring(o.p, o.s);
  const auto entries = parse_type(o.value);
  std::vector<Residue> values;
  for (auto e : entries) {
    if (e >= ring.modulus()) throw InputError(std::to_string(e) + " is not in " + ring.name());
    values.push_back(e);
  }
  const RingVector v(ring, values);
  if (with_tau) {
    if (o.s < 2) throw InputError("tau needs s >= 2");
    out << join_symbols(tau_vector(v).entries()) << "\n";
  } else {
    out << join_symbols(gray_vector(v)) << "\n";
  }
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const auto sig = parse_sig(o);
  const bool linear = is_linear_type(sig);
  const auto pair = invariant_pair(build_generator_matrix(sig), {o.budget});
  if (o.format == "csv") {
    out << "p,t,s,type,r,k,linear\n"
        << sig.p() << "," << sig.t() << "," << sig.s() << ",\"" << sig.to_string() << "\"," << pair.rank << ","
        << pair.kernel_dim << "," << (linear ? "true" : "false") << "\n";
  } else if (o.format == "json") {
    out << Json{{"p", sig.p()}, {"t", sig.t()},       {"s", sig.s()},          {"type", sig.ts()},
                {"r", pair.rank}, {"k", pair.kernel_dim}, {"linear", linear}}
               .dump()
        << "\n";
  } else {
    out << "r=" << pair.rank << " k=" << pair.kernel_dim << " linear=" << (linear ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_chain(const Options& o, bool list, std::ostream& out) {
  const auto sig = parse_sig(o);
  const auto c = chain_of(sig);
  const auto members = chain_members(c.representative);
  if (o.format == "json") {
    Json j = chain_json(c);
    Json m = Json::array();
    for (const auto& x : members) m.push_back(x.ts());
    j["members"] = m;
    out << j.dump() << "\n";
    return 0;
  }
  out << "representative " << c.representative.to_string() << " position " << c.position << " members "
      << c.chain_length << "\n";
  if (list) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      out << "  " << i + 1 << " " << members[i].to_tuple_string() << " over Z_" << members[i].params().modulus()
          << "\n";
    }
  }
  return 0;
}

int cmd_equiv(const Options& o, const std::string& a_text, const std::string& b_text, bool witness,
              std::ostream& out) {
  const TypeSignature a = validate_type(o.p, parse_type(a_text), {o.budget});
  const TypeSignature b = validate_type(o.p, parse_type(b_text), {o.budget});
  const auto r = verify_equivalence(a, b, {o.budget});
  Json j{{"verdict", to_string(r.verdict)}};
  j["representative"] = Json::array({r.a ? Json(r.a->representative.ts()) : Json(nullptr),
                                     r.b ? Json(r.b->representative.ts()) : Json(nullptr)});
  j["positions"] = Json::array({r.a ? Json(r.a->position) : Json(nullptr), r.b ? Json(r.b->position) : Json(nullptr)});
  if (witness && r.witness) j["witness"] = r.witness->one_based();
  j["mode"] = r.mode;
  j["reason"] = r.reason;
  out << j.dump() << "\n";
  return r.verdict == Verdict::fail ? kExitFail : 0;
}

std::string or_skipped(const CensusRow& row, bool rank) {
  if (!row.invariants) return row.skipped ? "skipped" : "";
  return std::to_string(rank ? row.invariants->rank : row.invariants->kernel_dim);
}

Json bounds_json(const BoundsReport& b) {
  const auto value = [](const BoundValue& v) {
    Json j{{"value", v.value}};
    if (v.reference) j["published"] = *v.reference;
    return j;
  };
  Json j{{"p", b.p},
         {"t", b.t},
         {"previous_types", value(b.previous_types)},
         {"previous_classes", value(b.previous_classes)},
         {"improved", value(b.improved)},
         {"improved_classes", value(b.improved_classes)},
         {"class_count_assumption", b.class_count_assumption}};
  if (b.invariant_lower_bound) j["invariant_lower_bound"] = *b.invariant_lower_bound;
  j["notes"] = b.notes;
  return j;
}

void print_bounds(const BoundsReport& b, std::ostream& out) {
  const auto line = [&](const char* label, const BoundValue& v) {
    out << "  " << label << ": " << v.value;
    if (v.reference) out << (v.matches_reference() ? " (matches published " : " (published ") << *v.reference << ")";
    out << "\n";
  };
  out << "bounds p=" << b.p << " t=" << b.t << "\n";
  if (b.invariant_lower_bound) out << "  lower bound from distinct (r,k): " << *b.invariant_lower_bound << "\n";
  line("improved upper bound (representatives)", b.improved);
  line("improved upper bound (classes per s)", b.improved_classes);
  line("previous upper bound (types)", b.previous_types);
  line("previous upper bound (classes per s)", b.previous_classes);
  out << "  assumption: " << b.class_count_assumption << "\n";
  for (const auto& n : b.notes) out << "  note: " << n << "\n";
}

int cmd_classify(const Options& o, unsigned t, bool with_invariants, std::ostream& out) {
  const auto rows = census(t, o.p, with_invariants, {o.budget});
  auto report = bounds(t, o.p);
  if (with_invariants) report.invariant_lower_bound = distinct_invariant_pairs(rows);
  if (o.format == "csv") {
    out << "p,t,s,type,representative,position,chain_len,linear,r,k\n";
    for (const auto& row : rows) {
      out << o.p << "," << t << "," << row.type.s() << ",\"" << row.type.to_string() << "\",";
      if (row.chain) {
        out << "\"" << row.chain->representative.to_string() << "\"," << row.chain->position << ","
            << row.chain->chain_length;
      } else {
        out << ",,";
      }
      out << "," << (row.linear ? "true" : "false") << "," << or_skipped(row, true) << "," << or_skipped(row, false)
          << "\n";
    }
  } else if (o.format == "json") {
    Json list = Json::array();
    for (const auto& row : rows) {
      Json j{{"s", row.type.s()}, {"type", row.type.ts()}, {"linear", row.linear}};
      j["chain"] = row.chain ? chain_json(*row.chain) : Json(nullptr);
      if (row.invariants) {
        j["r"] = row.invariants->rank;
        j["k"] = row.invariants->kernel_dim;
      } else if (row.skipped) {
        j["skipped"] = true;
      }
      list.push_back(j);
    }
    out << Json{{"p", o.p}, {"t", t}, {"classes", class_count(rows)}, {"rows", list}, {"bounds", bounds_json(report)}}
               .dump()
        << "\n";
  } else {
    out << "p=" << o.p << " t=" << t << ": " << rows.size() << " types, " << class_count(rows) << " classes\n";
    for (const auto& row : rows) {
      out << "  " << row.type.to_tuple_string();
      if (row.linear) {
        out << " linear";
      } else {
        out << " -> " << row.chain->representative.to_tuple_string() << " [" << row.chain->position << "/"
            << row.chain->chain_length << "]";
      }
      if (row.invariants) out << " (" << row.invariants->rank << "," << row.invariants->kernel_dim << ")";
      if (row.skipped) out << " skipped";
      out << "\n";
    }
    print_bounds(report, out);
  }
  return 0;
}

int cmd_bounds(const Options& o, unsigned t, std::ostream& out) {
  const auto b = bounds(t, o.p);
  if (o.format == "json") {
    out << bounds_json(b).dump() << "\n";
  } else {
    print_bounds(b, out);
  }
  return 0;
}

int cmd_isolated(const Options& o, unsigned t_min, unsigned t_max, std::ostream& out) {
  const auto table = isolated_types(t_max, o.p, t_min);
  if (o.format == "json") {
    Json j = Json::object();
    for (const auto& [t, v] : table) {
      Json list = Json::array();
      for (const auto& s : v) list.push_back(s.ts());
      j[std::to_string(t)] = list;
    }
    out << j.dump() << "\n";
    return 0;
  }
  for (const auto& [t, v] : table) {
    out << "t=" << t << ":";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : " ") << v[i].to_tuple_string();
    out << "\n";
  }
  return 0;
}

// Nonlinear rows in the (t_1,...,t_s) -> (r,k) layout, then bounds and isolated types.
int cmd_tables(const Options& o, unsigned t_min, unsigned t_max, unsigned only_s, bool with_linear,
               std::ostream& out) {
  if (t_min > t_max) throw InputError("--t-min exceeds --t-max");
  const bool csv = o.format == "csv";
  if (csv) out << "p,t,s,type,r,k,linear\n";
  for (unsigned t = t_min; t <= t_max; ++t) {
    const auto rows = census(t, o.p, true, {o.budget});
    if (!csv) out << "t=" << t << "\n";
    std::set<InvariantPair> shown;
    bool all_computed = true;
    for (const auto& row : rows) {
      if (row.type.s() < 2 || (row.linear && !with_linear)) continue;
      if (only_s > 0 && row.type.s() != only_s) continue;
      if (row.invariants) {
        shown.insert(*row.invariants);
      } else {
        all_computed = false;
      }
      if (csv) {
        out << o.p << "," << t << "," << row.type.s() << ",\"" << row.type.to_string() << "\"," << or_skipped(row, true)
            << "," << or_skipped(row, false) << "," << (row.linear ? "true" : "false") << "\n";
        continue;
      }
      out << "  Z_" << row.type.params().modulus() << " " << row.type.to_tuple_string() << " ";
      if (row.invariants) {
        out << "(" << row.invariants->rank << "," << row.invariants->kernel_dim << ")";
      } else {
        out << "skipped";
      }
      out << (row.linear ? " linear\n" : "\n");
    }
    if (!csv) {
      out << "  classes " << class_count(rows);
      if (all_computed) out << ", distinct (r,k) among listed rows " << shown.size();
      out << "\n";
    }
  }
  if (!csv) {
    for (unsigned t = std::max(3u, t_min); t <= t_max; ++t) print_bounds(bounds(t, o.p), out);
    out << "isolated types\n";
    cmd_isolated(o, std::max(4u, t_min), t_max, out);
  }
  return 0;
}

int cmd_verify(const Options& o, const std::string& mode, std::uint64_t seed, std::uint64_t pairs, bool distance,
               std::ostream& out) {
  const auto sig = parse_sig(o);
  const auto code = materialize_gray(build_generator_matrix(sig), {o.budget});
  GhCheckMode m = GhCheckMode::automatic(code.size());
  if (mode == "exhaustive") m = GhCheckMode::exhaustive();
  if (mode == "sampled") m = GhCheckMode::sampled(seed, pairs);
  if (m.kind == GhCheckMode::Kind::sampled) {
    m.seed = seed;
    m.pairs = pairs;
  }
  const auto v = is_gh_code(code, m);
  bool ok = v.passed;
  Json j{{"type", sig.ts()},
         {"gh", v.passed ? "PASS" : "FAIL"},
         {"mode", v.exhaustive ? "exhaustive" : "sampled"},
         {"pairs", v.pairs_checked}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (distance) {
    const auto d = min_distance(code);
    const std::uint64_t expected = sig.gray_length() / sig.p() * (sig.p() - 1);
    j["min_distance"] = d;
    j["expected_distance"] = expected;
    ok = ok && d == expected;
  }
  if (o.format == "json") {
    out << j.dump() << "\n";
  } else {
    out << sig.to_tuple_string() << ": GH " << (v.passed ? "PASS" : "FAIL") << " ("
        << (v.exhaustive ? "exhaustive" : "sampled") << ", " << v.pairs_checked << " pairs)";
    if (distance) out << " min_distance=" << j["min_distance"].get<std::uint64_t>();
    if (!v.reason.empty()) out << " " << v.reason;
    out << "\n";
  }
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z_{p^s}-linear generalized Hadamard codes: construction, invariants, equivalence, classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (default: GHCODE_THREADS or all cores)");
  app.add_option("--budget-bytes", o.budget, "Memory budget for materialised codes")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", o.output, "Write to this file instead of stdout");

  const auto add_p = [&](CLI::App* c) { c->add_option("--p", o.p, "Prime")->required(); };
  const auto add_type = [&](CLI::App* c) { c->add_option("--type", o.type, "Type t_1,...,t_s")->required(); };
  const auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* construct = app.add_subcommand("construct", "Generator matrix of a type");
  bool words = false;
  add_p(construct);
  add_type(construct);
  add_format(construct, {"table", "json"});
  construct->add_flag("--words", words, "Also print every Gray image word");

  auto* gray_cmd = app.add_subcommand("gray", "Gray map of a residue or vector");
  bool with_tau = false;
  add_p(gray_cmd);
  gray_cmd->add_option("--s", o.s, "Exponent s")->required();
  gray_cmd->add_option("--value", o.value, "Residue, or comma-separated vector")->required();
  gray_cmd->add_flag("--tau", with_tau, "Print tau_s instead of the Gray image");

  auto* inv = app.add_subcommand("invariants", "Rank and kernel dimension");
  add_p(inv);
  add_type(inv);
  add_format(inv, {"table", "csv", "json"});

  auto* chain = app.add_subcommand("chain", "Chain of equivalences containing a type");
  bool list = false;
  add_p(chain);
  add_type(chain);
  add_format(chain, {"table", "json"});
  chain->add_flag("--members", list, "List every member");

  auto* equiv = app.add_subcommand("equiv-check", "Decide equivalence of two types, with a witness");
  std::string a_text, b_text;
  bool no_witness = false;
  add_p(equiv);
  equiv->add_option("--a", a_text, "First type")->required();
  equiv->add_option("--b", b_text, "Second type")->required();
  equiv->add_flag("--no-witness", no_witness, "Omit the witness permutation from the output");

  auto* classify = app.add_subcommand("classify", "Every type of length p^t with chains and bounds");
  unsigned t = 0;
  bool with_invariants = false;
  add_p(classify);
  classify->add_option("--t", t, "Length exponent")->required();
  classify->add_flag("--invariants", with_invariants, "Compute (r,k) per chain representative");
  classify->add_option("--budget-bytes", o.budget, "Memory budget")->check(CLI::PositiveNumber);
  add_format(classify, {"table", "csv", "json"});

  auto* bounds_cmd = app.add_subcommand("bounds", "Upper bounds on the number of classes");
  add_p(bounds_cmd);
  bounds_cmd->add_option("--t", t, "Length exponent")->required();
  add_format(bounds_cmd, {"table", "json"});

  auto* isolated = app.add_subcommand("isolated", "Types equivalent to no other type of the same length");
  unsigned t_min = 4, t_max = 10;
  add_p(isolated);
  isolated->add_option("--t-min", t_min, "Smallest t");
  isolated->add_option("--t-max", t_max, "Largest t");
  add_format(isolated, {"table", "json"});

  auto* tables = app.add_subcommand("tables", "Rank/kernel listings, bounds and isolated types");
  unsigned only_s = 0;
  bool with_linear = false;
  add_p(tables);
  tables->add_option("--t-min", t_min, "Smallest t");
  tables->add_option("--t-max", t_max, "Largest t");
  tables->add_option("--s", only_s, "Only this s");
  tables->add_flag("--with-linear", with_linear, "Also list the linear types");
  add_format(tables, {"table", "csv"});

  auto* verify = app.add_subcommand("verify", "Generalized Hadamard check");
  std::string mode = "auto";
  std::uint64_t seed = GhCheckMode::kDefaultSeed, pairs = GhCheckMode::kDefaultPairs;
  bool distance = false;
  add_p(verify);
  add_type(verify);
  verify->add_option("--mode", mode, "auto, exhaustive or sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--pairs", pairs, "Sampled pairs");
  verify->add_flag("--distance", distance, "Also compute the minimum distance");
  add_format(verify, {"table", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      std::cerr << "error: cannot write " << o.output << "\n";
      return kExitInput;
    }
  }
  std::ostream& out = o.output.empty() ? std::cout : file;

  try {
    if (o.threads > 0) set_worker_count(o.threads);
    if (*construct) return cmd_construct(o, words, out);
    if (*gray_cmd) return cmd_gray(o, with_tau, out);
    if (*inv) return cmd_invariants(o, out);
    if (*chain) return cmd_chain(o, list, out);
    if (*equiv) return cmd_equiv(o, a_text, b_text, !no_witness, out);
    if (*classify) return cmd_classify(o, t, with_invariants, out);
    if (*bounds_cmd) return cmd_bounds(o, t, out);
    if (*isolated) return cmd_isolated(o, t_min, t_max, out);
    if (*tables) return cmd_tables(o, t_min, t_max, only_s, with_linear, out);
    if (*verify) return cmd_verify(o, mode, seed, pairs, distance, out);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
