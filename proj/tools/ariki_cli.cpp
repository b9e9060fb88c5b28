// Command-line front end over the C API.
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ariki/ariki.h"

namespace {

// Thrown by the helpers below; carries the process exit code.
struct Failure {
  int code;
  std::string message;
};

int exit_code(ariki_status s) {
  switch (s) {
    case ARIKI_OK: return 0;
    case ARIKI_ERR_INVALID_ARGUMENT:
    case ARIKI_ERR_DOMAIN: return 2;
    default: return 1;
  }
}

void check(ariki_status s) {
  if (s != ARIKI_OK) throw Failure{exit_code(s), std::string(ariki_status_name(s)) + ": " + ariki_last_error()};
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  ariki_string_free(s);
  return out;
}

void print(const std::string& s) {
  std::cout << s;
  if (!s.empty() && s.back() != '\n') std::cout << '\n';
}

struct ParamFlags {
  int d = 1;
  int e = 2;
  std::string charges;
  std::optional<int> shift;

  void attach(CLI::App* app, const char* shift_name = "--shift") {
    app->add_option("--d", d, "number of components")->check(CLI::PositiveNumber);
    app->add_option("--e", e, "quantum characteristic (>= 2)");
    app->add_option("--charges", charges, "comma-separated charges v_0,...,v_{d-1}");
    app->add_option(shift_name, shift, "shift s of the weights (default: least valid)");
  }

  struct Handle {
    ariki_params* p = nullptr;
    ~Handle() { ariki_params_free(p); }
  };

  void build(Handle& h) const {
    std::vector<int> v;
    if (charges.empty()) {
      v.assign(static_cast<std::size_t>(d), 0);
    } else {
      std::stringstream ss(charges);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          v.push_back(std::stoi(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw Failure{2, "invalid charge '" + item + "'"};
        }
      }
    }
    if (static_cast<int>(v.size()) != d) throw Failure{2, "expected " + std::to_string(d) + " charges"};
    check(ariki_params_new(d, e, v.data(), shift.has_value(), shift.value_or(0), &h.p));
  }
};

struct MpHandle {
  ariki_mp* m = nullptr;
  ~MpHandle() { ariki_mp_free(m); }
};

ariki_format parse_format(const std::string& f) {
  if (f == "text") return ARIKI_FORMAT_TEXT;
  if (f == "json") return ARIKI_FORMAT_JSON;
  if (f == "dot") return ARIKI_FORMAT_DOT;
  throw Failure{2, "unknown format '" + f + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ariki-Koike combinatorics: FLOTW/Kleshchev sets, a-values, crystals, canonical bases"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = ARIKI_THREADS or hardware)")->check(CLI::NonNegativeNumber);

  std::string format = "text";
  std::string mp;
  int n = 0;

  auto* enumerate = app.add_subcommand("enumerate", "list the d-partitions of rank n");
  int enum_d = 1;
  enumerate->add_option("--d", enum_d, "number of components")->check(CLI::PositiveNumber);
  enumerate->add_option("--n", n, "rank")->required();
  enumerate->add_option("--format", format, "text|json");

  ParamFlags av_flags;
  auto* a_value = app.add_subcommand("a-value", "a-value of a multipartition");
  av_flags.attach(a_value);
  a_value->add_option("--mp", mp, "multipartition, e.g. 2.2,2.2.1")->required();

  ParamFlags sym_flags;
  int sym_k = 0;
  std::string weights;
  auto* symbol = app.add_subcommand("symbol", "ordinary and shifted symbols of a d-composition");
  sym_flags.attach(symbol, "--s");
  symbol->add_option("--shift", sym_k, "symbol shift k")->check(CLI::NonNegativeNumber);
  symbol->add_option("--m", weights, "explicit weights m^(j), e.g. 1,1/2,2");
  symbol->add_option("--mp", mp, "d-composition, e.g. 4.2,-,5.2.1")->required();
  symbol->add_option("--format", format, "text|json");

  ParamFlags seq_flags;
  auto* a_seq = app.add_subcommand("a-seq", "a-sequence of a FLOTW multipartition");
  seq_flags.attach(a_seq);
  a_seq->add_option("--mp", mp, "multipartition")->required();

  ParamFlags graph_flags;
  auto* a_graph = app.add_subcommand("a-graph", "a-graph of a FLOTW multipartition");
  graph_flags.attach(a_graph);
  a_graph->add_option("--mp", mp, "multipartition")->required();
  a_graph->add_option("--format", format, "text|json");

  ParamFlags cr_flags;
  std::string order = "flotw";
  bool dot = false;
  auto* crystal = app.add_subcommand("crystal", "crystal graph up to rank n");
  cr_flags.attach(crystal);
  crystal->add_option("--n", n, "largest rank")->required();
  crystal->add_option("--order", order, "flotw|am");
  crystal->add_flag("--dot", dot, "emit a DOT digraph");
  crystal->add_option("--format", format, "text|json|dot");

  ParamFlags bij_flags;
  bool inverse = false;
  auto* bijection = app.add_subcommand("bijection", "Kleshchev to FLOTW label (or back with --inverse)");
  bij_flags.attach(bijection);
  bijection->add_option("--mp", mp, "multipartition")->required();
  bijection->add_flag("--inverse", inverse, "map a FLOTW label to its Kleshchev label");

  ParamFlags can_flags;
  auto* canonical = app.add_subcommand("canonical", "canonical basis at rank n");
  can_flags.attach(canonical);
  canonical->add_option("--n", n, "rank")->required();
  canonical->add_option("--format", format, "text|json");

  ParamFlags dec_flags;
  auto* decomp = app.add_subcommand("decomp", "decomposition matrix at rank n");
  dec_flags.attach(decomp);
  decomp->add_option("--n", n, "rank")->required();
  decomp->add_option("--format", format, "text|json");

  int tb_e = 2;
  std::string tb_query = "basic-set";
  auto* typeb = app.add_subcommand("typeb", "type B_n canonical basic sets, a-values and matrices");
  typeb->add_option("--n", n, "rank")->required();
  typeb->add_option("--e", tb_e, "quantum characteristic")->required();
  typeb->add_option("query", tb_query, "basic-set|a-values|decomp")
      ->check(CLI::IsMember({"basic-set", "a-values", "decomp"}));
  typeb->add_option("--format", format, "text|json");

  std::vector<int> caps = {6, 8, 5, 4, 4, 5, 5, 5};
  const char* cap_names[] = {"--counting", "--regular", "--a-oracle", "--invariance",
                             "--divided",  "--minimality", "--canonical", "--typeb"};
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  for (std::size_t i = 0; i < caps.size(); ++i)
    verify->add_option(cap_names[i], caps[i], "rank cap")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ariki_set_threads(threads);
    const ariki_format fmt = parse_format(format);
    char* out = nullptr;

    auto with_mp = [&](const ParamFlags& flags, auto&& body) {
      ParamFlags::Handle h;
      flags.build(h);
      MpHandle m;
      check(ariki_mp_parse(mp.c_str(), flags.d, &m.m));
      body(h.p, m.m);
    };

    if (*enumerate) {
      check(ariki_enumerate(enum_d, n, fmt, &out));
      print(take(out));
    } else if (*a_value) {
      with_mp(av_flags, [&](ariki_params* p, ariki_mp* m) {
        int64_t num = 0;
        int den = 1;
        check(ariki_a_value(m, p, 0, &num, &den));
        char dec[64];
        std::snprintf(dec, sizeof dec, "%.6f", static_cast<double>(num) / den);
        std::cout << num << "/" << den << " = " << dec << "\n";
      });
    } else if (*symbol) {
      ParamFlags::Handle h;
      if (weights.empty()) sym_flags.build(h);
      check(ariki_symbol(mp.c_str(), h.p, weights.empty() ? nullptr : weights.c_str(), sym_k, fmt, &out));
      print(take(out));
    } else if (*a_seq) {
      with_mp(seq_flags, [&](ariki_params* p, ariki_mp* m) {
        check(ariki_a_sequence(m, p, &out));
        print(take(out));
      });
    } else if (*a_graph) {
      with_mp(graph_flags, [&](ariki_params* p, ariki_mp* m) {
        check(ariki_a_graph(m, p, fmt, &out));
        print(take(out));
      });
    } else if (*crystal) {
      ParamFlags::Handle h;
      cr_flags.build(h);
      ariki_order o;
      if (order == "flotw")
        o = ARIKI_ORDER_FLOTW;
      else if (order == "am")
        o = ARIKI_ORDER_AM;
      else
        throw Failure{2, "unknown order '" + order + "'"};
      check(ariki_crystal(h.p, n, o, dot ? ARIKI_FORMAT_DOT : fmt, &out));
      print(take(out));
    } else if (*bijection) {
      with_mp(bij_flags, [&](ariki_params* p, ariki_mp* m) {
        MpHandle r;
        check(ariki_bijection(m, p, inverse ? 1 : 0, &r.m));
        check(ariki_mp_to_text(r.m, &out));
        print(take(out));
      });
    } else if (*canonical) {
      ParamFlags::Handle h;
      can_flags.build(h);
      check(ariki_canonical_basis(h.p, n, fmt, &out));
      print(take(out));
    } else if (*decomp) {
      ParamFlags::Handle h;
      dec_flags.build(h);
      check(ariki_decomposition_matrix(h.p, n, fmt, &out));
      print(take(out));
    } else if (*typeb) {
      const ariki_typeb_query q = tb_query == "basic-set"  ? ARIKI_TYPEB_BASIC_SET
                                  : tb_query == "a-values" ? ARIKI_TYPEB_A_VALUES
                                                           : ARIKI_TYPEB_DECOMP;
      check(ariki_typeb(n, tb_e, q, fmt, &out));
      print(take(out));
    } else if (*verify) {
      int ok = 0;
      check(ariki_verify(caps.data(), fmt, &out, &ok));
      print(take(out));
      return ok ? 0 : 1;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
