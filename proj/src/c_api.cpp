#include "ariki/ariki.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "ariki/aseq.hpp"
#include "ariki/canonical.hpp"
#include "ariki/crystal.hpp"
#include "ariki/error.hpp"
#include "ariki/parallel.hpp"
#include "ariki/serialize.hpp"
#include "ariki/symbols.hpp"
#include "ariki/typeb.hpp"
#include "ariki/verify.hpp"

struct ariki_params {
  ariki::ChargeParams p;
};

struct ariki_mp {
  ariki::Multipartition m;
};

namespace {

thread_local std::string last_error;

template <class F>
ariki_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return ARIKI_OK;
  } catch (const ariki::InvalidArgument& e) {
    last_error = e.what();
    return ARIKI_ERR_INVALID_ARGUMENT;
  } catch (const ariki::DomainError& e) {
    last_error = e.what();
    return ARIKI_ERR_DOMAIN;
  } catch (const ariki::ArithmeticOverflow& e) {
    last_error = e.what();
    return ARIKI_ERR_OVERFLOW;
  } catch (const ariki::InternalError& e) {
    last_error = e.what();
    return ARIKI_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ARIKI_ERR_NO_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ARIKI_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return ARIKI_ERR_INTERNAL;
  }
}

void need(const void* ptr, const char* what) {
  if (!ptr) throw ariki::InvalidArgument(std::string("null argument: ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  need(out, "out");
  *out = dup(s);
}

std::string dump(const ariki::Json& j) { return j.dump() + "\n"; }

ariki::NodeOrder to_order(ariki_order o) {
  if (o == ARIKI_ORDER_AM) return ariki::NodeOrder::AM;
  if (o == ARIKI_ORDER_FLOTW) return ariki::NodeOrder::FLOTW;
  throw ariki::InvalidArgument("unknown node order");
}

void check_format(ariki_format f, bool dot_ok = false) {
  if (f == ARIKI_FORMAT_TEXT || f == ARIKI_FORMAT_JSON || (dot_ok && f == ARIKI_FORMAT_DOT)) return;
  throw ariki::InvalidArgument("output format not supported here");
}

const ariki::ChargeParams& params_of(const ariki_params* p) {
  need(p, "params");
  return p->p;
}

const ariki::Multipartition& mp_of(const ariki_mp* m, const ariki_params* p) {
  need(m, "multipartition");
  if (p && m->m.d() != p->p.d()) throw ariki::InvalidArgument("multipartition and parameters disagree on d");
  return m->m;
}

}  // namespace

extern "C" {

const char* ariki_version(void) { return "0.1.0"; }
const char* ariki_last_error(void) { return last_error.c_str(); }

const char* ariki_status_name(ariki_status s) {
  switch (s) {
    case ARIKI_OK: return "ok";
    case ARIKI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ARIKI_ERR_DOMAIN: return "outside domain";
    case ARIKI_ERR_INTERNAL: return "internal error";
    case ARIKI_ERR_OVERFLOW: return "arithmetic overflow";
    case ARIKI_ERR_NO_MEMORY: return "out of memory";
  }
  return "unknown status";
}

void ariki_string_free(char* s) { std::free(s); }
void ariki_set_threads(int n) { ariki::set_thread_count(n); }

ariki_status ariki_params_new(int d, int e, const int* v, int has_shift, int s, ariki_params** out) {
  return guarded([&] {
    need(out, "out");
    if (d < 1) throw ariki::InvalidArgument("d must be at least 1");
    need(v, "charges");
    std::vector<int> charges(v, v + d);
    auto p = ariki::ChargeParams::make(d, e, charges, has_shift ? std::optional<int>(s) : std::nullopt);
    *out = new ariki_params{std::move(p)};
  });
}

ariki_status ariki_params_from_json(const char* json, ariki_params** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    ariki::Json j;
    try {
      j = ariki::Json::parse(json);
    } catch (const ariki::Json::exception& ex) {
      throw ariki::InvalidArgument(ex.what());
    }
    *out = new ariki_params{ariki::params_from_json(j)};
  });
}

ariki_status ariki_params_to_json(const ariki_params* p, char** out) {
  return guarded([&] { emit(out, dump(ariki::to_json(params_of(p)))); });
}

void ariki_params_free(ariki_params* p) { delete p; }
int ariki_params_d(const ariki_params* p) { return p ? p->p.d() : 0; }
int ariki_params_e(const ariki_params* p) { return p ? p->p.e() : 0; }
int ariki_params_s(const ariki_params* p) { return p ? p->p.s() : 0; }

ariki_status ariki_params_scaled_m(const ariki_params* p, int j, int* out) {
  return guarded([&] {
    need(out, "out");
    const auto& pp = params_of(p);
    if (j < 0 || j >= pp.d()) throw ariki::InvalidArgument("component index out of range");
    *out = pp.scaled_m(j);
  });
}

ariki_status ariki_is_semisimple(const ariki_params* p, int n, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = ariki::is_semisimple(params_of(p), n) ? 1 : 0;
  });
}

ariki_status ariki_mp_parse(const char* text, int d, ariki_mp** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new ariki_mp{ariki::parse_multipartition(text, d)};
  });
}

ariki_status ariki_mp_from_json(const char* json, ariki_mp** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    ariki::Json j;
    try {
      j = ariki::Json::parse(json);
    } catch (const ariki::Json::exception& ex) {
      throw ariki::InvalidArgument(ex.what());
    }
    *out = new ariki_mp{ariki::multipartition_from_json(j)};
  });
}

ariki_status ariki_mp_to_text(const ariki_mp* m, char** out) {
  return guarded([&] { emit(out, ariki::format_multipartition(mp_of(m, nullptr))); });
}

ariki_status ariki_mp_to_json(const ariki_mp* m, char** out) {
  return guarded([&] { emit(out, ariki::to_json(mp_of(m, nullptr)).dump()); });
}

void ariki_mp_free(ariki_mp* m) { delete m; }
int ariki_mp_rank(const ariki_mp* m) { return m ? m->m.rank() : 0; }
int ariki_mp_d(const ariki_mp* m) { return m ? m->m.d() : 0; }

ariki_status ariki_enumerate(int d, int n, ariki_format fmt, char** out) {
  return guarded([&] {
    check_format(fmt);
    const auto all = ariki::enumerate_multipartitions(d, n);
    if (fmt == ARIKI_FORMAT_JSON) {
      ariki::Json j = ariki::Json::array();
      for (const auto& m : all) j.push_back(ariki::to_json(m));
      emit(out, dump(j));
      return;
    }
    std::string s;
    for (const auto& m : all) s += ariki::format_multipartition(m) + "\n";
    emit(out, s);
  });
}

ariki_status ariki_a_value(const ariki_mp* m, const ariki_params* p, int k, int64_t* numerator, int* denominator) {
  return guarded([&] {
    need(numerator, "numerator");
    need(denominator, "denominator");
    const auto a = ariki::a_value(mp_of(m, p), params_of(p), k);
    *numerator = a.numerator;
    *denominator = a.denominator;
  });
}

ariki_status ariki_schur_valuation(const ariki_mp* m, const ariki_params* p, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = ariki::schur_valuation(mp_of(m, p), params_of(p));
  });
}

ariki_status ariki_symbol(const char* composition, const ariki_params* p, const char* weights, int k,
                          ariki_format fmt, char** out) {
  return guarded([&] {
    need(composition, "composition");
    check_format(fmt);
    const auto mc = ariki::parse_multicomposition(composition, p ? p->p.d() : 0);
    const auto b = ariki::ordinary_symbol(mc, k);
    ariki::ShiftedSymbol s;
    if (weights) {
      std::vector<ariki::Rational> m;
      std::stringstream ss(weights);
      std::string item;
      while (std::getline(ss, item, ',')) m.push_back(ariki::Rational::parse(item));
      s = ariki::shifted_symbol(b, m);
    } else {
      s = ariki::shifted_symbol(b, params_of(p));
    }
    if (fmt == ARIKI_FORMAT_JSON) {
      ariki::Json shifted = ariki::Json::array();
      for (int i = 0; i < b.d(); ++i) {
        ariki::Json row = ariki::Json::array();
        for (int j = 0; j < s.height; ++j) row.push_back(s.entry(i, j).str());
        shifted.push_back(row);
      }
      emit(out, dump({{"height", b.height}, {"B", b.rows}, {"B_shifted", shifted}}));
      return;
    }
    emit(out, ariki::format_symbol(b) + ariki::format_symbol(s));
  });
}

ariki_status ariki_is_flotw(const ariki_mp* m, const ariki_params* p, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = ariki::is_flotw(mp_of(m, p), params_of(p)) ? 1 : 0;
  });
}

ariki_status ariki_is_kleshchev(const ariki_mp* m, const ariki_params* p, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = ariki::is_kleshchev(mp_of(m, p), params_of(p)) ? 1 : 0;
  });
}

ariki_status ariki_a_sequence(const ariki_mp* m, const ariki_params* p, char** out) {
  return guarded([&] { emit(out, ariki::a_sequence(mp_of(m, p), params_of(p)).str()); });
}

ariki_status ariki_a_graph(const ariki_mp* m, const ariki_params* p, ariki_format fmt, char** out) {
  return guarded([&] {
    check_format(fmt);
    const auto g = ariki::a_graph(mp_of(m, p), params_of(p));
    emit(out, fmt == ARIKI_FORMAT_JSON ? dump(ariki::to_json(g)) : ariki::format_a_graph(g));
  });
}

ariki_status ariki_crystal(const ariki_params* p, int n, ariki_order order, ariki_format fmt, char** out) {
  return guarded([&] {
    check_format(fmt, true);
    const auto g = ariki::crystal_graph(params_of(p), n, to_order(order));
    if (fmt == ARIKI_FORMAT_DOT) {
      emit(out, ariki::crystal_to_dot(g));
    } else if (fmt == ARIKI_FORMAT_JSON) {
      emit(out, dump(ariki::to_json(g)));
    } else {
      std::string s;
      for (std::size_t r = 0; r < g.levels.size(); ++r) {
        s += "rank " + std::to_string(r) + " (" + std::to_string(g.levels[r].size()) + "):";
        for (const auto& m : g.levels[r]) s += " " + ariki::format_multipartition(m);
        s += "\n";
      }
      emit(out, s);
    }
  });
}

ariki_status ariki_bijection(const ariki_mp* m, const ariki_params* p, int inverse, ariki_mp** out) {
  return guarded([&] {
    need(out, "out");
    const auto& mm = mp_of(m, p);
    *out = new ariki_mp{inverse ? ariki::bijection_j_inverse(mm, params_of(p)) : ariki::bijection_j(mm, params_of(p))};
  });
}

ariki_status ariki_canonical_basis(const ariki_params* p, int n, ariki_format fmt, char** out) {
  return guarded([&] {
    check_format(fmt);
    const auto basis = ariki::canonical_basis(params_of(p), n);
    emit(out, fmt == ARIKI_FORMAT_JSON ? dump(ariki::to_json(basis)) : ariki::format_basis(basis));
  });
}

ariki_status ariki_decomposition_matrix(const ariki_params* p, int n, ariki_format fmt, char** out) {
  return guarded([&] {
    check_format(fmt);
    const auto m = ariki::decomposition_matrix(params_of(p), n);
    ariki::simple_module_a_values(m);
    emit(out, fmt == ARIKI_FORMAT_JSON ? dump(ariki::to_json(m)) : ariki::format_matrix(m));
  });
}

ariki_status ariki_typeb(int n, int e, ariki_typeb_query what, ariki_format fmt, char** out) {
  return guarded([&] {
    check_format(fmt);
    switch (what) {
      case ARIKI_TYPEB_BASIC_SET: {
        const auto set = ariki::canonical_basic_set_B(n, e);
        if (fmt == ARIKI_FORMAT_JSON) {
          ariki::Json j = ariki::Json::array();
          for (const auto& m : set) j.push_back(ariki::to_json(m));
          emit(out, dump(j));
        } else {
          std::string s;
          for (const auto& m : set) s += ariki::format_multipartition(m) + "\n";
          emit(out, s);
        }
        return;
      }
      case ARIKI_TYPEB_A_VALUES: {
        ariki::TypeBConfig::make(n, e);
        const auto all = ariki::enumerate_multipartitions(2, n);
        if (fmt == ARIKI_FORMAT_JSON) {
          ariki::Json j = ariki::Json::array();
          for (const auto& m : all) j.push_back({{"bipartition", ariki::to_json(m)}, {"a", ariki::a_value_typeB(m)}});
          emit(out, dump(j));
        } else {
          std::string s;
          for (const auto& m : all) s += ariki::format_multipartition(m) + ": " + std::to_string(ariki::a_value_typeB(m)) + "\n";
          emit(out, s);
        }
        return;
      }
      case ARIKI_TYPEB_DECOMP: {
        const auto m = ariki::decomposition_matrix_B(n, e);
        emit(out, fmt == ARIKI_FORMAT_JSON ? dump(ariki::to_json(m)) : ariki::format_matrix(m));
        return;
      }
    }
    throw ariki::InvalidArgument("unknown type B query");
  });
}

ariki_status ariki_verify(const int* caps, ariki_format fmt, char** report, int* all_passed) {
  return guarded([&] {
    need(all_passed, "all_passed");
    check_format(fmt);
    ariki::VerifyCaps c;
    if (caps) {
      for (int i = 0; i < 8; ++i)
        if (caps[i] < 0) throw ariki::InvalidArgument("rank caps must be nonnegative");
      c = {caps[0], caps[1], caps[2], caps[3], caps[4], caps[5], caps[6], caps[7]};
    }
    const auto results = ariki::run_verify(c);
    bool ok = true;
    ariki::Json j = ariki::Json::array();
    std::string s;
    for (const auto& r : results) {
      ok = ok && r.passed;
      j.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      s += (r.passed ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : ": " + r.detail) + "\n";
    }
    *all_passed = ok ? 1 : 0;
    emit(report, fmt == ARIKI_FORMAT_JSON ? dump(j) : s);
  });
}

}  // extern "C"
