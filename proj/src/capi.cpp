#include "acta/acta.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "acta/decomposition.hpp"
#include "acta/error.hpp"
#include "acta/harness.hpp"
#include "acta/io.hpp"

struct acta_monoid {
  acta::MonoidPtr ptr;
};

struct acta_act {
  acta::FiniteAct act;
};

namespace {

  thread_local std::string last_error;

  char* dup(std::string const& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  template <typename F>
  acta_status guard(F&& f) noexcept {
    last_error.clear();
    try {
      return f();
    } catch (acta::Error const& e) {
      last_error = e.what();
      return static_cast<acta_status>(e.code());
    } catch (std::bad_alloc const&) {
      last_error = "out of memory";
      return ACTA_INTERNAL;
    } catch (std::exception const& e) {
      last_error = e.what();
      return ACTA_INTERNAL;
    } catch (...) {
      last_error = "unknown failure";
      return ACTA_INTERNAL;
    }
  }

  acta_status null_argument() {
    last_error = "null argument";
    return ACTA_NULL_ARGUMENT;
  }

}  // namespace

extern "C" {

char const* acta_status_name(acta_status status) {
  switch (status) {
    case ACTA_OK:
      return "Ok";
    case ACTA_COUNTEREXAMPLE:
      return "Counterexample";
    case ACTA_NULL_ARGUMENT:
      return "NullArgument";
    case ACTA_INTERNAL:
      return "Internal";
    default:
      return acta::to_string(static_cast<acta::ErrorCode>(status));
  }
}

char const* acta_last_error_message(void) {
  return last_error.c_str();
}

void acta_string_free(char* s) {
  std::free(s);
}

acta_status acta_monoid_parse(char const* text, acta_monoid** out) {
  if (!text || !out) {
    return null_argument();
  }
  return guard([&] {
    *out = new acta_monoid{acta::share(acta::io::parse_monoid(text))};
    return ACTA_OK;
  });
}

acta_status acta_monoid_standard(char const* family, uint32_t param, acta_monoid** out) {
  if (!family || !out) {
    return null_argument();
  }
  return guard([&] {
    *out = new acta_monoid{acta::share(acta::standard_monoid(family, param))};
    return ACTA_OK;
  });
}

void acta_monoid_free(acta_monoid* m) {
  delete m;
}

size_t acta_monoid_order(acta_monoid const* m) {
  return m ? m->ptr->order() : 0;
}

acta_status acta_monoid_to_json(acta_monoid const* m, char** out) {
  if (!m || !out) {
    return null_argument();
  }
  return guard([&] {
    *out = dup(acta::io::monoid_to_json(*m->ptr).dump());
    return ACTA_OK;
  });
}

acta_status acta_monoid_to_text(acta_monoid const* m, char** out) {
  if (!m || !out) {
    return null_argument();
  }
  return guard([&] {
    *out = dup(acta::io::monoid_to_text(*m->ptr));
    return ACTA_OK;
  });
}

acta_status acta_monoid_analyze_json(acta_monoid const* m, char** out) {
  if (!m || !out) {
    return null_argument();
  }
  return guard([&] {
    auto const a = acta::analyze_monoid(m->ptr);
    *out         = dup(acta::analysis_to_json(*m->ptr, a).dump());
    return ACTA_OK;
  });
}

acta_status acta_monoid_enumerate_json(uint32_t order, int up_to_iso, int allow_order_5,
                                       char** out, size_t* count) {
  if (!out) {
    return null_argument();
  }
  return guard([&] {
    auto const  all = acta::enumerate_monoids(order, up_to_iso != 0, allow_order_5 != 0);
    std::string text;
    for (auto const& m : all) {
      text += acta::io::monoid_to_json(m).dump();
      text += '\n';
    }
    *out = dup(text);
    if (count) {
      *count = all.size();
    }
    return ACTA_OK;
  });
}

acta_status acta_act_parse(char const* json_text, acta_monoid const* m, char const* base_dir,
                           acta_act** out) {
  if (!json_text || !out) {
    return null_argument();
  }
  return guard([&] {
    auto const j = [&] {
      try {
        return nlohmann::json::parse(json_text);
      } catch (nlohmann::json::exception const& e) {
        throw acta::Error(acta::ErrorCode::InvalidInput, e.what());
      }
    }();
    *out = new acta_act{acta::io::act_from_json(j, m ? m->ptr : nullptr,
                                                base_dir ? base_dir : "")};
    return ACTA_OK;
  });
}

void acta_act_free(acta_act* a) {
  delete a;
}

size_t acta_act_size(acta_act const* a) {
  return a ? a->act.size() : 0;
}

acta_status acta_act_to_json(acta_act const* a, char** out) {
  if (!a || !out) {
    return null_argument();
  }
  return guard([&] {
    *out = dup(acta::io::act_to_json(a->act).dump());
    return ACTA_OK;
  });
}

acta_status acta_act_components_json(acta_act const* a, char** out) {
  if (!a || !out) {
    return null_argument();
  }
  return guard([&] {
    *out = dup(acta::io::decomposition_to_json(acta::components(a->act)).dump());
    return ACTA_OK;
  });
}

acta_status acta_act_shortest_scheme_json(acta_act const* a, uint32_t from, uint32_t to,
                                          char** out) {
  if (!a || !out) {
    return null_argument();
  }
  return guard([&] {
    auto const s = acta::shortest_scheme(a->act, from, to);
    if (!s) {
      throw acta::Error(acta::ErrorCode::NotConnected,
                        std::to_string(from) + " and " + std::to_string(to)
                            + " lie in different components");
    }
    *out = dup(acta::io::scheme_to_json(*s).dump());
    return ACTA_OK;
  });
}

acta_status acta_scheme_validate(acta_act const* a, char const* scheme_json, char** reason) {
  if (!a || !scheme_json) {
    return null_argument();
  }
  return guard([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(scheme_json);
    } catch (nlohmann::json::exception const& e) {
      throw acta::Error(acta::ErrorCode::InvalidInput, e.what());
    }
    auto const error = acta::scheme_error(a->act, acta::io::scheme_from_json(j));
    if (reason) {
      *reason = error.empty() ? nullptr : dup(error);
    }
    return error.empty() ? ACTA_OK : ACTA_COUNTEREXAMPLE;
  });
}

acta_status acta_act_congruence_closure_json(acta_act const* a, char const* pairs_json,
                                             char** out) {
  if (!a || !pairs_json || !out) {
    return null_argument();
  }
  return guard([&] {
    std::vector<std::pair<acta::Index, acta::Index>> pairs;
    try {
      for (auto const& p : nlohmann::json::parse(pairs_json)) {
        if (!p.is_array() || p.size() != 2) {
          throw acta::Error(acta::ErrorCode::InvalidInput, "pairs are [x, y] arrays");
        }
        pairs.emplace_back(p[0].get<acta::Index>(), p[1].get<acta::Index>());
      }
    } catch (nlohmann::json::exception const& e) {
      throw acta::Error(acta::ErrorCode::InvalidInput, e.what());
    }
    for (auto const& [x, y] : pairs) {
      if (x >= a->act.size() || y >= a->act.size()) {
        throw acta::Error(acta::ErrorCode::IndexOutOfRange, "pair element outside the act");
      }
    }
    auto const rho = acta::congruence_closure(a->act, pairs);
    *out           = dup(acta::io::congruence_to_json(rho).dump());
    return ACTA_OK;
  });
}

acta_status acta_act_regular(acta_monoid const* m, acta_act** out) {
  if (!m || !out) {
    return null_argument();
  }
  return guard([&] {
    *out = new acta_act{acta::regular_act(m->ptr)};
    return ACTA_OK;
  });
}

acta_status acta_construct_cofree(acta_monoid const* m, uint32_t letters, acta_act** out) {
  if (!m || !out) {
    return null_argument();
  }
  return guard([&] {
    *out = new acta_act{acta::cofree_act(m->ptr, letters)};
    return ACTA_OK;
  });
}

acta_status acta_construct_an(acta_monoid const* m, uint32_t n, int64_t a, int64_t b,
                              acta_act** out) {
  if (!m || !out) {
    return null_argument();
  }
  return guard([&] {
    if ((a < 0) != (b < 0)) {
      throw acta::Error(acta::ErrorCode::InvalidInput, "give both a and b or neither");
    }
    auto chain = a < 0 ? acta::construct_An(m->ptr, n)
                       : acta::construct_An(m->ptr, n, static_cast<acta::Index>(a),
                                            static_cast<acta::Index>(b));
    *out = new acta_act{std::move(chain.act)};
    return ACTA_OK;
  });
}

acta_verify_bounds acta_verify_bounds_default(void) {
  acta::VerifyBounds const d;
  return acta_verify_bounds{static_cast<uint32_t>(d.max_order),
                            static_cast<uint32_t>(d.max_act_size),
                            static_cast<uint32_t>(d.samples), d.seed, d.allow_order_5 ? 1 : 0};
}

acta_status acta_verify_json(char const* suite, acta_verify_bounds const* bounds,
                             int with_timing, char** report) {
  if (!suite || !report) {
    return null_argument();
  }
  return guard([&] {
    acta::VerifyBounds b;
    if (bounds) {
      b.max_order     = bounds->max_order;
      b.max_act_size  = bounds->max_act_size;
      b.samples       = bounds->samples;
      b.seed          = bounds->seed;
      b.allow_order_5 = bounds->allow_order_5 != 0;
    }
    auto const r = acta::verify_theorem(suite, b);
    *report      = dup(acta::report_to_json(r, with_timing != 0).dump());
    return r.pass ? ACTA_OK : ACTA_COUNTEREXAMPLE;
  });
}

}  // extern "C"
