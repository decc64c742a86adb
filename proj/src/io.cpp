#include "acta/io.hpp"

#include <fstream>
#include <sstream>

#include "acta/error.hpp"

namespace acta::io {

  namespace {

    Table table_from_json(json const& j, char const* what) {
      if (!j.is_array()) {
        throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an array of rows");
      }
      Table t;
      for (auto const& row : j) {
        if (!row.is_array()) {
          throw Error(ErrorCode::InvalidInput, std::string(what) + " rows must be arrays");
        }
        std::vector<Index> r;
        for (auto const& v : row) {
          if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw Error(ErrorCode::IndexOutOfRange,
                        std::string(what) + " entries must be nonnegative integers");
          }
          r.push_back(v.get<Index>());
        }
        t.push_back(std::move(r));
      }
      return t;
    }

    std::vector<std::string> names_from_json(json const& j, char const* key) {
      std::vector<std::string> names;
      if (!j.contains(key)) {
        return names;
      }
      for (auto const& n : j.at(key)) {
        if (!n.is_string()) {
          throw Error(ErrorCode::InvalidInput, std::string(key) + " must be strings");
        }
        names.push_back(n.get<std::string>());
      }
      return names;
    }

    std::size_t size_field(json const& j, char const* key) {
      if (!j.contains(key) || !j.at(key).is_number_integer()
          || j.at(key).get<long long>() < 1) {
        throw Error(ErrorCode::InvalidInput,
                    std::string("missing or invalid \"") + key + "\"");
      }
      return j.at(key).get<std::size_t>();
    }

    template <typename F>
    auto guarded(F&& f) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw Error(ErrorCode::InvalidInput, e.what());
      }
    }

  }  // namespace

  json monoid_to_json(FiniteMonoid const& m) {
    return json{{"order", m.order()}, {"elements", m.names()}, {"table", m.rows()}};
  }

  FiniteMonoid monoid_from_json(json const& j) {
    return guarded([&] {
      if (!j.is_object()) {
        throw Error(ErrorCode::InvalidInput, "monoid JSON must be an object");
      }
      std::size_t const n = size_field(j, "order");
      if (!j.contains("table")) {
        throw Error(ErrorCode::InvalidInput, "missing \"table\"");
      }
      auto t = table_from_json(j.at("table"), "table");
      if (t.size() != n) {
        throw Error(ErrorCode::InvalidInput, "table has " + std::to_string(t.size())
                                                 + " rows, order is " + std::to_string(n));
      }
      return FiniteMonoid::validate(t, names_from_json(j, "elements"));
    });
  }

  std::string monoid_to_text(FiniteMonoid const& m) {
    std::ostringstream os;
    os << m.order() << '\n';
    for (Index i = 0; i < m.order(); ++i) {
      for (Index j = 0; j < m.order(); ++j) {
        os << (j ? " " : "") << m.product(i, j);
      }
      os << '\n';
    }
    return os.str();
  }

  FiniteMonoid monoid_from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    long long          n = 0;
    if (!(is >> n) || n < 1) {
      throw Error(ErrorCode::InvalidInput, "text monoid must start with its order");
    }
    Table t(static_cast<std::size_t>(n), std::vector<Index>(static_cast<std::size_t>(n)));
    for (auto& row : t) {
      for (auto& v : row) {
        long long x = 0;
        if (!(is >> x)) {
          throw Error(ErrorCode::InvalidInput, "text monoid table is truncated");
        }
        if (x < 0) {
          throw Error(ErrorCode::IndexOutOfRange, "negative table entry");
        }
        v = static_cast<Index>(x);
      }
    }
    std::string extra;
    if (is >> extra) {
      throw Error(ErrorCode::InvalidInput, "trailing data after text monoid table");
    }
    return FiniteMonoid::validate(t);
  }

  FiniteMonoid parse_monoid(std::string_view text) {
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      return guarded([&] { return monoid_from_json(json::parse(text)); });
    }
    return monoid_from_text(text);
  }

  json act_to_json(FiniteAct const& a) {
    return json{{"monoid", monoid_to_json(a.monoid())},
                {"size", a.size()},
                {"elements", a.names()},
                {"action", a.rows()}};
  }

  FiniteAct act_from_json(json const& j, MonoidPtr const& fallback,
                          std::filesystem::path const& base_dir) {
    return guarded([&] {
      if (!j.is_object()) {
        throw Error(ErrorCode::InvalidInput, "act JSON must be an object");
      }
      MonoidPtr monoid;
      if (j.contains("monoid") && !j.at("monoid").is_null()) {
        auto const& src = j.at("monoid");
        if (src.is_string()) {
          std::filesystem::path p = src.get<std::string>();
          if (p.is_relative() && !base_dir.empty()) {
            p = base_dir / p;
          }
          monoid = share(parse_monoid(read_file(p)));
        } else {
          monoid = share(monoid_from_json(src));
        }
        if (fallback && !fallback->same_table(*monoid)) {
          throw Error(ErrorCode::MixedMonoids,
                      "act's monoid differs from the supplied monoid");
        }
        if (fallback) {
          monoid = fallback;
        }
      } else if (fallback) {
        monoid = fallback;
      } else {
        throw Error(ErrorCode::InvalidInput, "act has no monoid");
      }
      std::size_t const m = size_field(j, "size");
      if (!j.contains("action")) {
        throw Error(ErrorCode::InvalidInput, "missing \"action\"");
      }
      auto t = table_from_json(j.at("action"), "action");
      if (t.size() != m) {
        throw Error(ErrorCode::InvalidInput, "action has " + std::to_string(t.size())
                                                 + " rows, size is " + std::to_string(m));
      }
      return FiniteAct::validate(monoid, t, names_from_json(j, "elements"));
    });
  }

  json congruence_to_json(RightCongruence const& rho) {
    return json{{"blocks", rho.blocks()}};
  }

  RightCongruence congruence_from_json(FiniteAct const& a, json const& j) {
    return guarded([&] {
      if (!j.is_object() || !j.contains("blocks")) {
        throw Error(ErrorCode::InvalidInput, "congruence JSON needs \"blocks\"");
      }
      return RightCongruence::from_blocks(a, table_from_json(j.at("blocks"), "blocks"));
    });
  }

  json scheme_to_json(Scheme const& s) {
    json steps = json::array();
    for (auto const& st : s.steps) {
      steps.push_back({st.element, st.left, st.right});
    }
    return json{{"from", s.from}, {"to", s.to}, {"steps", steps}};
  }

  Scheme scheme_from_json(json const& j) {
    return guarded([&] {
      Scheme s;
      s.from = j.at("from").get<Index>();
      s.to   = j.at("to").get<Index>();
      for (auto const& st : j.at("steps")) {
        if (!st.is_array() || st.size() != 3) {
          throw Error(ErrorCode::InvalidInput, "scheme steps are [a, s, t] triples");
        }
        s.steps.push_back({st[0].get<Index>(), st[1].get<Index>(), st[2].get<Index>()});
      }
      return s;
    });
  }

  json decomposition_to_json(Decomposition const& d) {
    return json{{"count", d.count}, {"components", d.blocks()}};
  }

  json verdict_to_json(FlatnessVerdict const& v) {
    json evidence = json::array();
    evidence.push_back({{"check", "comparison map over pairs of left acts"},
                        {"pairs_checked", v.pairs_checked},
                        {"left_square_indecomposable", v.left_square_indecomposable},
                        {"violations", v.violations}});
    return json{{"finitely_product_flat", v.finitely_product_flat},
                {"product_flat", v.product_flat},
                {"super_flat", v.super_flat},
                {"left_zeros", v.left_zeros},
                {"evidence", evidence}};
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::InvalidInput, "cannot read " + path.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

}  // namespace acta::io
