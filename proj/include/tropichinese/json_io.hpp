#pragma once

// JSON encodings.
//
//   TropMatrix        {"dim": d, "entries": [[e, ...], ...]}, -inf as "-inf"
//   BlockDiagMatrix   {"blocks": [matrix, ...]}
//   ExponentTuple     {"rank": n, "k": [[j, i, value], ...]}  nonzero only
//   Representation    {"rank": n, "generators": {"a1": blockdiag, ...},
//                      "lift_order": [1, 2, "n-1"]}
//   AffineExponentMap {"rank": n, "rows": [{"block", "position",
//                      "coeffs": {"k_ji": c}, "constant"}, ...]}
//   BlockSelection    {"selected": [...], "rank": r,
//                      "certificate": {"pivot_rows": [...], "pivot_cols": [...]}}

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "minimizer.hpp"
#include "representation.hpp"
#include "trop.hpp"
#include "words.hpp"

namespace tropichinese {

using Json = nlohmann::json;

inline Json to_json(TropScalar x) {
  if (x.is_bottom()) return "-inf";
  return x.value();
}

inline TropScalar scalar_from_json(Json const& j) {
  if (j.is_string() && j.get<std::string>() == "-inf") return kBottom;
  if (j.is_number_integer()) return TropScalar(j.get<std::int64_t>());
  throw ParseError("tropical scalar must be an integer or \"-inf\", got " + j.dump());
}

inline Json to_json(TropMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t p = 0; p < m.dim(); ++p) {
    Json row = Json::array();
    for (std::size_t q = 0; q < m.dim(); ++q) row.push_back(to_json(m(p, q)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

inline TropMatrix matrix_from_json(Json const& j) {
  try {
    auto const dim = j.at("dim").get<std::size_t>();
    auto const& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != dim) throw ParseError("entries must have dim rows");
    TropMatrix m(dim);
    for (std::size_t p = 0; p < dim; ++p) {
      if (!rows[p].is_array() || rows[p].size() != dim)
        throw ParseError("every row must have dim entries");
      for (std::size_t q = 0; q < dim; ++q) m(p, q) = scalar_from_json(rows[p][q]);
    }
    if (m.is_upper_triangular()) m.mark_triangular();
    return m;
  } catch (Json::exception const& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  } catch (ShapeError const& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  }
}

inline Json to_json(BlockDiagMatrix const& m) {
  Json blocks = Json::array();
  for (auto const& b : m.blocks()) blocks.push_back(to_json(b));
  return {{"blocks", std::move(blocks)}};
}

inline BlockDiagMatrix blockdiag_from_json(Json const& j) {
  if (!j.contains("blocks") || !j["blocks"].is_array()) throw ParseError("missing \"blocks\" array");
  std::vector<TropMatrix> blocks;
  for (auto const& b : j["blocks"]) blocks.push_back(matrix_from_json(b));
  try {
    return BlockDiagMatrix(std::move(blocks));
  } catch (Error const& e) {
    throw ParseError(std::string("bad block-diagonal JSON: ") + e.what());
  }
}

inline Json to_json(ExponentTuple const& k) {
  Json entries = Json::array();
  for (std::size_t j = 1; j <= k.rank(); ++j)
    for (std::size_t i = 1; i <= j; ++i)
      if (auto v = k.at(j, i); v != 0) entries.push_back({j, i, v});
  return {{"rank", k.rank()}, {"k", std::move(entries)}};
}

inline ExponentTuple tuple_from_json(Json const& j) {
  try {
    ExponentTuple k(j.at("rank").get<std::size_t>());
    for (auto const& e : j.at("k")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("tuple entries are [j, i, value]");
      k.set(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::int64_t>());
    }
    return k;
  } catch (Json::exception const& e) {
    throw ParseError(std::string("bad tuple JSON: ") + e.what());
  } catch (DomainError const& e) {
    throw ParseError(std::string("bad tuple JSON: ") + e.what());
  }
}

/// "k_31" for rank <= 9, "k_10_3" beyond.
inline std::string coeff_key(std::size_t rank, std::size_t j, std::size_t i) {
  if (rank <= 9) return "k_" + std::to_string(j) + std::to_string(i);
  return "k_" + std::to_string(j) + "_" + std::to_string(i);
}

inline Json to_json(Representation const& rep) {
  Json gens = Json::object();
  for (std::size_t j = 1; j <= rep.rank(); ++j) gens["a" + std::to_string(j)] = to_json(rep.image(j));
  Json order = Json::array();
  for (auto ell : rep.lift_order()) {
    if (ell + 1 == rep.rank() && ell > 2)
      order.push_back("n-1");
    else
      order.push_back(ell);
  }
  return {{"rank", rep.rank()},
          {"block_count", rep.block_count()},
          {"generators", std::move(gens)},
          {"lift_order", std::move(order)}};
}

inline Representation representation_from_json(Json const& j) {
  try {
    auto const n = j.at("rank").get<std::size_t>();
    std::vector<BlockDiagMatrix> imgs;
    for (std::size_t a = 1; a <= n; ++a)
      imgs.push_back(blockdiag_from_json(j.at("generators").at("a" + std::to_string(a))));
    std::vector<std::size_t> order;
    if (j.contains("lift_order"))
      for (auto const& e : j["lift_order"]) {
        if (e.is_string() && e.get<std::string>() == "n-1")
          order.push_back(n - 1);
        else
          order.push_back(e.get<std::size_t>());
      }
    return Representation(n, std::move(imgs), std::move(order));
  } catch (Json::exception const& e) {
    throw ParseError(std::string("bad representation JSON: ") + e.what());
  } catch (ShapeError const& e) {
    throw ParseError(std::string("bad representation JSON: ") + e.what());
  }
}

inline Json to_json(AffineExponentMap const& map) {
  Json rows = Json::array();
  for (auto const& r : map.rows()) {
    Json coeffs = Json::object();
    for (std::size_t j = 1; j <= map.rank(); ++j)
      for (std::size_t i = 1; i <= j; ++i)
        if (auto c = r.coeffs[tuple_index(j, i)]; c != 0) coeffs[coeff_key(map.rank(), j, i)] = c;
    rows.push_back({{"block", r.block},
                    {"position", to_string(r.pos)},
                    {"coeffs", std::move(coeffs)},
                    {"constant", r.constant}});
  }
  return {{"rank", map.rank()}, {"rows", std::move(rows)}};
}

inline AffineExponentMap affine_from_json(Json const& j) {
  try {
    auto const n = j.at("rank").get<std::size_t>();
    std::vector<AffineRow> rows;
    for (auto const& r : j.at("rows")) {
      AffineRow row;
      row.block = r.at("block").get<std::size_t>();
      auto const pos = r.at("position").get<std::string>();
      if (pos == "11") row.pos = EntryPos::k11;
      else if (pos == "12") row.pos = EntryPos::k12;
      else if (pos == "22") row.pos = EntryPos::k22;
      else throw ParseError("bad position '" + pos + "'");
      row.coeffs.assign(tuple_size(n), 0);
      for (std::size_t jj = 1; jj <= n; ++jj)
        for (std::size_t i = 1; i <= jj; ++i)
          if (auto key = coeff_key(n, jj, i); r.at("coeffs").contains(key))
            row.coeffs[tuple_index(jj, i)] = r["coeffs"][key].get<std::int64_t>();
      row.constant = r.at("constant").get<std::int64_t>();
      rows.push_back(std::move(row));
    }
    return AffineExponentMap(n, std::move(rows));
  } catch (Json::exception const& e) {
    throw ParseError(std::string("bad affine map JSON: ") + e.what());
  } catch (ShapeError const& e) {
    throw ParseError(std::string("bad affine map JSON: ") + e.what());
  }
}

inline Json to_json(BlockSelection const& sel) {
  return {{"selected", sel.selected},
          {"rank", sel.rank},
          {"certificate", {{"pivot_rows", sel.pivot_rows}, {"pivot_cols", sel.pivot_cols}}}};
}

inline BlockSelection selection_from_json(Json const& j) {
  try {
    BlockSelection sel;
    sel.selected = j.at("selected").get<std::vector<std::size_t>>();
    sel.rank = j.at("rank").get<std::size_t>();
    sel.pivot_rows = j.at("certificate").at("pivot_rows").get<std::vector<std::size_t>>();
    sel.pivot_cols = j.at("certificate").at("pivot_cols").get<std::vector<std::size_t>>();
    return sel;
  } catch (Json::exception const& e) {
    throw ParseError(std::string("bad selection JSON: ") + e.what());
  }
}

}  // namespace tropichinese
