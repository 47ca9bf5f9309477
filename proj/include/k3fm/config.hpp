#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "k3fm/errors.hpp"
#include "k3fm/lattice.hpp"
#include "k3fm/mukai.hpp"
#include "k3fm/surface.hpp"

namespace k3fm {

/// Parsed surface description file. Format: one directive per line,
/// '#' starts a comment, integers only.
///
///   rank 2
///   gram 2 0
///   gram 0 -12
///   H 1 0
///   ell 0 1
///   labels H l       # optional basis names
struct SurfaceConfig {
  int rank = 0;
  std::vector<std::vector<BigInt>> gram;
  std::vector<BigInt> h_coords;
  std::vector<BigInt> ell_coords;
  std::vector<std::string> labels;
};

namespace detail {

inline BigInt parse_integer_token(const std::string& tok, const std::string& where) {
  try {
    return BigInt(std::string_view(tok));
  } catch (const std::invalid_argument&) {
    throw ParseError(where + ": expected an integer, got \"" + tok + "\"");
  }
}

}  // namespace detail

inline SurfaceConfig parse_surface_config(std::istream& in, const std::string& name) {
  SurfaceConfig cfg;
  bool have_h = false, have_ell = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = name + ":" + std::to_string(lineno);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string key;
    if (!(tokens >> key)) continue;
    std::vector<std::string> rest;
    for (std::string t; tokens >> t;) rest.push_back(t);
    if (key == "rank") {
      if (cfg.rank != 0) throw ParseError(where + ": duplicate rank directive");
      if (rest.size() != 1) throw ParseError(where + ": rank takes one value");
      BigInt r = detail::parse_integer_token(rest[0], where);
      if (r < BigInt(1) || r > BigInt(64)) throw ParseError(where + ": rank out of range");
      cfg.rank = static_cast<int>(r.to_longlong());
    } else if (key == "gram") {
      if (cfg.rank == 0) throw ParseError(where + ": rank must come before gram rows");
      if (static_cast<int>(rest.size()) != cfg.rank)
        throw ParseError(where + ": gram row needs " + std::to_string(cfg.rank) + " entries");
      if (static_cast<int>(cfg.gram.size()) >= cfg.rank)
        throw ParseError(where + ": too many gram rows");
      std::vector<BigInt> row;
      for (const auto& t : rest) row.push_back(detail::parse_integer_token(t, where));
      cfg.gram.push_back(std::move(row));
    } else if (key == "H" || key == "ell") {
      if (cfg.rank == 0) throw ParseError(where + ": rank must come before " + key);
      if (static_cast<int>(rest.size()) != cfg.rank)
        throw ParseError(where + ": " + key + " needs " + std::to_string(cfg.rank) + " coordinates");
      std::vector<BigInt> coords;
      for (const auto& t : rest) coords.push_back(detail::parse_integer_token(t, where));
      if (key == "H") {
        if (have_h) throw ParseError(where + ": duplicate H directive");
        cfg.h_coords = std::move(coords);
        have_h = true;
      } else {
        if (have_ell) throw ParseError(where + ": duplicate ell directive");
        cfg.ell_coords = std::move(coords);
        have_ell = true;
      }
    } else if (key == "labels") {
      if (cfg.rank == 0) throw ParseError(where + ": rank must come before labels");
      if (static_cast<int>(rest.size()) != cfg.rank)
        throw ParseError(where + ": labels needs " + std::to_string(cfg.rank) + " names");
      cfg.labels = rest;
    } else {
      throw ParseError(where + ": unknown directive \"" + key + "\"");
    }
  }
  if (cfg.rank == 0) throw ParseError(name + ": missing rank directive");
  if (static_cast<int>(cfg.gram.size()) != cfg.rank)
    throw ParseError(name + ": expected " + std::to_string(cfg.rank) + " gram rows, got " +
                     std::to_string(cfg.gram.size()));
  if (!have_h) throw ParseError(name + ": missing H directive");
  if (!have_ell) throw ParseError(name + ": missing ell directive");
  return cfg;
}

/// Builds the validated lattice and classes. Lattice violations surface as
/// LatticeError (bad input), not as math-check failures.
inline SurfaceData build_surface_data(const SurfaceConfig& cfg) {
  LatticePtr lat = PicardLattice::create(cfg.gram, cfg.labels);
  return SurfaceData{lat, DivisorClass(lat, cfg.h_coords), DivisorClass(lat, cfg.ell_coords)};
}

/// Vector syntax "r;c1,c2,...;s" with semicolon-separated graded parts.
inline MukaiVector parse_mukai_vector(const std::string& text, const LatticePtr& lattice) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw ParseError("vector \"" + text + "\": expected three ';'-separated parts r;c1,...;s");
  BigInt r = detail::parse_integer_token(parts[0], "vector rank part");
  std::vector<BigInt> coords;
  std::string tok;
  for (char ch : parts[1] + ",") {
    if (ch == ',') {
      if (tok.empty()) throw ParseError("vector \"" + text + "\": empty coordinate");
      coords.push_back(detail::parse_integer_token(tok, "vector c1 part"));
      tok.clear();
    } else {
      tok += ch;
    }
  }
  if (static_cast<int>(coords.size()) != lattice->rank())
    throw ParseError("vector \"" + text + "\": c1 needs " + std::to_string(lattice->rank()) +
                     " coordinates, got " + std::to_string(coords.size()));
  BigInt s = detail::parse_integer_token(parts[2], "vector s part");
  return MukaiVector(std::move(r), DivisorClass(lattice, std::move(coords)), std::move(s));
}

/// Inverse of parse_mukai_vector, used by the reports.
inline std::string format_mukai_vector(const MukaiVector& u) {
  std::string out = u.r.to_string() + ";";
  for (size_t i = 0; i < u.c1.coords().size(); ++i) {
    if (i) out += ",";
    out += u.c1.coords()[i].to_string();
  }
  return out + ";" + u.s.to_string();
}

}  // namespace k3fm
