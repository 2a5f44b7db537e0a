#pragma once

#include <string>
#include <vector>

#include "relfix/core.hpp"
#include "relfix/search.hpp"

namespace relfix {

struct ParseError : ModelError {
  int line;
  int column;
  ParseError(const std::string& msg, int line, int column)
      : ModelError(std::to_string(line) + ":" + std::to_string(column) +
                   ": " + msg),
        line(line),
        column(column) {}
};

struct NamedMap {
  std::string name;
  std::string relset;  // name of the related set the map acts on
  EndoMap map;

  bool operator==(const NamedMap&) const = default;
};

struct NamedRelSet {
  std::string name;
  RelatedSet rel;

  bool operator==(const NamedRelSet&) const = default;
};

struct NamedConjecture {
  std::string name;
  Conjecture conjecture;
};

// Declaration order is preserved; it is the canonical serialization order.
struct Model {
  std::vector<NamedRelSet> relsets;
  std::vector<NamedMap> maps;
  std::vector<NamedConjecture> conjectures;

  const NamedRelSet* find_relset(const std::string& name) const;
  const NamedMap* find_map(const std::string& name) const;
  const NamedConjecture* find_conjecture(const std::string& name) const;
};

// Grammar:
//   model      := (relset | map | conjecture)* ;
//   relset     := "relset" IDENT "{" "elements:" IDENT+ ";"
//                 "le:" (pair ("," pair)*)? ";" "}" ;
//   pair       := IDENT IDENT ;
//   map        := "map" IDENT ":" IDENT "{" (IDENT "->" IDENT ";")+ "}" ;
//   conjecture := "conjecture" IDENT "{" "assume:" atom ("," atom)* ";"
//                 "conclude:" atom ";" "}" ;
// "#" comments to end of line; IDENT = [A-Za-z_][A-Za-z0-9_]*. Element
// order in "elements:" fixes carrier indices. LF and CRLF both accepted.
Model parse_model(const std::string& text);

// Canonical form: parse(serialize(m)) is structurally equal to m, and
// serialize is idempotent on canonical text. LF line endings.
std::string serialize_model(const Model& m);

}  // namespace relfix
