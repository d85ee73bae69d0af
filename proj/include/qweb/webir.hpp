// Web diagrams: objects, generators, slice-structured diagrams, the text DSL,
// braid words and macro expansion into the primitive generators.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qweb/scalar.hpp"

namespace qweb {

enum class Orient : std::uint8_t { Up, Down };

struct ObjItem {
  Orient o = Orient::Up;
  int k = 0;
  std::string to_string() const { return (o == Orient::Up ? "u" : "d") + std::to_string(k); }
  friend bool operator==(const ObjItem&, const ObjItem&) = default;
};

using WebObject = std::vector<ObjItem>;

WebObject normalize_object(const WebObject& w);  // drops label-0 entries
std::string object_to_string(const WebObject& w);
WebObject concat(const WebObject& a, const WebObject& b);
// Reversed word with flipped orientations.
WebObject dual_object(const WebObject& w);
WebObject ups(int count, int k = 1);
WebObject downs(int count, int k = 1);

enum class WebKind {
  Id, Dot, DDot, Merge, Split, DMerge, DSplit,
  LCup, LCap, RCup, RCap, Over, Under, Clasp, Block,
};

struct WebDiagram;
struct LinearWeb;

// Generators are immutable values; Block wraps a linear combination of
// diagrams produced by macro expansion and keeps the macro's name.
struct WebGenerator {
  WebKind kind = WebKind::Id;
  int k = 0, l = 0;
  ObjItem a, b;
  WebObject src, tgt;
  int parity = 0;
  std::string name;  // Block only
  std::shared_ptr<const LinearWeb> body;

  std::string to_string() const;
  bool is_identity() const { return kind == WebKind::Id; }
  bool is_primitive() const;
  friend bool operator==(const WebGenerator& x, const WebGenerator& y);
};

WebGenerator gen_id(const WebObject& obj);
WebGenerator gen_dot(int k);
WebGenerator gen_ddot(int k);
WebGenerator gen_merge(int k, int l);
WebGenerator gen_split(int k, int l);
WebGenerator gen_dmerge(int k, int l);
WebGenerator gen_dsplit(int k, int l);
WebGenerator gen_lcup(int k);
WebGenerator gen_lcap(int k);
WebGenerator gen_rcup(int k);
WebGenerator gen_rcap(int k);
// xo / xu: the strand entering at the bottom left passes over / under.
WebGenerator gen_cross(bool over, const ObjItem& a, const ObjItem& b);
WebGenerator gen_clasp(int k);
WebGenerator gen_block(const std::string& name, std::shared_ptr<const LinearWeb> body);

using Slice = std::vector<WebGenerator>;

// Slices are listed bottom to top; "a ; b" applies a first.
struct WebDiagram {
  WebObject src, tgt;
  std::vector<Slice> slices;

  int parity() const;
  std::string to_string() const;
  friend bool operator==(const WebDiagram&, const WebDiagram&);
};

struct LinearWeb {
  WebObject src, tgt;
  int parity = 0;
  std::vector<std::pair<ScalarQ, WebDiagram>> terms;
};

WebObject slice_source(const Slice& s);
WebObject slice_target(const Slice& s);

WebDiagram identity_diagram(const WebObject& obj);
WebDiagram diagram_of(const WebGenerator& g);
WebDiagram from_slices(std::vector<Slice> slices);  // checks boundaries
WebDiagram compose(const WebDiagram& top, const WebDiagram& bottom);
WebDiagram tensor(const WebDiagram& left, const WebDiagram& right);
// Composes bottom to top: stack({a, b, c}) = c after b after a.
WebDiagram stack(const std::vector<WebDiagram>& ds);

WebDiagram parse_web(const std::string& text);

struct BraidWord {
  std::vector<int> labels;
  std::vector<int> letters;  // +i / -i for s_i and its inverse
  std::string to_string() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord parse_braid(const std::string& text);

// One level of expansion for a macro generator.
LinearWeb expand_generator(const WebGenerator& g);
// Replaces every macro by a Block holding its (recursively expanded) body.
WebDiagram expand_macros(const WebDiagram& d);
bool is_primitive_diagram(const WebDiagram& d);

// Building blocks shared with other modules.
WebDiagram merge_ones(int k);   // u1^k -> uk
WebDiagram split_ones(int k);   // uk -> u1^k
WebDiagram dmerge_ones(int k);  // d1^k -> dk
WebDiagram dsplit_ones(int k);  // dk -> d1^k
WebDiagram lcup_of(const WebObject& a);  // 1 -> A A*
WebDiagram lcap_of(const WebObject& b);  // B* B -> 1
// (LCap_B (x) 1)(1 (x) f (x) 1)(1 (x) LCup_A) for f : A -> B.
WebDiagram mate(const WebDiagram& f);
// Reduced word of a permutation as crossing positions (1-based), applied first to last.
std::vector<int> reduced_word(const std::vector<int>& perm);
int inversions(const std::vector<int>& perm);
// Thin crossings at the given positions on u1^k.
WebDiagram crossing_word(int k, const std::vector<int>& positions, bool over = true);

}  // namespace qweb
