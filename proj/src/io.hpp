#pragma once

#include <string>

#include "graphs.hpp"
#include "matroid.hpp"

namespace chordmat::io {

/// `.gf2`: optional `#` comment lines, then one 0/1 row per line; column j is element j+1.
BinaryMatroid parse_gf2(const std::string& text);

/// `.circ`: first line `n`, then one circuit per line as 1-based labels.
GeneralMatroid parse_circ(const std::string& text);

/// `.graph`: optional `#` comments, optional `vertices a b c ...` header, then
/// edge lines `label u v` or `u v`. Either every edge carries a label (and the
/// labels are exactly 1..n) or none does, in which case labels follow file order.
LabeledGraph parse_graph(const std::string& text);

std::string format_gf2(const BinaryMatroid& m);
std::string format_graph(const LabeledGraph& g);

/// Whole file as a string; throws ParseError when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace chordmat::io
