#pragma once

#include <iosfwd>
#include <string>

#include "sgc/graph.hpp"

namespace sgc {

// Instance format, line oriented: `#` comments, header `p sg <n> <m>`, then
// m lines `e <u> <v> <+|->` with 1-indexed vertices (loops as `e u u -`).
// Emission is canonical: header first, edges in id order.
SignedMultigraph parse_instance(std::istream& in);
SignedMultigraph parse_instance_text(const std::string& text);
std::string emit_instance(const SignedMultigraph& g);

// Cover format, one member per line; edge ids are 0-indexed into the
// instance's edge order, vertices 1-indexed:
//   balanced: e3 e7 e9
//   short: [e0 e1] @v5 [e2 e3]
//   long: [e1] (e4 e5) [e2]
CoverFamily parse_cover(const SignedMultigraph& g, std::istream& in);
CoverFamily parse_cover_text(const SignedMultigraph& g,
                             const std::string& text);
std::string emit_cover(const CoverFamily& f);

SignedMultigraph load_instance(const std::string& path);
CoverFamily load_cover(const SignedMultigraph& g, const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace sgc
