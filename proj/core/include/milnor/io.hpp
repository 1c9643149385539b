#pragma once

#include <string>

#include "milnor/arcs.hpp"
#include "milnor/classify.hpp"
#include "milnor/homology.hpp"
#include "milnor/hurwitz.hpp"
#include "milnor/quiver.hpp"

// Text and JSON codecs. All JSON output is single-line with fixed key order,
// so equal values serialize to equal bytes. Parsers throw
// std::invalid_argument with a readable message on malformed input.
namespace milnor::io {

// Whitespace-separated signed integers, e.g. "1 2 -1".
braid_word parse_braid_word(int strands, const std::string& text);
std::string braid_word_text(const braid_word& w);

// `base=k,l; conj="1 -2 1"`; the conj part may be omitted.
arc parse_arc_text(int m, const std::string& text,
                   handedness hand = handedness::right);
std::string arc_text(const arc& a);

// {"base":[k,l],"conjugator":[1,-2,1]}
arc parse_arc_json(int m, const std::string& text,
                   handedness hand = handedness::right);
std::string arc_json(const arc& a);

// JSON integer array.
std::string class_json(const homology_class& c);

// {"dims":[...],"maps":[[rows of 0/1],...]}; m is the length of dims.
quiver_rep parse_rep_json(const std::string& text);
std::string rep_json(const quiver_rep& R);

// [{"k":..,"l":..,"shift":..,"mult":..},...]
std::string barcode_json(const barcode& bc);

// {"arcs":[...]} with arcs as in arc_json.
std::string tuple_json(const vanishing_tuple& T);
// Space-separated entries, (k,l) for chords and (k,l)~"word" otherwise.
std::string tuple_text(const vanishing_tuple& T);

std::string report_json(const classification_report& r);
std::string report_text(const classification_report& r);

}  // namespace milnor::io
