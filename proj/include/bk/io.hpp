#pragma once

#include "bk/birkhoff.hpp"

namespace bk {

// {"elements": [labels], "covers": [[lo,hi] label pairs]}; the order closure
// of the cover edges is taken on load. Throws input_error with the parser's
// byte position on malformed JSON.
Poset load_poset_json(const std::string& text);

// Canonical emission: elements sorted, cover pairs sorted, two-space indent,
// trailing newline. Loading the output and serializing again is the identity.
std::string lattice_json(const Lattice& l);

// Burmeister format: "B", blank, |G|, |M|, blank, object names, attribute
// names, then one X/. row per object.
FormalContext load_cxt(const std::string& text);
std::string context_cxt(const FormalContext& k);

// First column object names, header row attribute names, cells 1/0 or
// x/empty. Errors carry line and column numbers.
FormalContext load_csv(const std::string& text);

std::string implication_line(const Implication& imp);  // "a, b -> c, d"
Implication parse_implication(const std::string& line);
std::string basis_text(const ImplicationBasis& b);  // one implication per line

std::string lattice_dot(const Lattice& l);
// Reduced labeling: each object is written above its object concept, each
// attribute below its attribute concept.
std::string concept_lattice_dot(const ConceptLattice& cl);
// Lattice diagram of the completed lattice; nodes of added ~not: generators
// are double-bordered and annotated, coincidences named in the annotation.
std::string completion_dot(const CompletionReport& r);

std::string report_json(const CompletionReport& r);

/** A loaded input file: a lattice (.json) or a context (.cxt/.csv). */
struct LoadedInput {
  bool is_context = false;
  Lattice lattice;        // valid iff !is_context
  FormalContext context;  // valid iff is_context
};

// Dispatches on the file extension; unknown extensions are input_errors.
LoadedInput load_input(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bk
