#pragma once

// Text formats for rings, bimodules, E-systems, crossed bimodules, sections
// and extensions. Files are whitespace-separated tokens with '#' comments.
// A ring field inside an E-system or extension file is either a path,
// resolved against the directory of the including file, or an inline block
// starting with the keyword of the embedded structure.

#include <string>
#include <vector>

#include "annring/anncat.hpp"
#include "annring/crossed.hpp"
#include "annring/extensions.hpp"
#include "annring/ring.hpp"

namespace annring::io {

// Throws ParseError with the line and column of the offending token, or
// AxiomError when well-formed tables violate the axioms.
RingPtr parse_ring(const std::string& text, const std::string& file = "<text>");
Bimodule parse_module(const RingPtr& ring, const std::string& text, const std::string& file = "<text>");
ESystem parse_esystem(const std::string& text, const std::string& file = "<text>");
CrossedBimodule parse_crossed(const std::string& text, const std::string& file = "<text>");
Section parse_section(const ESystem& es, const std::string& text, const std::string& file = "<text>");
Extension parse_extension(const std::string& text, const std::string& file = "<text>");

// Tables only, without axiom checks, for files meant to fail validation.
RingTables parse_ring_tables(const std::string& text, const std::string& file = "<text>");

std::string read_file(const std::string& path);  // throws Error
RingPtr load_ring(const std::string& path);
Bimodule load_module(const RingPtr& ring, const std::string& path);
ESystem load_esystem(const std::string& path);
CrossedBimodule load_crossed(const std::string& path);
Section load_section(const ESystem& es, const std::string& path);
Extension load_extension(const std::string& path);

// First keyword of a file: "ring", "module", "esystem", "crossed",
// "section" or "extension".
std::string file_kind(const std::string& text, const std::string& file = "<text>");

// Writers emit self-contained files (embedded rings inline) that parse back
// to equal objects.
std::string write_ring(const FiniteRing& r);
std::string write_module(const Bimodule& m, const std::string& name);
std::string write_esystem(const ESystem& es);
std::string write_crossed(const CrossedBimodule& xb);
std::string write_section(const Section& sec);
std::string write_extension(const Extension& ext, const std::string& name);

// "id" or comma-separated pairs "u:x" defining every element of the source.
std::vector<int> parse_map(const std::string& text, int source_order, int target_order);

}  // namespace annring::io
