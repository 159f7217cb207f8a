#pragma once

#include <string>
#include <string_view>

#include "ydlcat/grpalg.hpp"
#include "ydlcat/ydl.hpp"

namespace ydlcat {

/// Line-oriented text format shared by all objects:
///
///   ydlcat 1
///   kind hopf|module|quadruple|graded
///   field rational | field prime <p>
///   ...
///
/// Matrices are written sparsely as
///
///   matrix <name> <rows> <cols>
///   <i> <j> <value>
///   end
///
/// with values in lowest terms ("3", "-1/2") or as residues. Blank lines and
/// lines starting with '#' are ignored. Parsers throw ParseError (with the
/// line number) on malformed text; well-formed text describing an invalid
/// object raises the usual semantic errors (DimensionMismatch,
/// InvalidAutomorphism, ...).

/// The value of the `kind` line. Throws ParseError when the header is
/// missing.
std::string file_kind(std::string_view text);

std::string serialize_hopf(const HopfAlgebra& h);
HopfPtr parse_hopf(std::string_view text);

/// Embeds both algebras (`begin hopf h1` ... `end hopf`), the component as
/// matrices alpha/beta/gamma/delta, `dim`, and the four structure maps.
std::string serialize_module(const YdlModule& m);
YdlModule parse_module(std::string_view text);

/// The row vectors f1, f2 and column vectors g1, g2 only; shapes are checked
/// when the quadruple is used.
std::string serialize_quadruple(const InvolutionQuadruple& q);
InvolutionQuadruple parse_quadruple(std::string_view text);

/// Group tables (`begin group g1` with `name`, `labels`, one `row` per
/// element, `end group`), the component as `perm alpha i0 i1 ...`,
/// `component <g> <h> <basis indices>` lines and one
/// `block left|right <element> <source> <target> <rows> <cols>` matrix per
/// group element and component.
std::string serialize_graded(const GradedBimodule& m);
GradedBimodule parse_graded(std::string_view text);

}  // namespace ydlcat
