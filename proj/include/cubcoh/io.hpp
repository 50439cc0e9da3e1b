// Text document format for precubical sets, command-line cochain specs and
// JSON rendering of results.
//
// Canonical document:
//
//   dims
//   0 o
//   1 t1 t2
//   2 v
//   faces
//   1 t1 [[o,o]]
//   1 t2 [[o,o]]
//   2 v [[t1,t1],[t2,t2]]
//
// A "dims" line is a dimension followed by that dimension's labels in cube
// order.  A "faces" line is "<dim> <label> [[a_1,b_1],...,[a_n,b_n]]" with
// a_i = d_i^0 and b_i = d_i^1 named by their labels in dimension dim-1.
// '#' starts a comment.  Labels may not contain whitespace or any of
// "[],#".

#ifndef CUBCOH_IO_HPP
#define CUBCOH_IO_HPP

#include "cubcoh/cohomology.hpp"
#include "cubcoh/complex.hpp"
#include "cubcoh/core.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace cubcoh
{

class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, std::string const& what);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

PrecubicalSet parse_document(std::string_view text);
std::string serialize_document(PrecubicalSet const& x);
PrecubicalSet read_document(std::string const& path);

/// "<dim>@label:value,label:value"; unlisted cubes are zero.  "1@t2:1" is
/// the dual of t2.
Cochain parse_cochain_spec(PrecubicalSet const& x, std::string_view spec, CoeffRing const& ring);

nlohmann::json cochain_json(PrecubicalSet const& x, Cochain const& c);
nlohmann::json groups_json(PrecubicalSet const& x, std::vector<CohomologyGroup> const& groups);
nlohmann::json ring_table_json(PrecubicalSet const& x, RingTable const& table);

/// "3*a2_0 - a2_1", "0" for the zero class.
std::string class_string(CohomologyGroup const& target, IntVector const& coords);

} // namespace cubcoh

#endif
