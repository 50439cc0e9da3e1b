#include "cubcoh/io.hpp"

#include <doctest.h>

#include <string>

using namespace cubcoh;

namespace
{

std::string const kTorus = "dims\n"
                           "0 o\n"
                           "1 t1 t2\n"
                           "2 v\n"
                           "faces\n"
                           "1 t1 [[o,o]]\n"
                           "1 t2 [[o,o]]\n"
                           "2 v [[t1,t1],[t2,t2]]\n";

ParseError parse_error(std::string const& text)
{
    try
    {
        parse_document(text);
    }
    catch (ParseError const& e)
    {
        return e;
    }
    FAIL("document parsed: " << text);
    return ParseError(0, 0, "");
}

} // namespace

TEST_CASE("torus document round trip")
{
    auto x = parse_document(kTorus);
    CHECK(x == torus());
    CHECK(serialize_document(x) == kTorus);
}

TEST_CASE("every builtin survives serialize and parse")
{
    for (auto const& name : builtin_names())
    {
        if (name.find('<') != std::string::npos)
            continue;
        auto x = builtin(name);
        CHECK_MESSAGE(parse_document(serialize_document(x)) == x, name);
    }
}

TEST_CASE("comments, blank lines and spacing are ignored")
{
    std::string text = "# a torus\n\ndims\n0   o  # the vertex\n1 t1 t2\n2 v\nfaces\n1 t1 [ [o , o] ]\n1 t2 [[o,o]]\n"
                       "2 v [[t1,t1], [t2,t2]]\n";
    CHECK(parse_document(text) == torus());
}

TEST_CASE("empty document is the empty set")
{
    auto x = parse_document("");
    CHECK(x.num_dims() == 0);
    CHECK(x.total_cubes() == 0);
    CHECK(validate(x).empty());
}

TEST_CASE("dangling face reference names the label and position")
{
    std::string text = "dims\n0 o\n1 t\nfaces\n1 t [[o,x]]\n";
    auto e = parse_error(text);
    CHECK(e.line() == 5);
    CHECK(e.column() == 9);
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
}

TEST_CASE("structural parse errors")
{
    CHECK(parse_error("dims\n0 o o\n").line() == 2);
    CHECK(parse_error("dims\n0 o\n1 t\nfaces\n1 t [[o,o],[o,o]]\n").line() == 5);
    CHECK(parse_error("dims\n0 o\n1 t\nfaces\n").line() == 3);
    CHECK(parse_error("dims\n0 o\n1 t\nfaces\n1 t [[o,o]]\n1 t [[o,o]]\n").line() == 6);
    CHECK(parse_error("dims\n0 o\nfaces\n1 t [[o,o]]\n").line() == 4);
    CHECK(parse_error("dims\n0 o\n1 t\nfaces\n1 t [[o,o]\n").line() == 5);
    CHECK(parse_error("dims\n0 o\n1 t\nfaces\n1 t [[o,o]] extra\n").line() == 5);
    CHECK(parse_error("stuff\n").line() == 1);
}

TEST_CASE("parsed sets may still break cubical identities")
{
    std::string text = "dims\n0 p q\n1 a c\n2 s\nfaces\n1 a [[p,p]]\n1 c [[q,q]]\n2 s [[a,a],[c,c]]\n";
    auto x = parse_document(text);
    CHECK_FALSE(validate(x).empty());
}

TEST_CASE("cochain specs")
{
    auto x = torus();
    auto const z = CoeffRing::integers();
    auto c = parse_cochain_spec(x, "1@t2:3", z);
    CHECK(c.dim == 1);
    CHECK(c.values == std::vector<Integer>{0, 3});
    auto d = parse_cochain_spec(x, "1@t1:-1,t2:2", z);
    CHECK(d.values == std::vector<Integer>{-1, 2});
    auto m = parse_cochain_spec(x, "1@t1:-1", CoeffRing::integers_mod(6));
    CHECK(m.values == std::vector<Integer>{5, 0});
    CHECK(parse_cochain_spec(x, "2@", z).values == std::vector<Integer>{0});
    CHECK_THROWS_AS(parse_cochain_spec(x, "1@zz:1", z), Error);
    CHECK_THROWS_AS(parse_cochain_spec(x, "t1:1", z), Error);
    CHECK_THROWS_AS(parse_cochain_spec(x, "1@t1:x", z), Error);
}

TEST_CASE("JSON rendering")
{
    auto x = torus();
    auto c = parse_cochain_spec(x, "1@t2:3", CoeffRing::integers());
    auto j = cochain_json(x, c);
    CHECK(j.dump() == R"([["t2",3]])");

    auto g = cohomology_groups(x, CoeffRing::integers());
    auto gj = groups_json(x, g);
    CHECK(gj["coefficients"] == "Z");
    CHECK(gj["degrees"].size() == 3);

    auto t = ring_table(x, CoeffRing::integers());
    auto tj = ring_table_json(x, t);
    CHECK(tj.contains("products"));
    CHECK(tj.contains("unit"));
}

TEST_CASE("class strings")
{
    auto g = cohomology_groups(torus(), CoeffRing::integers());
    CHECK(class_string(g[1], IntVector{1, -2}) == "a1_0 - 2*a1_1");
    CHECK(class_string(g[1], IntVector{0, 0}) == "0");
}
