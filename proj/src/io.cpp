#include "cubcoh/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace cubcoh
{

ParseError::ParseError(std::size_t line, std::size_t column, std::string const& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column)
{
}

namespace
{

bool label_char(char c)
{
    return !(c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '[' || c == ']' || c == ',' || c == '#');
}

bool valid_label(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!label_char(c))
            return false;
    return true;
}

struct Token
{
    std::string text;
    std::size_t column;  // 1-based
};

/// Cursor over one line of input.
class LineScanner
{
public:
    LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }

    std::size_t column() const { return pos_ + 1; }

    Token word()
    {
        skip_space();
        std::size_t const start = pos_;
        while (pos_ < text_.size() && label_char(text_[pos_]))
            ++pos_;
        if (start == pos_)
            fail(start, pos_ < text_.size() ? std::string("unexpected '") + text_[pos_] + "'" : "unexpected end of line");
        return {std::string(text_.substr(start, pos_ - start)), start + 1};
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    [[noreturn]] void fail(std::size_t pos, std::string const& what) const { throw ParseError(line_, pos + 1, what); }
    [[noreturn]] void fail_at(Token const& t, std::string const& what) const
    {
        throw ParseError(line_, t.column, what);
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::size_t parse_dim(LineScanner& sc, Token const& t)
{
    if (t.text.empty() || t.text.size() > 3 || t.text.find_first_not_of("0123456789") != std::string::npos)
        sc.fail_at(t, "expected a dimension, got '" + t.text + "'");
    std::size_t const d = std::stoul(t.text);
    if (d > kMaxDim)
        sc.fail_at(t, "dimension " + t.text + " exceeds the supported maximum " + std::to_string(kMaxDim));
    return d;
}

struct Declared
{
    std::string label;
    std::size_t line;
    std::size_t column;
};

struct FaceLine
{
    std::vector<std::pair<Token, Token>> pairs;
    std::size_t line;
};

} // namespace

PrecubicalSet parse_document(std::string_view text)
{
    enum class Section
    {
        none,
        dims,
        faces,
    } section = Section::none;

    std::vector<std::vector<Declared>> dims;
    std::vector<std::map<std::string, std::size_t>> index;  // label -> position
    std::vector<char> dim_seen;
    std::map<std::pair<std::size_t, std::size_t>, FaceLine> faces;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size())
    {
        std::size_t const eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        LineScanner sc(line, line_no);
        if (sc.at_end())
        {
            if (eol == text.size())
                break;
            continue;
        }

        Token const first = sc.word();
        if (first.text == "dims" || first.text == "faces")
        {
            if (!sc.at_end())
                sc.fail(sc.column() - 1, "unexpected text after '" + first.text + "'");
            if (first.text == "dims" && section != Section::none)
                sc.fail_at(first, "'dims' may appear only once, at the start");
            if (first.text == "faces" && section != Section::dims)
                sc.fail_at(first, "'faces' must follow the 'dims' section");
            section = first.text == "dims" ? Section::dims : Section::faces;
            continue;
        }

        if (section == Section::none)
            sc.fail_at(first, "expected 'dims'");

        std::size_t const d = parse_dim(sc, first);
        if (section == Section::dims)
        {
            if (dims.size() <= d)
            {
                dims.resize(d + 1);
                index.resize(d + 1);
                dim_seen.resize(d + 1, 0);
            }
            if (dim_seen[d])
                sc.fail_at(first, "dimension " + first.text + " is declared twice");
            dim_seen[d] = 1;
            while (!sc.at_end())
            {
                Token const t = sc.word();
                if (!index[d].emplace(t.text, dims[d].size()).second)
                    sc.fail_at(t, "duplicate label '" + t.text + "' in dimension " + first.text);
                dims[d].push_back({t.text, line_no, t.column});
            }
            continue;
        }

        // faces section
        if (d == 0)
            sc.fail_at(first, "0-cubes have no faces");
        Token const name = sc.word();
        if (d >= dims.size() || !index[d].count(name.text))
            sc.fail_at(name, "no " + first.text + "-cube named '" + name.text + "'");
        std::size_t const k = index[d].at(name.text);
        if (faces.count({d, k}))
            sc.fail_at(name, "faces of '" + name.text + "' are given twice");

        FaceLine fl;
        fl.line = line_no;
        sc.expect('[');
        if (!sc.peek(']'))
        {
            while (true)
            {
                sc.expect('[');
                Token const a = sc.word();
                sc.expect(',');
                Token const b = sc.word();
                sc.expect(']');
                for (Token const* t : {&a, &b})
                    if (!index[d - 1].count(t->text))
                        sc.fail_at(*t, "face '" + t->text + "' of '" + name.text + "' is not a "
                                           + std::to_string(d - 1) + "-cube");
                fl.pairs.emplace_back(a, b);
                if (sc.peek(','))
                {
                    sc.expect(',');
                    continue;
                }
                break;
            }
        }
        sc.expect(']');
        if (!sc.at_end())
            sc.fail(sc.column() - 1, "unexpected text after face list");
        if (fl.pairs.size() != d)
            sc.fail_at(name, "a " + first.text + "-cube needs exactly " + first.text + " face pairs, '" + name.text
                                 + "' has " + std::to_string(fl.pairs.size()));
        faces.emplace(std::make_pair(d, k), std::move(fl));
    }

    PrecubicalSetBuilder b;
    for (std::size_t d = 0; d < dims.size(); ++d)
    {
        b.reserve_dim(d);
        for (auto const& decl : dims[d])
            b.add_cube(d, decl.label);
    }
    for (std::size_t d = 1; d < dims.size(); ++d)
        for (std::size_t k = 0; k < dims[d].size(); ++k)
        {
            auto it = faces.find({d, k});
            if (it == faces.end())
                throw ParseError(dims[d][k].line, dims[d][k].column,
                                 "no faces given for " + std::to_string(d) + "-cube '" + dims[d][k].label + "'");
            CubeId const u{static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(k)};
            for (std::size_t i = 0; i < it->second.pairs.size(); ++i)
            {
                auto const& [a, bb] = it->second.pairs[i];
                auto const lower = static_cast<std::uint32_t>(d - 1);
                b.set_face(u, i + 1, 0, CubeId{lower, static_cast<std::uint32_t>(index[d - 1].at(a.text))});
                b.set_face(u, i + 1, 1, CubeId{lower, static_cast<std::uint32_t>(index[d - 1].at(bb.text))});
            }
        }
    return std::move(b).build();
}

std::string serialize_document(PrecubicalSet const& x)
{
    std::ostringstream os;
    os << "dims\n";
    for (std::size_t d = 0; d < x.num_dims(); ++d)
    {
        os << d;
        for (std::uint32_t k = 0; k < x.count(d); ++k)
        {
            std::string const l = x.label({static_cast<std::uint32_t>(d), k});
            if (!valid_label(l))
                throw Error("label '" + l + "' cannot be written to a document");
            os << ' ' << l;
        }
        os << '\n';
    }
    os << "faces\n";
    for (std::size_t d = 1; d < x.num_dims(); ++d)
        for (std::uint32_t k = 0; k < x.count(d); ++k)
        {
            CubeId const u{static_cast<std::uint32_t>(d), k};
            os << d << ' ' << x.label(u) << " [";
            for (std::size_t i = 1; i <= d; ++i)
            {
                CubeId const f0 = x.face(u, i, 0);
                CubeId const f1 = x.face(u, i, 1);
                if (!x.contains(f0) || !x.contains(f1) || f0.dim + 1 != d || f1.dim + 1 != d)
                    throw Error("cannot serialize a structurally broken face table");
                os << (i > 1 ? "," : "") << '[' << x.label(f0) << ',' << x.label(f1) << ']';
            }
            os << "]\n";
        }
    return os.str();
}

PrecubicalSet read_document(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

Cochain parse_cochain_spec(PrecubicalSet const& x, std::string_view spec, CoeffRing const& ring)
{
    auto const at = spec.find('@');
    if (at == std::string_view::npos)
        throw Error("cochain spec '" + std::string(spec) + "' must look like <dim>@label:value,...");
    std::string const dim_text(spec.substr(0, at));
    if (dim_text.empty() || dim_text.size() > 3 || dim_text.find_first_not_of("0123456789") != std::string::npos)
        throw Error("bad cochain dimension '" + dim_text + "'");
    std::size_t const dim = std::stoul(dim_text);
    Cochain c = zero_cochain(x, dim, ring);
    std::string_view rest = spec.substr(at + 1);
    while (!rest.empty())
    {
        auto const comma = rest.find(',');
        std::string_view const item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto const colon = item.rfind(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 == item.size())
            throw Error("cochain entry '" + std::string(item) + "' must be label:value");
        std::string const label(item.substr(0, colon));
        std::string const value(item.substr(colon + 1));
        auto const u = x.find(dim, label);
        if (!u)
            throw Error("no " + std::to_string(dim) + "-cube named '" + label + "'");
        Integer v;
        try
        {
            v = Integer(value);
        }
        catch (std::exception const&)
        {
            throw Error("bad cochain value '" + value + "'");
        }
        c.values[u->index] = ring.normalize(v);
    }
    return c;
}

namespace
{

nlohmann::json integer_json(Integer const& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

nlohmann::json vector_json(IntVector const& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto const& e : v)
        out.push_back(integer_json(e));
    return out;
}

nlohmann::json group_json(PrecubicalSet const& x, CohomologyGroup const& g)
{
    nlohmann::json j;
    j["degree"] = g.dim;
    j["group"] = g.str();
    j["rank"] = g.free_rank;
    nlohmann::json tors = nlohmann::json::array();
    for (auto const& d : g.torsion)
        tors.push_back(integer_json(d));
    j["torsion"] = tors;
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t k = 0; k < g.generators.size(); ++k)
    {
        nlohmann::json gen;
        gen["name"] = generator_name(g.dim, k);
        gen["order"] = integer_json(g.order(k));
        gen["cochain"] = cochain_json(x, g.generators[k]);
        gens.push_back(gen);
    }
    j["generators"] = gens;
    return j;
}

} // namespace

nlohmann::json cochain_json(PrecubicalSet const& x, Cochain const& c)
{
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t k = 0; k < c.values.size(); ++k)
    {
        if (c.values[k].is_zero())
            continue;
        out.push_back({x.label({static_cast<std::uint32_t>(c.dim), static_cast<std::uint32_t>(k)}),
                       integer_json(c.values[k])});
    }
    return out;
}

nlohmann::json groups_json(PrecubicalSet const& x, std::vector<CohomologyGroup> const& groups)
{
    nlohmann::json j;
    j["coefficients"] = groups.empty() ? nlohmann::json(nullptr) : nlohmann::json(groups.front().ring.name());
    nlohmann::json degrees = nlohmann::json::array();
    for (auto const& g : groups)
        degrees.push_back(group_json(x, g));
    j["degrees"] = degrees;
    return j;
}

std::string class_string(CohomologyGroup const& target, IntVector const& coords)
{
    std::string out;
    for (std::size_t k = 0; k < coords.size(); ++k)
    {
        Integer const& c = coords[k];
        if (c.is_zero())
            continue;
        std::string const name = generator_name(target.dim, k);
        Integer const mag = abs(c);
        if (out.empty())
            out = c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += mag.str() + "*";
        out += name;
    }
    return out.empty() ? "0" : out;
}

nlohmann::json ring_table_json(PrecubicalSet const& x, RingTable const& table)
{
    nlohmann::json j = groups_json(x, table.groups);
    j["unit"] = vector_json(table.unit);
    nlohmann::json products = nlohmann::json::array();
    for (std::size_t p = 0; p < table.groups.size(); ++p)
        for (std::size_t q = 0; p + q < table.groups.size(); ++q)
            for (std::size_t i = 0; i < table.groups[p].num_generators(); ++i)
                for (std::size_t k = 0; k < table.groups[q].num_generators(); ++k)
                {
                    auto const& coords = table.product(p, i, q, k);
                    nlohmann::json e;
                    e["left"] = generator_name(p, i);
                    e["right"] = generator_name(q, k);
                    e["degree"] = p + q;
                    e["class"] = vector_json(coords);
                    e["value"] = class_string(table.groups[p + q], coords);
                    products.push_back(e);
                }
    j["products"] = products;
    return j;
}

} // namespace cubcoh
