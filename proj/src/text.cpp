/*
 *   Copyright 2026 The gea-workbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gea/text.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace gea {

namespace {

struct Line {
    std::size_t number;
    std::string keyword;
    std::vector<std::string> args;
    std::string rest;
};

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const std::string content = trim(raw);
        if (content.empty())
            continue;
        std::istringstream in(content);
        Line line{number, {}, {}, {}};
        in >> line.keyword;
        for (std::string token; in >> token;)
            line.args.push_back(token);
        line.rest = trim(std::string_view(content).substr(line.keyword.size()));
        lines.push_back(std::move(line));
    }
    return lines;
}

std::string quote(std::string_view s)
{
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + "\"";
}

} // namespace

Algebra parse_algebra(std::string_view text)
{
    std::string name = "unnamed";
    std::optional<std::vector<std::string>> elements;
    std::optional<std::pair<std::string, std::size_t>> zero, top;
    struct PendingSum {
        std::size_t line;
        std::string a, b, c;
    };
    std::vector<PendingSum> sums;
    std::size_t last_line = 0;
    std::size_t elements_line = 0;

    for (const Line& line : tokenize(text)) {
        last_line = line.number;
        const auto expect = [&](std::size_t count) {
            if (line.args.size() != count)
                throw ParseError(line.number, "'" + line.keyword + "' expects " + std::to_string(count)
                                                  + " argument(s)");
        };
        if (line.keyword == "algebra" || line.keyword == "algebra:") {
            if (line.rest.empty())
                throw ParseError(line.number, "missing algebra name");
            name = line.rest;
        } else if (line.keyword == "elements:") {
            if (elements)
                throw ParseError(line.number, "duplicate elements line");
            if (line.args.empty())
                throw ParseError(line.number, "empty element list");
            elements = line.args;
            elements_line = line.number;
        } else if (line.keyword == "zero:") {
            expect(1);
            if (zero)
                throw ParseError(line.number, "duplicate zero line");
            zero = {line.args[0], line.number};
        } else if (line.keyword == "top:") {
            expect(1);
            if (top)
                throw ParseError(line.number, "duplicate top line");
            top = {line.args[0], line.number};
        } else if (line.keyword == "sum:") {
            expect(3);
            sums.push_back({line.number, line.args[0], line.args[1], line.args[2]});
        } else {
            throw ParseError(line.number, "unknown directive '" + line.keyword + "'");
        }
    }

    if (!elements)
        throw ParseError(last_line + 1, "missing elements line");
    if (!zero)
        throw ParseError(last_line + 1, "missing zero line");

    std::map<std::string, Element, std::less<>> index;
    for (std::size_t i = 0; i < elements->size(); ++i)
        if (!index.emplace((*elements)[i], element_at(i)).second)
            throw ParseError(elements_line, "duplicate element '" + (*elements)[i] + "'");
    const auto resolve = [&](const std::string& e, std::size_t line) {
        const auto it = index.find(e);
        if (it == index.end())
            throw ParseError(line, "unknown element '" + e + "'");
        return it->second;
    };

    const Element zero_element = resolve(zero->first, zero->second);
    SumTable table(elements->size());
    for (const auto& s : sums) {
        const Element a = resolve(s.a, s.line), b = resolve(s.b, s.line), c = resolve(s.c, s.line);
        if ((a == zero_element && c != b) || (b == zero_element && c != a))
            throw ParseError(s.line, "sum " + s.a + " " + s.b + " " + s.c
                                         + " contradicts the zero law");
        if (!table.define(a, b, c))
            throw ParseError(s.line, "conflicting result for " + s.a + "+" + s.b);
    }

    std::optional<Element> top_element;
    if (top)
        top_element = resolve(top->first, top->second);
    try {
        return {share(Gea(name, std::move(*elements), zero_element, std::move(table))), top_element};
    } catch (const ParseError&) {
        throw;
    } catch (const StructureError& e) {
        throw ParseError(elements_line, e.what());
    }
}

std::string serialize_algebra(const Algebra& algebra)
{
    const Gea& p = *algebra.gea;
    std::string out = "algebra " + p.name() + "\nelements:";
    for (const auto& n : p.element_names())
        out += " " + n;
    out += "\nzero: " + p.element_name(p.zero()) + "\n";
    if (algebra.top)
        out += "top: " + p.element_name(*algebra.top) + "\n";
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a; b < p.size(); ++b) {
            const Element x = element_at(a), y = element_at(b);
            if (x == p.zero() || y == p.zero())
                continue;
            if (const auto s = p.sum(x, y))
                out += "sum: " + p.element_name(x) + " " + p.element_name(y) + " " + p.element_name(*s) + "\n";
        }
    return out;
}

std::string emit_dot(const Algebra& algebra)
{
    const Gea& p = *algebra.gea;
    std::string out = "digraph " + quote(p.name()) + " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Element e = element_at(i);
        std::string label = p.element_name(e);
        if (algebra.top && *algebra.top == e && label != "1")
            label += " [1]";
        out += "  n" + std::to_string(i) + " [label=" + quote(label) + "];\n";
    }
    for (const auto& [lo, hi] : derive_order(p).covers())
        out += "  n" + std::to_string(lo.index) + " -> n" + std::to_string(hi.index) + ";\n";
    return out + "}\n";
}

std::string format_covers(const Gea& p)
{
    std::string out;
    for (const auto& [lo, hi] : derive_order(p).covers())
        out += "cover: " + p.element_name(lo) + " " + p.element_name(hi) + "\n";
    return out;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw StructureError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Algebra load_algebra(std::string_view location, const std::filesystem::path& base_dir)
{
    constexpr std::string_view prefix = "builtin:";
    if (location.substr(0, prefix.size()) == prefix)
        return builtin(location.substr(prefix.size()));
    std::filesystem::path path{std::string(location)};
    if (path.is_relative() && !base_dir.empty())
        path = base_dir / path;
    return parse_algebra(read_text_file(path));
}

MorphismFile parse_morphism(std::string_view text)
{
    MorphismFile file;
    for (const Line& line : tokenize(text)) {
        if (line.keyword == "morphism" || line.keyword == "morphism:") {
            file.name = line.rest;
        } else if (line.keyword == "source:" || line.keyword == "target:") {
            if (line.args.size() != 1)
                throw ParseError(line.number, "'" + line.keyword + "' expects 1 argument(s)");
            (line.keyword == "source:" ? file.source : file.target) = line.args[0];
        } else if (line.keyword == "kind:") {
            if (line.args.size() != 1 || (line.args[0] != "gea" && line.args[0] != "ea"))
                throw ParseError(line.number, "kind must be gea or ea");
            file.kind = line.args[0] == "ea" ? MorphismKind::ea : MorphismKind::gea;
        } else if (line.keyword == "map:") {
            if (line.args.size() != 3 || line.args[1] != "->")
                throw ParseError(line.number, "expected 'map: a -> x'");
            file.map.emplace_back(line.args[0], line.args[2]);
            file.map_lines.push_back(line.number);
        } else {
            throw ParseError(line.number, "unknown directive '" + line.keyword + "'");
        }
    }
    return file;
}

Morphism bind_morphism(const MorphismFile& file, const Algebra& source, const Algebra& target)
{
    const Gea& src = *source.gea;
    const Gea& dst = *target.gea;
    std::vector<std::optional<Element>> images(src.size());
    for (std::size_t k = 0; k < file.map.size(); ++k) {
        const auto& [from, to] = file.map[k];
        const auto a = src.find(from);
        const auto x = dst.find(to);
        if (!a)
            throw ParseError(file.map_lines[k], "unknown source element '" + from + "'");
        if (!x)
            throw ParseError(file.map_lines[k], "unknown target element '" + to + "'");
        if (images[a->index] && *images[a->index] != *x)
            throw ParseError(file.map_lines[k], "conflicting image for '" + from + "'");
        images[a->index] = *x;
    }
    std::vector<Element> total;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i])
            throw StructureError("mapping is not total: no image for '" + src.element_name(element_at(i)) + "'");
        total.push_back(*images[i]);
    }
    if (file.kind == MorphismKind::ea)
        return Morphism(as_ea(source), as_ea(target), std::move(total));
    return Morphism(source.gea, target.gea, std::move(total));
}

std::string serialize_morphism(const Morphism& f, std::string_view name)
{
    std::string out;
    if (!name.empty())
        out += "morphism " + std::string(name) + "\n";
    out += "# source: " + f.source().name() + "\n# target: " + f.target().name() + "\n";
    out += std::string("kind: ") + (f.kind() == MorphismKind::ea ? "ea" : "gea") + "\n";
    for (std::size_t i = 0; i < f.source().size(); ++i)
        out += "map: " + f.source().element_name(element_at(i)) + " -> "
               + f.target().element_name(f(element_at(i))) + "\n";
    return out;
}

std::string format_mapping(const Morphism& f)
{
    std::string out;
    for (std::size_t i = 0; i < f.source().size(); ++i) {
        if (i)
            out += ' ';
        out += f.source().element_name(element_at(i)) + "->" + f.target().element_name(f(element_at(i)));
    }
    return out;
}

Rational parse_rational(std::string_view text)
{
    const auto parse_int = [&](std::string_view digits) {
        std::int64_t v = 0;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
            throw StructureError("malformed rational '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw StructureError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

AdditiveMap parse_additive_map(std::string_view text, const GeaPtr& p)
{
    std::vector<std::optional<Rational>> values(p->size());
    values[p->zero().index] = std::nullopt;
    for (const Line& line : tokenize(text)) {
        if (line.keyword != "val:")
            throw ParseError(line.number, "unknown directive '" + line.keyword + "'");
        if (line.args.size() != 3 || line.args[1] != "=")
            throw ParseError(line.number, "expected 'val: a = p/q'");
        const auto e = p->find(line.args[0]);
        if (!e)
            throw ParseError(line.number, "unknown element '" + line.args[0] + "'");
        if (values[e->index])
            throw ParseError(line.number, "duplicate value for '" + line.args[0] + "'");
        try {
            values[e->index] = parse_rational(line.args[2]);
        } catch (const ParseError&) {
            throw;
        } catch (const StructureError& err) {
            throw ParseError(line.number, err.what());
        }
    }
    std::vector<Rational> total;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i])
            total.push_back(*values[i]);
        else if (element_at(i) == p->zero())
            total.emplace_back(0);
        else
            throw StructureError("additive map is not total: no value for '"
                                 + p->element_name(element_at(i)) + "'");
    }
    return AdditiveMap(p, std::move(total));
}

std::string serialize_values(const Gea& p, const std::vector<Rational>& values)
{
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out += "val: " + p.element_name(element_at(i)) + " = " + to_string(values.at(i)) + "\n";
    return out;
}

} // namespace gea
