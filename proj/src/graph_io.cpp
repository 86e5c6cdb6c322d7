#include "starmoments/graph_io.hpp"

#include "starmoments/errors.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace starmoments {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw GraphFormatError("line " + std::to_string(line) + ": " + what);
}

} // namespace

GraphFile read_graph(std::istream& in)
{
    std::string text;
    std::size_t line_no = 0;
    bool have_header = false;
    int n = 0, d = 0;
    std::vector<std::tuple<int, int, int>> entries;
    while (std::getline(in, text)) {
        ++line_no;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#')
            continue;
        std::istringstream fields(text);
        if (!have_header) {
            if (!(fields >> n >> d) || n < 0 || d < 0)
                fail(line_no, "expected header \"n d\"");
            have_header = true;
        } else {
            int t = 0, h = 0, m = 0;
            if (!(fields >> t >> h >> m))
                fail(line_no, "expected \"tail head multiplicity\"");
            if (t < 1 || t > n || h < 1 || h > n)
                fail(line_no, "vertex outside 1.." + std::to_string(n));
            if (m < 1)
                fail(line_no, "multiplicity must be at least 1");
            entries.emplace_back(t - 1, h - 1, m);
        }
        std::string extra;
        if (fields >> extra)
            fail(line_no, "unexpected trailing field '" + extra + "'");
    }
    if (!have_header)
        fail(line_no, "missing header");
    return {Digraph::from_multiplicities(n, entries), d};
}

GraphFile read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphFormatError("cannot open " + path.string());
    return read_graph(in);
}

void write_graph(std::ostream& out, const Digraph& g, int degree)
{
    out << g.vertex_count() << ' ' << degree << '\n';
    for (const auto& [t, h, m] : g.multiplicities())
        out << t + 1 << ' ' << h + 1 << ' ' << m << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Digraph& g, int degree)
{
    std::ofstream out(path);
    if (!out)
        throw GraphFormatError("cannot write " + path.string());
    write_graph(out, g, degree);
    if (!out)
        throw GraphFormatError("error writing " + path.string());
}

} // namespace starmoments
