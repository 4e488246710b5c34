#include "hoeffspecht/text_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string_view>
#include <vector>

namespace hs {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto t = trim(raw);
        if (t.empty() || t.front() == '#') continue;
        lines.push_back({number, std::string(t)});
    }
    return lines;
}

/// Splits "key = value"; nullopt when there is no '='.
std::optional<std::pair<std::string_view, std::string_view>> split_record(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    return std::pair{trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

int header_int(Line const& line, std::string_view expected_key) {
    auto record = split_record(line.text);
    if (!record || record->first != expected_key) {
        throw ParseError(line.number, "expected header '" + std::string(expected_key) + " = <int>'");
    }
    int value = 0;
    auto v = record->second;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ParseError(line.number, "header '" + std::string(expected_key) + "' is not an integer");
    }
    return value;
}

ModuleVector parse_vector_lines(std::vector<Line> const& lines, std::size_t begin, std::size_t end,
                                std::size_t context_line) {
    if (end - begin < 2) throw ParseError(context_line, "module vector needs 'n' and 'l' headers");
    int const n = header_int(lines[begin], "n");
    int const l = header_int(lines[begin + 1], "l");
    ModuleVector v;
    try {
        v = ModuleVector(n, l);
    } catch (std::exception const& e) {
        throw ParseError(lines[begin + 1].number, e.what());
    }
    std::set<std::size_t> seen;
    for (std::size_t i = begin + 2; i < end; ++i) {
        auto const& line = lines[i];
        auto record = split_record(line.text);
        if (!record) throw ParseError(line.number, "expected '<subset> = <rational>'");
        try {
            Subset s = Subset::parse(n, record->first);
            if (s.size() != l) {
                throw std::domain_error("subset {" + s.to_string() + "} does not have size " + std::to_string(l));
            }
            if (!seen.insert(s.rank()).second) throw std::domain_error("duplicate subset {" + s.to_string() + "}");
            v[s] = parse_rational(record->second);
        } catch (ParseError const&) {
            throw;
        } catch (std::exception const& e) {
            throw ParseError(line.number, e.what());
        }
    }
    return v;
}

}  // namespace

void write_module_vector(std::ostream& out, ModuleVector const& v) {
    out << "n = " << v.n() << '\n' << "l = " << v.l() << '\n';
    auto const subsets = enumerate_subsets(v.n(), v.l());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (sgn(v.at(i)) == 0) continue;
        std::string key = subsets[i].to_string();
        out << (key.empty() ? "{}" : key) << " = " << to_string(v.at(i)) << '\n';
    }
}

ModuleVector read_module_vector(std::istream& in) {
    auto const lines = significant_lines(in);
    return parse_vector_lines(lines, 0, lines.size(), 1);
}

void write_decomposition(std::ostream& out, HoeffdingDecomposition const& d) {
    out << "n = " << d.n << '\n' << "m = " << d.m << '\n' << "mean = " << to_string(d.mean) << '\n';
    for (int l = 1; l <= d.m; ++l) {
        out << "[kernel " << l << "]\n";
        write_module_vector(out, d.kernel(l));
    }
    for (int l = 0; l <= d.m; ++l) {
        out << "[component " << l << "]\n";
        write_module_vector(out, d.component(l));
    }
}

HoeffdingDecomposition read_decomposition(std::istream& in) {
    auto const lines = significant_lines(in);
    if (lines.size() < 3) throw ParseError(lines.empty() ? 1 : lines.back().number, "truncated decomposition");

    HoeffdingDecomposition d;
    d.n = header_int(lines[0], "n");
    d.m = header_int(lines[1], "m");
    if (d.m < 1 || 2 * d.m > d.n) throw ParseError(lines[1].number, "m must satisfy 1 <= m <= n/2");
    auto mean_record = split_record(lines[2].text);
    if (!mean_record || mean_record->first != "mean") throw ParseError(lines[2].number, "expected 'mean = <rational>'");
    try {
        d.mean = parse_rational(mean_record->second);
    } catch (std::exception const& e) {
        throw ParseError(lines[2].number, e.what());
    }

    std::size_t i = 3;
    auto read_block = [&](std::string const& header, int expected_l) {
        if (i >= lines.size() || lines[i].text != header) {
            throw ParseError(i < lines.size() ? lines[i].number : lines.back().number,
                             "expected block header '" + header + "'");
        }
        std::size_t const start = ++i;
        while (i < lines.size() && lines[i].text.front() != '[') ++i;
        ModuleVector v = parse_vector_lines(lines, start, i, lines[start - 1].number);
        if (v.n() != d.n || v.l() != expected_l) {
            throw ParseError(lines[start - 1].number, "block '" + header + "' has the wrong shape");
        }
        return v;
    };
    for (int l = 1; l <= d.m; ++l) d.kernels.push_back(read_block("[kernel " + std::to_string(l) + "]", l));
    for (int l = 0; l <= d.m; ++l) d.components.push_back(read_block("[component " + std::to_string(l) + "]", d.m));
    if (i != lines.size()) throw ParseError(lines[i].number, "unexpected trailing content");
    return d;
}

ModuleVector load_module_vector(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_module_vector(in);
}

void save_module_vector(std::filesystem::path const& path, ModuleVector const& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_module_vector(out, v);
}

}  // namespace hs
