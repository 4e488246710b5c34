#pragma once

/**
 * @file text_format.hpp
 * @brief Line-oriented text files for module vectors and decompositions.
 *
 * Module vector:
 *
 *     n = 6
 *     l = 2
 *     1,2 = 1
 *     5,6 = -7/3
 *
 * Records omitted from the file are zero; the writer emits nonzero entries
 * in canonical subset order. Blank lines and lines starting with '#' are
 * ignored. A decomposition file carries "n", "m" and "mean" headers followed
 * by "[kernel l]" blocks (l = 1..m) and "[component l]" blocks (l = 0..m),
 * each holding one module vector.
 */

#include "hoeffspecht/hoeffding.hpp"
#include "hoeffspecht/module_vector.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hs {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string const& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

void write_module_vector(std::ostream& out, ModuleVector const& v);
ModuleVector read_module_vector(std::istream& in);

void write_decomposition(std::ostream& out, HoeffdingDecomposition const& d);
HoeffdingDecomposition read_decomposition(std::istream& in);

ModuleVector load_module_vector(std::filesystem::path const& path);
void save_module_vector(std::filesystem::path const& path, ModuleVector const& v);

}  // namespace hs
