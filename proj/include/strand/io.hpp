#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "strand/boij_soderberg.hpp"
#include "strand/polynomial.hpp"

namespace strand {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " (line " + std::to_string(l) + ", column " +
                             std::to_string(c) + ")"),
          line(l),
          column(c) {}
};

// polynomial text grammar: integer coefficients, variables x0..x{N},
// operators + - * ^; juxtaposition is not allowed; whitespace insignificant
Polynomial parse_polynomial(const std::string& text, RingContext ring,
                            int line_no = 1);
std::string format_polynomial(const Polynomial& f);

// ideal file: optional comments (#...), directives `name`, `prime`, `vars`,
// `meta key value`, then one generator expression per line
struct IdealFile {
    std::string name;
    std::uint32_t prime = 32003;
    int nvars = 0;
    std::vector<std::string> generator_text;
    std::map<std::string, std::string> metadata;
};

IdealFile parse_ideal_file_text(const std::string& text);
IdealFile read_ideal_file(const std::string& path);

// parses and validates: exact coefficients mod p, homogeneous generators
Ideal parse_ideal(const IdealFile& file, std::uint32_t prime_override = 0);

std::string emit_ideal_file(const Ideal& ideal, const std::string& name = "");

// rational table file: lines "i <total degree> <value>", value an integer
// or num/den
RationalBettiTable read_rational_table(const std::string& path);
RationalBettiTable parse_rational_table_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace strand
