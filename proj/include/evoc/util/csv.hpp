#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evoc {

// RFC 4180 quoting: fields containing comma, quote or newline get wrapped in
// double quotes with embedded quotes doubled.
std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// Fixed, locale-independent numeric formatting so identical runs produce
// byte-identical files.
std::string format_double(double value);

}  // namespace evoc
