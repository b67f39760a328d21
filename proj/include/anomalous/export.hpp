#pragma once

// Catalog serialization. JSONL keys appear in a fixed order:
//
//   {"base":10,"numerator":16,"denominator":64,"num_pos":0,"den_pos":1,
//    "digit":6,"reduced_num":1,"reduced_den":4,"class":"nontrivial"}
//   {"type":"infinite_family","base":10,"denominator":20,"num_pos":0,
//    "den_pos":0,"digit":0,"stride":10,"first":10}
//
// (each object on a single line). reduced_num/reduced_den are the values left
// after digit removal, not lowest terms. CSV carries the record columns with
// numerals rendered in the record's base; infinite families are JSONL/text only.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "anomalous/survey.hpp"

namespace anomalous {

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ExportFormat { jsonl, csv, text };

std::optional<ExportFormat> parse_format(std::string_view text);

std::string to_jsonl(const CancellationRecord& rec);
std::string to_jsonl(const InfiniteFamily& fam);

// RFC 4180 field: quoted (with doubled quotes) only when it contains a comma,
// quote, CR or LF.
std::string csv_field(std::string_view text);

inline constexpr std::string_view kCsvHeader =
    "base,numerator,denominator,num_pos,den_pos,digit,reduced_num,reduced_den,class";

// Throws std::runtime_error if the sink reports a write failure.
void export_catalog(const Catalog& catalog, ExportFormat format, std::ostream& out);

// Text table for one catalog: a "BASE b" line, a header row, then fixed-width
// rows with numerals in base b, followed by any infinite families.
void write_text_table(const Catalog& catalog, std::ostream& out);

// Reads records and families back. Every record is re-verified against
// verify_cancellation and every family against the degeneracy rule; any
// disagreement throws FormatError naming the line. Only the radix of the
// header is recoverable (from the first entry).
Catalog parse_jsonl(std::istream& in);

}  // namespace anomalous
