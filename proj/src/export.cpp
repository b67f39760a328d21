#include "anomalous/export.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>

#include "json.hpp"

namespace anomalous {

std::optional<ExportFormat> parse_format(std::string_view text) {
    if (text == "jsonl") return ExportFormat::jsonl;
    if (text == "csv") return ExportFormat::csv;
    if (text == "text") return ExportFormat::text;
    return std::nullopt;
}

std::string to_jsonl(const CancellationRecord& rec) {
    std::string out;
    out += "{\"base\":" + std::to_string(rec.radix.value());
    out += ",\"numerator\":" + to_decimal(rec.numerator);
    out += ",\"denominator\":" + to_decimal(rec.denominator);
    out += ",\"num_pos\":" + std::to_string(rec.num_pos.index);
    out += ",\"den_pos\":" + std::to_string(rec.den_pos.index);
    out += ",\"digit\":" + std::to_string(rec.digit);
    out += ",\"reduced_num\":" + to_decimal(rec.reduced_num);
    out += ",\"reduced_den\":" + to_decimal(rec.reduced_den);
    out += ",\"class\":\"" + std::string(to_string(rec.cls)) + "\"}";
    return out;
}

std::string to_jsonl(const InfiniteFamily& fam) {
    std::string out;
    out += "{\"type\":\"infinite_family\",\"base\":" + std::to_string(fam.radix.value());
    out += ",\"denominator\":" + to_decimal(fam.denominator);
    out += ",\"num_pos\":" + std::to_string(fam.num_pos.index);
    out += ",\"den_pos\":" + std::to_string(fam.den_pos.index);
    out += ",\"digit\":" + std::to_string(fam.digit);
    out += ",\"stride\":" + to_decimal(fam.stride);
    out += ",\"first\":" + to_decimal(fam.member(1)) + "}";
    return out;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

namespace {

void write_csv(const Catalog& catalog, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& rec : catalog.records) {
        const Radix r = rec.radix;
        const std::array<std::string, 9> fields{
            std::to_string(r.value()),
            render(rec.numerator, r),
            render(rec.denominator, r),
            std::to_string(rec.num_pos.index),
            std::to_string(rec.den_pos.index),
            render(BigInt(rec.digit), r),
            render(rec.reduced_num, r),
            render(rec.reduced_den, r),
            std::string(to_string(rec.cls)),
        };
        for (std::size_t k = 0; k < fields.size(); ++k) {
            if (k) out << ',';
            out << csv_field(fields[k]);
        }
        out << '\n';
    }
}

}  // namespace

void write_text_table(const Catalog& catalog, std::ostream& out) {
    const Radix r = catalog.header.radix;
    const bool show_decimal = r.value() != 10;

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"numerator", "denominator", "reduced", "positions", "digit",
                                    "class"};
    if (show_decimal) header.push_back("decimal");
    rows.push_back(header);
    for (const auto& rec : catalog.records) {
        std::vector<std::string> row{
            render(rec.numerator, r),
            render(rec.denominator, r),
            render(rec.reduced_num, r) + "/" + render(rec.reduced_den, r),
            "(" + std::to_string(rec.num_pos.index) + "," + std::to_string(rec.den_pos.index) + ")",
            render(BigInt(rec.digit), r),
            std::string(to_string(rec.cls)),
        };
        if (show_decimal) {
            row.push_back(to_decimal(rec.numerator) + "/" + to_decimal(rec.denominator));
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    }

    out << "BASE " << r.value() << '\n';
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) line += "  ";
            const std::string pad(width[k] - row[k].size(), ' ');
            // numerals and positions right-aligned, labels left-aligned
            line += (k == 5 || k == 6) ? row[k] + pad : pad + row[k];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    if (!catalog.families.empty()) {
        out << "infinite families:\n";
        for (const auto& fam : catalog.families) {
            out << "  denominator " << render(fam.denominator, r) << "  positions ("
                << fam.num_pos.index << "," << fam.den_pos.index << ")  digit "
                << render(BigInt(fam.digit), r) << "  numerators k*" << render(fam.stride, r)
                << ", k >= 1\n";
        }
    }
}

void export_catalog(const Catalog& catalog, ExportFormat format, std::ostream& out) {
    switch (format) {
        case ExportFormat::jsonl:
            for (const auto& rec : catalog.records) out << to_jsonl(rec) << '\n';
            for (const auto& fam : catalog.families) out << to_jsonl(fam) << '\n';
            break;
        case ExportFormat::csv:
            write_csv(catalog, out);
            break;
        case ExportFormat::text:
            write_text_table(catalog, out);
            break;
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed while exporting catalog");
}

namespace {

using json = nlohmann::json;

// Collects one flat JSON object as key -> literal text. Integers that overflow
// 64 bits arrive through number_float together with their source token, so
// values are kept exactly.
class FlatObjectReader : public nlohmann::json_sax<json> {
  public:
    struct Value {
        bool is_string = false;
        std::string text;
    };
    std::map<std::string, Value> fields;
    std::string error;

    bool null() override { return fail("null value"); }
    bool boolean(bool) override { return fail("boolean value"); }
    bool number_integer(number_integer_t v) override { return put(std::to_string(v), false); }
    bool number_unsigned(number_unsigned_t v) override { return put(std::to_string(v), false); }
    bool number_float(number_float_t, const string_t& s) override { return put(s, false); }
    bool string(string_t& s) override { return put(s, true); }
    bool binary(binary_t&) override { return fail("binary value"); }
    bool start_object(std::size_t) override {
        if (depth_++ != 0) return fail("nested object");
        return true;
    }
    bool key(string_t& k) override {
        pending_ = k;
        return true;
    }
    bool end_object() override {
        --depth_;
        return true;
    }
    bool start_array(std::size_t) override { return fail("array value"); }
    bool end_array() override { return fail("array value"); }
    bool parse_error(std::size_t, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        return fail(ex.what());
    }

  private:
    bool put(std::string text, bool is_string) {
        if (depth_ != 1) return fail("expected an object");
        if (!fields.emplace(pending_, Value{is_string, std::move(text)}).second) {
            return fail("duplicate key \"" + pending_ + "\"");
        }
        return true;
    }
    bool fail(std::string why) {
        if (error.empty()) error = std::move(why);
        return false;
    }

    int depth_ = 0;
    std::string pending_;
};

class LineFields {
  public:
    LineFields(std::map<std::string, FlatObjectReader::Value> fields, std::size_t line)
        : fields_(std::move(fields)), line_(line) {}

    BigInt integer(const std::string& key) const {
        const auto& v = lookup(key);
        auto parsed = v.is_string ? std::nullopt : parse_decimal(v.text);
        if (!parsed) throw error("\"" + key + "\" is not an integer");
        return *parsed;
    }
    std::uint64_t small(const std::string& key) const {
        const BigInt v = integer(key);
        if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
            throw error("\"" + key + "\" out of range");
        }
        return static_cast<std::uint64_t>(v);
    }
    std::string text(const std::string& key) const {
        const auto& v = lookup(key);
        if (!v.is_string) throw error("\"" + key + "\" is not a string");
        return v.text;
    }
    bool has(const std::string& key) const { return fields_.count(key) != 0; }
    void expect_keys(std::size_t count) const {
        if (fields_.size() != count) throw error("unexpected keys");
    }
    FormatError error(const std::string& what) const {
        return FormatError("line " + std::to_string(line_) + ": " + what);
    }

  private:
    const FlatObjectReader::Value& lookup(const std::string& key) const {
        auto it = fields_.find(key);
        if (it == fields_.end()) throw error("missing \"" + key + "\"");
        return it->second;
    }

    std::map<std::string, FlatObjectReader::Value> fields_;
    std::size_t line_;
};

Radix radix_of(const LineFields& f) {
    const auto b = f.small("base");
    if (b < 2) throw f.error("base must be at least 2");
    return Radix(b);
}

}  // namespace

Catalog parse_jsonl(std::istream& in) {
    Catalog catalog;
    bool have_radix = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        FlatObjectReader reader;
        if (!json::sax_parse(line, &reader)) {
            throw FormatError("line " + std::to_string(line_no) + ": " + reader.error);
        }
        const LineFields f(std::move(reader.fields), line_no);

        if (f.has("type")) {
            if (f.text("type") != "infinite_family") throw f.error("unknown type");
            f.expect_keys(8);
            InfiniteFamily fam{radix_of(f),
                               f.integer("denominator"),
                               DigitPosition(f.small("num_pos")),
                               DigitPosition(f.small("den_pos")),
                               f.small("digit"),
                               f.integer("stride")};
            const CancellationQuery q{fam.radix, fam.denominator, fam.num_pos, fam.den_pos};
            SolutionSet expected;
            try {
                expected = solve_fixed_denominator(q);
            } catch (const std::exception& ex) {
                throw f.error(std::string("family does not re-verify: ") + ex.what());
            }
            const auto* family = std::get_if<InfiniteFamily>(&expected);
            if (!family || !(*family == fam) || f.integer("first") != fam.member(1)) {
                throw f.error("family does not re-verify");
            }
            if (!have_radix) catalog.header.radix = fam.radix;
            have_radix = true;
            catalog.families.push_back(std::move(fam));
            continue;
        }

        f.expect_keys(9);
        const Radix r = radix_of(f);
        const auto cls = parse_class(f.text("class"));
        if (!cls) throw f.error("unknown class");
        CancellationRecord rec{r,
                               f.integer("numerator"),
                               f.integer("denominator"),
                               DigitPosition(f.small("num_pos")),
                               DigitPosition(f.small("den_pos")),
                               f.small("digit"),
                               f.integer("reduced_num"),
                               f.integer("reduced_den"),
                               *cls};
        const Verdict v = verify_cancellation(r, rec.numerator, rec.denominator, rec.num_pos,
                                              rec.den_pos);
        if (!v.valid) throw f.error("record does not re-verify: " + v.reason);
        if (!(*v.record == rec)) throw f.error("record fields disagree with re-verification");
        if (!have_radix) catalog.header.radix = r;
        have_radix = true;
        catalog.records.push_back(std::move(rec));
    }
    return catalog;
}

}  // namespace anomalous
