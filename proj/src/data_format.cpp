#include "c1cox/data_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "c1cox/error.hpp"

namespace c1cox {

namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorKind::ParseError, message);
}

class TomlReader {
 public:
  explicit TomlReader(const std::string& text) : text_(text) {}

  Json document() {
    Json out = Json::object();
    while (true) {
      skip_blank_lines();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] == '[') parse_error(where() + "tables are not supported");
      const std::string key = parse_key();
      skip_inline_space();
      expect('=');
      skip_inline_space();
      if (out.contains(key)) parse_error(where() + "duplicate key '" + key + "'");
      out[key] = parse_value();
      skip_inline_space();
      if (pos_ < text_.size() && text_[pos_] == '#') skip_comment();
      if (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '\r')
        parse_error(where() + "unexpected text after value");
    }
    return out;
  }

 private:
  std::string where() const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      if (text_[i] == '\n') ++line;
    return "line " + std::to_string(line) + ": ";
  }

  void skip_comment() {
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
  }

  void skip_inline_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  // whitespace, newlines and comments
  void skip_blank_lines() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        skip_comment();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      parse_error(where() + "expected '" + std::string(1, c) + "'");
    ++pos_;
  }

  std::string parse_key() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '-'))
      ++pos_;
    if (start == pos_) parse_error(where() + "expected a key");
    return text_.substr(start, pos_ - start);
  }

  Json parse_value() {
    if (pos_ >= text_.size()) parse_error(where() + "missing value");
    const char c = text_[pos_];
    if (c == '[') return parse_array();
    if (c == '"') return parse_string();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return parse_integer();
    parse_error(where() + "unsupported value");
  }

  Json parse_array() {
    expect('[');
    Json out = Json::array();
    while (true) {
      skip_blank_lines();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        return out;
      }
      out.push_back(parse_value());
      skip_blank_lines();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      skip_blank_lines();
      expect(']');
      return out;
    }
  }

  Json parse_string() {
    expect('"');
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') parse_error(where() + "unterminated string");
      const char c = text_[pos_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (pos_ >= text_.size()) parse_error(where() + "bad escape");
        const char e = text_[pos_++];
        if (e == '"' || e == '\\') {
          out += e;
        } else {
          parse_error(where() + "unsupported escape");
        }
      } else {
        out += c;
      }
    }
  }

  Json parse_integer() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
    std::string digits;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      if (text_[pos_] != '_') digits += text_[pos_];
      ++pos_;
    }
    if (digits.empty()) parse_error(where() + "expected an integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      parse_error(where() + "floating point values are not accepted");
    const bool negative = text_[start] == '-';
    Integer value(digits);
    if (negative) value = -value;
    if (!value.fits_slong_p()) return Json((negative ? "-" : "") + digits);
    return Json(value.get_si());
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

Integer to_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      parse_error(what + ": '" + j.get<std::string>() + "' is not an integer");
    return x;
  }
  parse_error(what + ": expected an integer");
}

Rational to_rational(const Json& j, const std::string& what) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(to_integer(j, what));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    Integer num, den(1);
    if (num.set_str(s.substr(0, slash), 10) != 0 ||
        (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0))
      parse_error(what + ": '" + s + "' is not a rational number p/q");
    if (den == 0) parse_error(what + ": zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  parse_error(what + ": expected an integer or a string \"p/q\"");
}

const Json& require_array(const Json& j, const std::string& what) {
  if (!j.is_array()) parse_error(what + ": expected an array");
  return j;
}

std::vector<IntVector> to_integer_rows(const Json& j, const std::string& what) {
  std::vector<IntVector> rows;
  for (const Json& row : require_array(j, what)) {
    IntVector v;
    for (const Json& x : require_array(row, what)) v.push_back(to_integer(x, what));
    rows.push_back(std::move(v));
  }
  return rows;
}

DataFile from_json(const Json& doc) {
  if (!doc.is_object()) parse_error("top level must be a table of keys");
  static const std::vector<std::string> known{"type", "blocks", "m", "A", "d", "phi"};
  for (const auto& [key, value] : doc.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      parse_error("unknown key '" + key + "'");
  for (const char* key : {"type", "blocks", "A"})
    if (!doc.contains(key)) parse_error(std::string("missing key '") + key + "'");

  DataFile out;
  const Integer type = to_integer(doc["type"], "type");
  if (type == 1) {
    out.data.type = DataType::Type1;
  } else if (type == 2) {
    out.data.type = DataType::Type2;
  } else {
    parse_error("type must be 1 or 2");
  }

  for (IntVector& block : to_integer_rows(doc["blocks"], "blocks"))
    out.data.blocks.push_back(std::move(block));

  if (doc.contains("m")) {
    const Integer m = to_integer(doc["m"], "m");
    if (m < 0 || !m.fits_ulong_p()) parse_error("m must be a nonnegative integer");
    out.data.m = m.get_ui();
  }

  const Json& a = require_array(doc["A"], "A");
  if (out.data.type == DataType::Type1) {
    std::vector<Rational> row;
    for (const Json& x : a) row.push_back(to_rational(x, "A"));
    out.data.A = {std::move(row)};
  } else {
    for (const Json& r : a) {
      std::vector<Rational> row;
      for (const Json& x : require_array(r, "A")) row.push_back(to_rational(x, "A"));
      out.data.A.push_back(std::move(row));
    }
  }

  if (doc.contains("d")) {
    const std::vector<IntVector> rows = to_integer_rows(doc["d"], "d");
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const IntVector& r : rows)
      if (r.size() != cols) parse_error("d: rows of different length");
    out.data.d = IntMatrix::from_rows(rows, cols);
  }

  if (doc.contains("phi")) {
    std::vector<std::vector<IntVector>> cones;
    for (const Json& cone : require_array(doc["phi"], "phi"))
      cones.push_back(to_integer_rows(cone, "phi"));
    out.phi = std::move(cones);
  }
  return out;
}

// ---- writers ----

std::string toml_integer(const Integer& x) {
  return x.fits_slong_p() ? x.get_str() : "\"" + x.get_str() + "\"";
}

std::string toml_row(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + toml_integer(v[i]);
  return out + "]";
}

std::string toml_rationals(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", \"" : "\"") + v[i].get_str() + "\"";
  return out + "]";
}

template <typename Rows, typename Fn>
std::string toml_list(const Rows& rows, Fn fn) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? ", " : "") + fn(rows[i]);
  return out + "]";
}

Json json_rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(json_rational(x));
  return out;
}

}  // namespace

Json parse_toml_subset(const std::string& text) { return TomlReader(text).document(); }

DataFile parse_data(const std::string& text, InputFormat format) {
  if (format == InputFormat::Toml) return from_json(parse_toml_subset(text));
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  return from_json(doc);
}

InputFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".json" ? InputFormat::Json : InputFormat::Toml;
}

DataFile read_data_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_data(buffer.str(), format_for(path));
}

std::string serialize(const DataFile& file, InputFormat format) {
  const C1Data& d = file.data;
  if (format == InputFormat::Json) {
    Json out;
    out["type"] = d.type == DataType::Type1 ? 1 : 2;
    Json blocks = Json::array();
    for (const auto& b : d.blocks) blocks.push_back(json_vector(b));
    out["blocks"] = std::move(blocks);
    out["m"] = d.m;
    if (d.type == DataType::Type1) {
      out["A"] = d.A.empty() ? Json::array() : json_rationals(d.A.front());
    } else {
      Json rows = Json::array();
      for (const auto& row : d.A) rows.push_back(json_rationals(row));
      out["A"] = std::move(rows);
    }
    if (d.d) out["d"] = json_matrix(*d.d);
    if (file.phi) {
      Json cones = Json::array();
      for (const auto& cone : *file.phi) {
        Json gens = Json::array();
        for (const IntVector& g : cone) gens.push_back(json_vector(g));
        cones.push_back(std::move(gens));
      }
      out["phi"] = std::move(cones);
    }
    return out.dump(2) + "\n";
  }

  std::string out;
  out += "type = " + std::string(d.type == DataType::Type1 ? "1" : "2") + "\n";
  out += "blocks = " + toml_list(d.blocks, toml_row) + "\n";
  out += "m = " + std::to_string(d.m) + "\n";
  if (d.type == DataType::Type1) {
    out += "A = " + toml_rationals(d.A.empty() ? std::vector<Rational>{} : d.A.front()) + "\n";
  } else {
    out += "A = " + toml_list(d.A, toml_rationals) + "\n";
  }
  if (d.d) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < d.d->rows(); ++i) rows.push_back(d.d->row(i));
    out += "d = " + toml_list(rows, toml_row) + "\n";
  }
  if (file.phi) {
    out += "phi = " + toml_list(*file.phi, [](const std::vector<IntVector>& cone) {
             return toml_list(cone, toml_row);
           }) + "\n";
  }
  return out;
}

Bunch file_bunch(const DataFile& file, std::size_t rank) {
  if (!file.phi) return affine_bunch(rank);
  Bunch out{rank, {}};
  for (const auto& gens : *file.phi) {
    for (const IntVector& g : gens)
      if (g.size() != rank)
        throw Error(ErrorKind::MalformedData,
                    "phi generator " + to_string(g) + " does not live in the degree space of rank " +
                        std::to_string(rank));
    out.cones.push_back(Cone(rank, gens));
  }
  return out;
}

}  // namespace c1cox
