#include "fatcode/scheme_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace fatcode {

namespace {

Error at_line(ErrorKind kind, int line, const std::string& message) {
  return Error(kind, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string visible = line.substr(0, line.find('#'));
  std::istringstream in(visible);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

bool is_integer_literal(const std::string& tok) {
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

std::int64_t parse_integer(const std::string& tok, int line, const std::string& what) {
  if (!is_integer_literal(tok)) {
    throw at_line(ErrorKind::ParseError, line, what + " must be an integer, got '" + tok + "'");
  }
  try {
    return std::stoll(tok);
  } catch (const std::out_of_range&) {
    throw at_line(ErrorKind::TooLarge, line, what + " '" + tok + "' does not fit 64 bits");
  }
}

Scalar parse_coordinate(const std::string& tok, const FieldSpec& field, int line) {
  std::size_t slash = tok.find('/');
  if (slash == std::string::npos) {
    return Scalar::from_integer(parse_integer(tok, line, "coordinate"), field);
  }
  if (!field.is_rational()) {
    throw at_line(ErrorKind::ParseError, line,
                  "fractional coordinate '" + tok + "' needs the rational field");
  }
  std::string num = tok.substr(0, slash);
  std::string den = tok.substr(slash + 1);
  if (num.empty() || den.empty() || !is_integer_literal(num) || !is_integer_literal(den) ||
      den[0] == '-' || den[0] == '+') {
    throw at_line(ErrorKind::ParseError, line, "malformed rational '" + tok + "'");
  }
  std::int64_t d = parse_integer(den, line, "denominator");
  if (d == 0) {
    throw at_line(ErrorKind::ParseError, line, "zero denominator in '" + tok + "'");
  }
  return Scalar::from_rational(parse_integer(num, line, "numerator"), d);
}

}  // namespace

FatPointScheme parse_scheme_file(const std::string& text, bool merge_duplicates) {
  std::optional<FieldSpec> field;
  std::optional<int> ambient;
  std::vector<FatPoint> points;
  std::vector<int> point_lines;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "field") {
      if (field) throw at_line(ErrorKind::ParseError, line_no, "field declared twice");
      if (tokens.size() == 2 && tokens[1] == "rational") {
        field = FieldSpec::rationals();
      } else if (tokens.size() == 3 && tokens[1] == "prime") {
        std::int64_t p = parse_integer(tokens[2], line_no, "modulus");
        try {
          field = FieldSpec::prime(p);
        } catch (const Error& e) {
          throw at_line(e.kind(), line_no, e.what());
        }
      } else {
        throw at_line(ErrorKind::BadArity, line_no,
                      "expected 'field rational' or 'field prime <p>'");
      }
    } else if (head == "ambient") {
      if (ambient) throw at_line(ErrorKind::ParseError, line_no, "ambient declared twice");
      if (tokens.size() != 2) {
        throw at_line(ErrorKind::BadArity, line_no, "expected 'ambient <n>'");
      }
      std::int64_t n = parse_integer(tokens[1], line_no, "ambient dimension");
      if (n < 1 || n > 16) {
        throw at_line(ErrorKind::ParseError, line_no,
                      "ambient dimension must be between 1 and 16");
      }
      ambient = static_cast<int>(n);
    } else if (head == "point") {
      if (!field) throw at_line(ErrorKind::ParseError, line_no, "point before field directive");
      if (!ambient) throw at_line(ErrorKind::ParseError, line_no, "point before ambient directive");
      const std::size_t coords = static_cast<std::size_t>(*ambient) + 1;
      std::size_t expect = 1 + coords;
      bool has_mult = tokens.size() == expect + 2 && tokens[expect] == "mult";
      if (tokens.size() != expect && !has_mult) {
        throw at_line(ErrorKind::BadArity, line_no,
                      "expected 'point <c0> .. <c" + std::to_string(*ambient) +
                          "> [mult <m>]', got " + std::to_string(tokens.size() - 1) +
                          " arguments");
      }
      std::vector<Scalar> cs;
      for (std::size_t i = 0; i < coords; ++i) {
        cs.push_back(parse_coordinate(tokens[1 + i], *field, line_no));
      }
      int mult = 1;
      if (has_mult) {
        std::int64_t m = parse_integer(tokens[expect + 1], line_no, "multiplicity");
        if (m < 1) throw at_line(ErrorKind::ParseError, line_no, "multiplicity must be >= 1");
        if (m > 64) throw at_line(ErrorKind::TooLarge, line_no, "multiplicity above 64");
        mult = static_cast<int>(m);
      }
      ProjectivePoint p = [&] {
        try {
          return ProjectivePoint::from_coords(std::move(cs));
        } catch (const Error& e) {
          throw at_line(e.kind(), line_no, e.what());
        }
      }();
      bool merged = false;
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].point == p) {
          if (!merge_duplicates) {
            throw at_line(ErrorKind::DuplicatePoint, line_no,
                          "point repeats line " + std::to_string(point_lines[i]));
          }
          points[i].multiplicity = std::max(points[i].multiplicity, mult);
          merged = true;
          break;
        }
      }
      if (!merged) {
        points.push_back({std::move(p), mult});
        point_lines.push_back(line_no);
      }
    } else {
      throw at_line(ErrorKind::UnknownDirective, line_no, "unknown directive '" + head + "'");
    }
  }

  if (!field) throw Error(ErrorKind::ParseError, "missing field directive");
  if (!ambient) throw Error(ErrorKind::ParseError, "missing ambient directive");
  if (points.empty()) throw Error(ErrorKind::ParseError, "no points declared");
  return FatPointScheme::create(std::move(points));
}

FatPointScheme load_scheme_file(const std::string& path, bool merge_duplicates) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scheme_file(buffer.str(), merge_duplicates);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string serialize_scheme(const FatPointScheme& scheme) {
  std::ostringstream out;
  if (scheme.field().is_rational()) {
    out << "field rational\n";
  } else {
    out << "field prime " << scheme.field().p << "\n";
  }
  out << "ambient " << scheme.ambient_dim() << "\n";
  for (const FatPoint& fp : scheme.points()) {
    out << "point";
    for (const Scalar& c : fp.point.coords()) out << " " << c.str();
    if (fp.multiplicity != 1) out << " mult " << fp.multiplicity;
    out << "\n";
  }
  return out.str();
}

}  // namespace fatcode
