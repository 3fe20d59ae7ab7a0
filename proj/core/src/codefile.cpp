#include "flagcodes/codefile.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "flagcodes/channel.hpp"
#include "flagcodes/errors.hpp"

namespace flagcodes {

namespace {

constexpr std::string_view kMagic = "flagcode v1";

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      ++number;
      const auto s = strip(raw);
      if (!s.empty() && s.front() != '#') lines_.push_back({number, s});
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    last_ = number;
  }

  bool done() const { return next_ == lines_.size(); }
  const Line& peek() const { return lines_[next_]; }
  const Line& take(std::string_view what) {
    if (done()) throw ParseError(ErrorKind::SyntaxError, last_, "unexpected end of file, expected " + std::string(what));
    return lines_[next_++];
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_ = 0;
};

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
  throw ParseError(ErrorKind::SyntaxError, line, msg);
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    syntax(line, "invalid " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::size_t> parse_list(std::string_view tok, std::size_t line, std::string_view what) {
  std::vector<std::size_t> out;
  if (tok.empty()) syntax(line, "empty " + std::string(what));
  std::size_t pos = 0;
  while (true) {
    const auto comma = tok.find(',', pos);
    out.push_back(parse_uint(tok.substr(pos, comma == std::string_view::npos ? tok.size() - pos : comma - pos),
                             line, what));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Header {
  std::size_t line = 0;
  FieldPtr field;
  std::size_t ambient = 0;
  std::vector<std::size_t> dims;
  std::size_t count = 0;
};

Header read_header(LineReader& in, std::string_view dims_key) {
  const Line& magic = in.take("header");
  if (magic.text != kMagic) syntax(magic.number, "expected '" + std::string(kMagic) + "'");
  const Line& hl = in.take("parameter line");
  std::optional<std::uint64_t> q, n, count;
  std::optional<std::vector<std::size_t>> dims;
  for (auto tok : split_ws(hl.text)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) syntax(hl.number, "expected key=value, got '" + std::string(tok) + "'");
    const auto key = tok.substr(0, eq);
    const auto value = tok.substr(eq + 1);
    if (key == "q" && !q) {
      q = parse_uint(value, hl.number, "q");
    } else if (key == "n" && !n) {
      n = parse_uint(value, hl.number, "n");
    } else if (key == dims_key && !dims) {
      dims = parse_list(value, hl.number, dims_key);
    } else if (key == "flags" && !count) {
      count = parse_uint(value, hl.number, "flag count");
    } else {
      syntax(hl.number, "unexpected or repeated key '" + std::string(key) + "'");
    }
  }
  if (!q || !n || !dims || !count) {
    syntax(hl.number, "parameter line needs q, n, " + std::string(dims_key) + " and flags");
  }
  Header h;
  h.line = hl.number;
  if (*q > kMaxFieldOrder) {
    throw ParseError(ErrorKind::UnsupportedField, hl.number, "q=" + std::to_string(*q) + " is not supported");
  }
  try {
    h.field = make_field(static_cast<std::uint32_t>(*q));
  } catch (const Error& e) {
    throw ParseError(e.kind(), hl.number, e.what());
  }
  h.ambient = *n;
  h.dims = std::move(*dims);
  h.count = *count;
  if (h.count == 0) syntax(hl.number, "a code file needs at least one flag");
  return h;
}

// Returns true for the `levels` layout.
bool read_flag_header(LineReader& in, std::size_t expected_index, std::size_t& line_no) {
  const Line& l = in.take("flag header");
  line_no = l.number;
  const auto toks = split_ws(l.text);
  if (toks.size() < 2 || toks.size() > 3 || toks[0] != "flag") {
    syntax(l.number, "expected 'flag " + std::to_string(expected_index) + "'");
  }
  if (parse_uint(toks[1], l.number, "flag index") != expected_index) {
    syntax(l.number, "expected flag index " + std::to_string(expected_index));
  }
  if (toks.size() == 3 && toks[2] != "levels") {
    syntax(l.number, "unknown flag layout '" + std::string(toks[2]) + "'");
  }
  return toks.size() == 3;
}

Matrix read_rows(LineReader& in, const Header& h, std::size_t count) {
  Matrix m(h.field, 0, h.ambient);
  std::vector<Element> row(h.ambient);
  for (std::size_t r = 0; r < count; ++r) {
    const Line& l = in.take("matrix row");
    const auto toks = split_ws(l.text);
    if (toks.size() != h.ambient) {
      syntax(l.number, "expected " + std::to_string(h.ambient) + " entries, got " +
                           std::to_string(toks.size()));
    }
    for (std::size_t c = 0; c < h.ambient; ++c) {
      const auto v = parse_uint(toks[c], l.number, "element");
      if (v >= h.field->order()) {
        throw ParseError(ErrorKind::OutOfRange, l.number,
                         "element " + std::to_string(v) + " out of range for q=" +
                             std::to_string(h.field->order()));
      }
      row[c] = static_cast<Element>(v);
    }
    m.append_row(row);
  }
  return m;
}

// Re-raises domain errors from `body` as ParseErrors pinned to `line`.
template <typename F>
auto at_line(std::size_t line, const std::string& prefix, F&& body) {
  try {
    return body();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.kind(), line, prefix + e.what());
  }
}

template <typename F>
auto at_flag(std::size_t line, std::size_t index, F&& body) {
  return at_line(line, "flag " + std::to_string(index) + ": ", std::forward<F>(body));
}

void expect_end(LineReader& in) {
  if (!in.done()) syntax(in.peek().number, "trailing content after the last flag");
}

void write_row(std::ostringstream& out, std::span<const Element> row) {
  for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
  out << '\n';
}

void write_list(std::ostringstream& out, const std::vector<std::size_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
}

}  // namespace

FlagCode parse_code(std::string_view text) {
  LineReader in(text);
  const Header h = read_header(in, "type");
  const TypeVector type = at_line(h.line, "", [&] { return TypeVector(h.dims, h.ambient); });
  std::vector<Flag> flags;
  for (std::size_t k = 1; k <= h.count; ++k) {
    std::size_t line = 0;
    if (read_flag_header(in, k, line)) {
      std::vector<Matrix> blocks;
      for (std::size_t t : type.dims()) blocks.push_back(read_rows(in, h, t));
      flags.push_back(at_flag(line, k, [&] {
        std::vector<Subspace> levels;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          if (blocks[i].rows() != type[i] || rref(blocks[i]).rank != type[i]) {
            throw Error(ErrorKind::DimensionMismatch,
                        "level " + std::to_string(i + 1) + " rows are not independent");
          }
          levels.push_back(Subspace::span(blocks[i]));
        }
        return Flag::make(type, std::move(levels));
      }));
    } else {
      const Matrix gens = read_rows(in, h, type.top());
      flags.push_back(at_flag(line, k, [&] { return Flag::from_generators(type, gens); }));
    }
  }
  expect_end(in);
  return FlagCode(std::move(flags));
}

std::string serialize_code(const FlagCode& code) {
  std::ostringstream out;
  out << kMagic << '\n';
  out << "q=" << code.field()->order() << " n=" << code.ambient() << " type=";
  write_list(out, code.type().dims());
  out << " flags=" << code.size() << '\n';
  for (std::size_t k = 0; k < code.size(); ++k) {
    out << "flag " << k + 1 << '\n';
    const Matrix gens = nested_generator_matrix(code[k]);
    for (std::size_t r = 0; r < gens.rows(); ++r) write_row(out, gens.row(r));
  }
  return out.str();
}

std::vector<StutteringFlag> parse_received(std::string_view text) {
  LineReader in(text);
  const Header h = read_header(in, "rows");
  std::vector<StutteringFlag> out;
  for (std::size_t k = 1; k <= h.count; ++k) {
    std::size_t line = 0;
    if (read_flag_header(in, k, line)) syntax(line, "received flags do not take a layout keyword");
    std::vector<Matrix> blocks;
    for (std::size_t d : h.dims) blocks.push_back(read_rows(in, h, d));
    out.push_back(at_flag(line, k, [&] {
      std::vector<Subspace> levels;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        levels.push_back(Subspace::span(blocks[i]));
        if (levels.back().dim() != h.dims[i]) {
          throw Error(ErrorKind::DimensionMismatch,
                      "level " + std::to_string(i + 1) + " rows are not independent");
        }
      }
      return StutteringFlag(std::move(levels));
    }));
  }
  expect_end(in);
  return out;
}

std::string serialize_received(std::span<const StutteringFlag> received) {
  if (received.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to serialize");
  const auto dims = received.front().dims();
  for (const auto& x : received) {
    if (x.dims() != dims) {
      throw Error(ErrorKind::DimensionMismatch, "received flags in one file must share their dimensions");
    }
  }
  std::ostringstream out;
  out << kMagic << '\n';
  out << "q=" << received.front().field()->order() << " n=" << received.front().ambient() << " rows=";
  write_list(out, dims);
  out << " flags=" << received.size() << '\n';
  for (std::size_t k = 0; k < received.size(); ++k) {
    out << "flag " << k + 1 << '\n';
    for (const auto& level : received[k].levels()) {
      for (std::size_t r = 0; r < level.dim(); ++r) write_row(out, level.basis().row(r));
    }
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  return buf.str();
}

FlagCode load_code(const std::filesystem::path& path) { return parse_code(read_file(path)); }

std::vector<StutteringFlag> load_received(const std::filesystem::path& path) {
  return parse_received(read_file(path));
}

}  // namespace flagcodes
