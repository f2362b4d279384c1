#include "lefkappa/dataset.hpp"

#include <charconv>
#include <deque>
#include <map>
#include <sstream>

#include "lefkappa/error.hpp"

namespace lefkappa {

std::string to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::Fibration: return "fibration";
    case RecordKind::Pencil: return "pencil";
    case RecordKind::Triple: return "triple";
    case RecordKind::Elliptic: return "elliptic";
  }
  return "?";
}

RecordKind DatasetRecord::kind() const {
  return static_cast<RecordKind>(payload.index());
}

std::string Diagnostic::to_string() const {
  return "line " + std::to_string(line) + ": " + message;
}

namespace {

// Thrown inside a line parse and turned into a Diagnostic.
struct LineError {
  std::string token;
  std::string message;
};

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '[') ++depth;
    if (c == ']' && depth > 0) --depth;
    if ((c == ' ' || c == '\t') && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else if (!((c == ' ' || c == '\t') && depth > 0)) {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw LineError{cur, "unbalanced '[' in list value"};
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') return std::nullopt;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

class Fields {
 public:
  Fields(std::map<std::string, std::string> kv, const std::string& kind)
      : kv_(std::move(kv)), kind_(kind) {}

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::int64_t integer(const std::string& key, std::int64_t min) {
    const std::string& raw = require(key);
    auto v = parse_int(raw);
    if (!v) throw LineError{raw, "expected integer for " + key + ", got '" + raw + "'"};
    if (*v < min)
      throw LineError{raw, "expected integer >= " + std::to_string(min) + " for " + key +
                               ", got " + raw};
    return *v;
  }

  std::int64_t integer(const std::string& key) {
    const std::string& raw = require(key);
    auto v = parse_int(raw);
    if (!v) throw LineError{raw, "expected integer for " + key + ", got '" + raw + "'"};
    return *v;
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const std::string& raw = take(key);
    if (raw == "true") return true;
    if (raw == "false") return false;
    throw LineError{raw, "expected true or false for " + key + ", got '" + raw + "'"};
  }

  std::vector<std::int64_t> list(const std::string& key) {
    if (!has(key)) return {};
    const std::string raw = take(key);
    if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']')
      throw LineError{raw, "expected bracketed list like [1,0] for " + key + ", got '" + raw + "'"};
    std::vector<std::int64_t> out;
    const std::string body = raw.substr(1, raw.size() - 2);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto v = parse_int(item);
      if (!v || *v < 0)
        throw LineError{raw, "expected nonnegative integers in " + key + ", got '" + item + "'"};
      out.push_back(*v);
    }
    if (body.back() == ',') throw LineError{raw, "trailing ',' in " + key};
    return out;
  }

  std::optional<std::string> optional_string(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return take(key);
  }

  const std::string& require(const std::string& key) {
    if (!has(key)) throw LineError{kind_, "missing required key " + key + " for " + kind_};
    return take(key);
  }

  void finish() const {
    if (!kv_.empty()) {
      const auto& [k, v] = *kv_.begin();
      throw LineError{k, "unknown key '" + k + "' for " + kind_};
    }
  }

 private:
  const std::string& take(const std::string& key) {
    auto node = kv_.extract(key);
    taken_.push_back(std::move(node.mapped()));
    return taken_.back();
  }

  std::map<std::string, std::string> kv_;
  std::string kind_;
  std::deque<std::string> taken_;
};

std::optional<std::string> take_id(Fields& f) {
  auto id = f.optional_string("id");
  if (id && id->empty()) throw LineError{"id=", "id must not be empty"};
  return id;
}

DatasetRecord parse_line(const std::vector<std::string>& tokens) {
  const std::string& kind = tokens.front();
  if (kind != "fibration" && kind != "pencil" && kind != "triple" && kind != "elliptic")
    throw LineError{kind, "unknown record kind '" + kind +
                              "', expected fibration, pencil, triple or elliptic"};

  std::map<std::string, std::string> kv;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw LineError{tok, "expected key=value, got '" + tok + "'"};
    std::string key = tok.substr(0, eq);
    if (kv.count(key)) throw LineError{tok, "duplicate key '" + key + "'"};
    kv.emplace(std::move(key), tok.substr(eq + 1));
  }
  Fields f(std::move(kv), kind);

  DatasetRecord rec;
  rec.id = take_id(f);
  if (kind == "fibration") {
    FibrationData d;
    d.g = f.integer("g", 0);
    d.h = f.integer("h", 0);
    d.nonseparating = f.integer("a", 0);
    auto s = f.list("s");
    const auto width = static_cast<std::size_t>(d.g / 2);
    if (s.size() > width)
      throw LineError{"s", "s has " + std::to_string(s.size()) + " entries but g=" +
                               std::to_string(d.g) + " allows at most " + std::to_string(width)};
    s.resize(width, 0);
    d.separating = std::move(s);
    d.hyperelliptic = f.boolean("hyperelliptic", false);
    d.spin = f.boolean("spin", false);
    d.complex = f.boolean("complex", false);
    d.minimal = f.boolean("minimal", true);
    rec.payload = std::move(d);
  } else if (kind == "pencil") {
    PencilEntry p;
    p.data.k = f.integer("k", 0);
    p.data.A = f.integer("A", 1);
    p.data.B = f.integer("B", 0);
    p.data.chi = f.integer("chi");
    p.data.sigma = f.integer("sigma");
    if (f.has("kdh")) {
      p.data.k_dot_h = f.integer("kdh");
      p.k_dot_h_given = true;
      if ((p.data.A + p.data.k_dot_h) % 2 != 0)
        throw LineError{"kdh", "A + kdh must be even"};
    } else {
      p.data.k_dot_h = canonical_dot_h(p.data.k, p.data.A);
    }
    p.minimal = f.boolean("minimal", true);
    if (auto m = f.optional_string("mode")) {
      p.mode = parse_convention_mode(*m);
      if (!p.mode) throw LineError{*m, "expected euler or paper-literal for mode, got '" + *m + "'"};
    }
    rec.payload = p;
  } else if (kind == "triple") {
    Triple t;
    t.g = f.integer("g", 0);
    t.h = f.integer("h", 0);
    t.n = f.integer("n", 0);
    rec.payload = t;
  } else {
    const std::string ekind = f.require("kind");
    if (ekind == "torusbundle") {
      rec.payload = EllipticDescriptor{TorusBundleOverGenus{f.integer("h", 0)}};
    } else if (ekind == "enh") {
      EnH e;
      e.n = f.integer("n", 1);
      e.h = f.integer("h", 0);
      rec.payload = EllipticDescriptor{e};
    } else {
      throw LineError{ekind, "expected torusbundle or enh for kind, got '" + ekind + "'"};
    }
  }
  f.finish();
  return rec;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void check_format_header(std::string_view comment, int line, std::vector<Diagnostic>& out) {
  constexpr std::string_view tag = "lefkappa-format:";
  auto body = trim(comment.substr(1));
  if (body.substr(0, tag.size()) != tag) return;
  const auto version = trim(body.substr(tag.size()));
  auto v = parse_int(version);
  if (!v || *v != kDatasetFormatVersion)
    out.push_back({line, std::string(version),
                   "unsupported format version '" + std::string(version) + "', expected " +
                       std::to_string(kDatasetFormatVersion)});
}

}  // namespace

ParseResult parse_dataset(std::string_view text) {
  ParseResult result;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      check_format_header(line, line_no, result.diagnostics);
      continue;
    }
    try {
      auto rec = parse_line(tokenize(line));
      rec.source_line = line_no;
      result.records.push_back(std::move(rec));
    } catch (const LineError& e) {
      result.diagnostics.push_back({line_no, e.token, e.message});
    } catch (const Error& e) {
      result.diagnostics.push_back({line_no, std::string(line), e.what()});
    }
  }
  return result;
}

namespace {

std::string join_list(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

struct InputsFormatter {
  std::string operator()(const FibrationData& d) const {
    std::string s = "g=" + std::to_string(d.g) + " h=" + std::to_string(d.h) +
                    " a=" + std::to_string(d.nonseparating) + " s=" + join_list(d.separating);
    if (d.hyperelliptic) s += " hyperelliptic=true";
    if (d.spin) s += " spin=true";
    if (d.complex) s += " complex=true";
    if (!d.minimal) s += " minimal=false";
    return s;
  }
  std::string operator()(const PencilEntry& p) const {
    const auto& d = p.data;
    std::string s = "k=" + std::to_string(d.k) + " A=" + std::to_string(d.A) +
                    " B=" + std::to_string(d.B) + " chi=" + std::to_string(d.chi) +
                    " sigma=" + std::to_string(d.sigma);
    if (p.k_dot_h_given) s += " kdh=" + std::to_string(d.k_dot_h);
    if (!p.minimal) s += " minimal=false";
    if (p.mode) s += " mode=" + to_string(*p.mode);
    return s;
  }
  std::string operator()(const Triple& t) const {
    return "g=" + std::to_string(t.g) + " h=" + std::to_string(t.h) + " n=" + std::to_string(t.n);
  }
  std::string operator()(const EllipticDescriptor& e) const {
    if (const auto* tb = std::get_if<TorusBundleOverGenus>(&e))
      return "kind=torusbundle h=" + std::to_string(tb->h);
    const auto& x = std::get<EnH>(e);
    return "kind=enh n=" + std::to_string(x.n) + " h=" + std::to_string(x.h);
  }
};

}  // namespace

std::string format_inputs(const DatasetRecord& record) {
  return std::visit(InputsFormatter{}, record.payload);
}

std::string format_record(const DatasetRecord& record) {
  std::string s = to_string(record.kind());
  if (record.id) s += " id=" + *record.id;
  return s + " " + format_inputs(record);
}

}  // namespace lefkappa
