#include "finalg/format.hpp"

#include <sstream>

namespace finalg {
namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

// Line-oriented: table shapes are detected from the line structure, so
// tokens keep their physical line. '#' comments run to end of line.
struct Lines {
  std::vector<std::vector<Token>> rows;  // one entry per physical line

  explicit Lines(std::string_view text) {
    int lineno = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
      std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      std::vector<Token> toks;
      std::size_t i = 0;
      while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])))
          ++i;
        toks.push_back(Token{std::string(line.substr(start, i - start)),
                             lineno, static_cast<int>(start + 1)});
      }
      rows.push_back(std::move(toks));
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
      ++lineno;
    }
  }
};

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
  fail("parse-error",
       "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(text) {}

  std::vector<Structure> run() {
    std::vector<Structure> out;
    skip_blank();
    while (row_ < lines_.rows.size()) {
      out.push_back(parse_structure());
      skip_blank();
    }
    return out;
  }

 private:
  Lines lines_;
  std::size_t row_ = 0;

  const std::vector<Token>* current() const {
    return row_ < lines_.rows.size() ? &lines_.rows[row_] : nullptr;
  }

  void skip_blank() {
    while (row_ < lines_.rows.size() && lines_.rows[row_].empty()) ++row_;
  }

  int line_no() const {
    return row_ < lines_.rows.size() ? static_cast<int>(row_) + 1
                                     : static_cast<int>(lines_.rows.size());
  }

  std::vector<Token> take_row(const char* context) {
    if (row_ >= lines_.rows.size())
      parse_fail(line_no(), 1, std::string("unexpected end of input in ") +
                                   context);
    return lines_.rows[row_++];
  }

  // Table rows must be consecutive non-blank lines.
  std::vector<Token> take_table_row(const Structure& s, const char* opname) {
    if (row_ >= lines_.rows.size() || lines_.rows[row_].empty())
      parse_fail(line_no(), 1,
                 std::string("table for op '") + opname + "' ends early");
    return lines_.rows[row_++];
  }

  int element_index(const Structure& s, const Token& tok) {
    auto idx = s.carrier.index_of(tok.text);
    if (!idx)
      fail("undeclared-element", "line " + std::to_string(tok.line) + ":" +
                                     std::to_string(tok.col) + ": '" +
                                     tok.text + "'");
    return *idx;
  }

  Structure parse_structure() {
    Structure s;
    {
      auto row = take_row("structure header");
      if (row.size() != 2 || row[0].text != "structure")
        parse_fail(row[0].line, row[0].col, "expected 'structure <ident>'");
      s.name = row[1].text;
    }
    skip_blank();
    {
      auto row = take_row("elements");
      if (row.empty() || row[0].text != "elements" || row.size() < 2)
        parse_fail(line_no(), 1, "expected 'elements <tok> ...'");
      for (std::size_t i = 1; i < row.size(); ++i)
        s.carrier.names.push_back(row[i].text);
    }
    const int n = s.order();

    for (;;) {
      skip_blank();
      auto row = take_row("structure body");
      const Token& head = row[0];
      if (head.text == "end") {
        if (row.size() != 1) parse_fail(head.line, head.col, "junk after 'end'");
        break;
      }
      if (head.text == "op") {
        if (row.size() != 4 || row[2].text != "arity")
          parse_fail(head.line, head.col, "expected 'op <ident> arity <k>'");
        const std::string opname = row[1].text;
        if (s.ops.count(opname))
          parse_fail(head.line, head.col, "op '" + opname + "' declared twice");
        int arity = 0;
        if (row[3].text == "1")
          arity = 1;
        else if (row[3].text == "2")
          arity = 2;
        else if (row[3].text == "3")
          arity = 3;
        else
          parse_fail(row[3].line, row[3].col, "arity must be 1, 2 or 3");
        s.ops[opname] = parse_table(s, opname, arity);
        continue;
      }
      if (head.text == "const") {
        if (row.size() != 4 || row[2].text != "=")
          parse_fail(head.line, head.col, "expected 'const <ident> = <tok>'");
        if (s.consts.count(row[1].text))
          parse_fail(head.line, head.col,
                     "constant '" + row[1].text + "' declared twice");
        s.consts[row[1].text] = element_index(s, row[3]);
        continue;
      }
      parse_fail(head.line, head.col, "unexpected token '" + head.text + "'");
    }
    validate(s);
    return s;
  }

  OpTable parse_table(Structure& s, const std::string& opname, int arity) {
    const int n = s.order();
    OpTable t = OpTable::filled(arity, n);
    auto read_line_into = [&](int base) {
      auto row = take_table_row(s, opname.c_str());
      if (static_cast<int>(row.size()) != n)
        fail("ragged-table", "line " + std::to_string(row[0].line) +
                                 ": op '" + opname + "' row has " +
                                 std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n));
      for (int j = 0; j < n; ++j)
        t.entries[static_cast<std::size_t>(base) + j] =
            element_index(s, row[j]);
    };
    if (arity == 1) {
      read_line_into(0);
    } else if (arity == 2) {
      for (int a = 0; a < n; ++a) read_line_into(a * n);
    } else {
      for (int a = 0; a < n; ++a) {
        if (a > 0) {
          // at least one blank line between blocks
          if (row_ >= lines_.rows.size() || !lines_.rows[row_].empty())
            fail("ragged-table",
                 "line " + std::to_string(line_no()) + ": op '" + opname +
                     "' expects a blank line between arity-3 blocks");
          skip_blank();
        }
        for (int b = 0; b < n; ++b) read_line_into((a * n + b) * n);
      }
    }
    return t;
  }
};

}  // namespace

std::vector<Structure> parse_structures(std::string_view text) {
  return Parser(text).run();
}

std::string serialize(const Structure& s) {
  std::ostringstream out;
  out << "structure " << s.name << "\n";
  out << "elements";
  for (const auto& nm : s.carrier.names) out << " " << nm;
  out << "\n";
  const int n = s.order();
  for (const auto& [opname, t] : s.ops) {
    out << "op " << opname << " arity " << t.arity << "\n";
    auto row = [&](int base) {
      for (int j = 0; j < n; ++j)
        out << (j ? " " : "")
            << s.carrier.names[static_cast<std::size_t>(
                   t.entries[static_cast<std::size_t>(base) + j])];
      out << "\n";
    };
    if (t.arity == 1) {
      row(0);
    } else if (t.arity == 2) {
      for (int a = 0; a < n; ++a) row(a * n);
    } else {
      for (int a = 0; a < n; ++a) {
        if (a > 0) out << "\n";
        for (int b = 0; b < n; ++b) row((a * n + b) * n);
      }
    }
  }
  for (const auto& [cname, v] : s.consts)
    out << "const " << cname << " = "
        << s.carrier.names[static_cast<std::size_t>(v)] << "\n";
  out << "end\n";
  return out.str();
}

std::string serialize(std::span<const Structure> structures) {
  std::string out;
  for (std::size_t i = 0; i < structures.size(); ++i) {
    if (i) out += "\n";
    out += serialize(structures[i]);
  }
  return out;
}

const Structure& select_structure(const std::vector<Structure>& parsed,
                                  std::string_view fragment,
                                  std::string_view origin) {
  if (parsed.empty())
    fail("parse-error", std::string(origin) + ": no structures");
  if (fragment.empty()) {
    if (parsed.size() > 1)
      fail("parse-error", std::string(origin) +
                              " holds several structures; a #name selector "
                              "is required");
    return parsed.front();
  }
  for (const auto& s : parsed)
    if (s.name == fragment) return s;
  fail("parse-error", std::string(origin) + ": no structure named '" +
                          std::string(fragment) + "'");
}

}  // namespace finalg
