#include "ifss/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace ifss {

const IFSoftSet* DatasetDocument::find(std::string_view name) const {
  for (const auto& set : sets) {
    if (set.label() == name) return &set;
  }
  return nullptr;
}

bool operator==(const DatasetDocument& a, const DatasetDocument& b) {
  if (!(*a.universe == *b.universe) || !(*a.parameters == *b.parameters)) return false;
  if (a.sets.size() != b.sets.size()) return false;
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    if (a.sets[i].label() != b.sets[i].label() || !(a.sets[i] == b.sets[i])) return false;
  }
  return true;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    tokens.push_back(Token{std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_') return false;
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

Rational parse_number(const Token& token, int line) {
  std::string_view text = token.text;
  std::size_t point = text.find('.');
  if (point != std::string_view::npos && text.size() - point - 1 > 6) {
    throw ParseError(line, token.column,
                     "number '" + token.text + "' has more than six fractional digits");
  }
  try {
    return Rational::from_decimal(text);
  } catch (const std::exception&) {
    throw ParseError(line, token.column, "expected a number, got '" + token.text + "'");
  }
}

std::vector<std::string> parse_name_list(const std::vector<Token>& tokens, std::size_t from,
                                         int line, const char* what) {
  std::vector<std::string> names;
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    if (!is_identifier(tokens[i].text)) {
      throw ParseError(line, tokens[i].column, std::string("invalid identifier '") + tokens[i].text + "'");
    }
    names.push_back(tokens[i].text);
  }
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw ParseError(line, tokens[from].column, std::string(what) + ": duplicate name '" + name + "'");
    }
  }
  return names;
}

struct SetBlock {
  std::string label;
  bool unchecked = false;
  int header_line = 0;
  std::vector<std::string> support;
  std::vector<CellAssignment> cells;
};

}  // namespace

DatasetDocument parse_dataset(std::string_view text) {
  std::vector<std::string> universe_names;
  std::vector<std::string> parameter_names;
  bool have_universe = false;
  bool have_parameters = false;

  std::vector<SetBlock> blocks;
  SetBlock* open_block = nullptr;
  bool support_seen = false;
  std::unordered_set<std::string> set_names;

  std::istringstream stream{std::string(text)};
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    if (!raw_line.empty() && raw_line.back() == '\r') raw_line.pop_back();
    auto tokens = tokenize(raw_line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].text;

    if (head == "universe" || head == "parameters") {
      if (open_block) throw ParseError(line_no, tokens[0].column, "declaration inside a set block");
      bool& have = head == "universe" ? have_universe : have_parameters;
      if (have) throw ParseError(line_no, tokens[0].column, "duplicate " + head + " declaration");
      if (tokens.size() < 2) throw ParseError(line_no, tokens[0].column, head + " needs at least one name");
      auto names = parse_name_list(tokens, 1, line_no, head.c_str());
      (head == "universe" ? universe_names : parameter_names) = std::move(names);
      have = true;
      continue;
    }

    if (head == "set") {
      if (open_block) throw ParseError(line_no, tokens[0].column, "missing 'end' before new set");
      if (!have_universe || !have_parameters) {
        throw ParseError(line_no, tokens[0].column, "sets must come after the universe and parameters");
      }
      if (tokens.size() < 2 || !is_identifier(tokens[1].text)) {
        throw ParseError(line_no, tokens[0].column, "set needs a name");
      }
      SetBlock block;
      block.label = tokens[1].text;
      block.header_line = line_no;
      if (tokens.size() == 3 && tokens[2].text == "unchecked") {
        block.unchecked = true;
      } else if (tokens.size() > 2) {
        throw ParseError(line_no, tokens[2].column, "unexpected token after set name (only 'unchecked' is allowed)");
      }
      if (!set_names.insert(block.label).second) {
        throw ParseError(line_no, tokens[1].column, "duplicate set name '" + block.label + "'");
      }
      blocks.push_back(std::move(block));
      open_block = &blocks.back();
      support_seen = false;
      continue;
    }

    if (head == "support") {
      if (!open_block) throw ParseError(line_no, tokens[0].column, "'support' outside a set block");
      if (support_seen) throw ParseError(line_no, tokens[0].column, "duplicate support line");
      if (!open_block->cells.empty()) {
        throw ParseError(line_no, tokens[0].column, "support must come before the rows");
      }
      open_block->support = parse_name_list(tokens, 1, line_no, "support");
      for (const auto& name : open_block->support) {
        if (std::find(parameter_names.begin(), parameter_names.end(), name) == parameter_names.end()) {
          throw ParseError(line_no, tokens[0].column,
                           "set '" + open_block->label + "': unknown support parameter '" + name + "'");
        }
      }
      support_seen = true;
      continue;
    }

    if (head == "end") {
      if (!open_block) throw ParseError(line_no, tokens[0].column, "'end' outside a set block");
      if (tokens.size() > 1) throw ParseError(line_no, tokens[1].column, "unexpected token after 'end'");
      if (!support_seen) {
        throw ParseError(line_no, tokens[0].column, "set '" + open_block->label + "' has no support line");
      }
      open_block = nullptr;
      continue;
    }

    // Anything else must be a row: "param: elem mu nu [elem mu nu]...".
    if (!open_block) throw ParseError(line_no, tokens[0].column, "unexpected token '" + head + "'");
    if (!support_seen) {
      throw ParseError(line_no, tokens[0].column, "set '" + open_block->label + "' has no support line");
    }
    std::string param = head;
    std::size_t first_entry = 1;
    if (!param.empty() && param.back() == ':') {
      param.pop_back();
    } else if (tokens.size() >= 2 && tokens[1].text == ":") {
      first_entry = 2;
    } else {
      throw ParseError(line_no, tokens[0].column, "expected 'parameter:' to start a row");
    }
    if (!is_identifier(param)) {
      throw ParseError(line_no, tokens[0].column, "invalid parameter name '" + param + "'");
    }
    if (std::find(parameter_names.begin(), parameter_names.end(), param) == parameter_names.end()) {
      throw ParseError(line_no, tokens[0].column,
                       "set '" + open_block->label + "': unknown parameter '" + param + "'");
    }
    if (std::find(open_block->support.begin(), open_block->support.end(), param) ==
        open_block->support.end()) {
      throw ParseError(line_no, tokens[0].column,
                       "set '" + open_block->label + "': row for parameter '" + param +
                           "' outside the support");
    }
    for (const auto& cell : open_block->cells) {
      if (cell.parameter == param) {
        throw ParseError(line_no, tokens[0].column,
                         "set '" + open_block->label + "': duplicate row for parameter '" + param + "'");
      }
    }
    std::size_t rest = tokens.size() - first_entry;
    if (rest == 0 || rest % 3 != 0) {
      throw ParseError(line_no, tokens[0].column,
                       "row must hold (element mu nu) triples, got " + std::to_string(rest) + " tokens");
    }
    std::unordered_set<std::string> row_elements;
    for (std::size_t i = first_entry; i < tokens.size(); i += 3) {
      const Token& elem_tok = tokens[i];
      if (!is_identifier(elem_tok.text)) {
        throw ParseError(line_no, elem_tok.column, "invalid element name '" + elem_tok.text + "'");
      }
      if (std::find(universe_names.begin(), universe_names.end(), elem_tok.text) == universe_names.end()) {
        throw ParseError(line_no, elem_tok.column,
                         "set '" + open_block->label + "': unknown element '" + elem_tok.text + "'");
      }
      if (!row_elements.insert(elem_tok.text).second) {
        throw ParseError(line_no, elem_tok.column,
                         "set '" + open_block->label + "': duplicate element '" + elem_tok.text +
                             "' in row '" + param + "'");
      }
      Rational mu = parse_number(tokens[i + 1], line_no);
      Rational nu = parse_number(tokens[i + 2], line_no);
      IFValue value(mu, nu);
      if (!open_block->unchecked) {
        const Rational zero(0);
        const Rational one(1);
        std::string where = "set '" + open_block->label + "', cell (" + param + ", " + elem_tok.text + "): ";
        if (mu < zero || mu > one) {
          throw ParseError(line_no, tokens[i + 1].column, where + "mu out of [0,1]");
        }
        if (nu < zero || nu > one) {
          throw ParseError(line_no, tokens[i + 2].column, where + "nu out of [0,1]");
        }
        if (mu + nu > one) {
          throw ParseError(line_no, tokens[i + 1].column,
                           where + "mu+nu>1 (mu=" + to_decimal6(mu) + ", nu=" + to_decimal6(nu) + ")");
        }
      }
      open_block->cells.push_back(CellAssignment{param, elem_tok.text, value});
    }
  }
  if (open_block) {
    throw ParseError(line_no, 1, "set '" + open_block->label + "' is missing its 'end'");
  }
  if (!have_universe) throw ParseError(line_no, 1, "missing universe declaration");
  if (!have_parameters) throw ParseError(line_no, 1, "missing parameters declaration");

  DatasetDocument doc;
  doc.universe = std::make_shared<Universe>(universe_names);
  doc.parameters = std::make_shared<ParameterSet>(parameter_names);
  for (auto& block : blocks) {
    // Every name and cell was checked above; assemble without re-checking so
    // unchecked sets pass through unchanged.
    doc.sets.push_back(build_ifs_set(doc.universe, doc.parameters, block.support, block.cells,
                                     block.label, CellCheck::unchecked));
  }
  return doc;
}

std::string serialize_dataset(const DatasetDocument& doc) {
  std::ostringstream out;
  out << "universe";
  for (const auto& name : doc.universe->elements()) out << ' ' << name;
  out << "\nparameters";
  for (const auto& name : doc.parameters->parameters()) out << ' ' << name;
  out << '\n';
  for (const auto& set : doc.sets) {
    out << "\nset " << set.label();
    if (!validate(set).ok()) out << " unchecked";
    out << "\nsupport";
    for (const auto& name : set.support_names()) out << ' ' << name;
    out << '\n';
    for (std::size_t p : set.support()) {
      out << doc.parameters->parameter(p) << ':';
      for (std::size_t e = 0; e < doc.universe->size(); ++e) {
        const IFValue& v = set.value(p, e);
        out << (e == 0 ? " " : "  ") << doc.universe->element(e) << ' ' << to_decimal6(v.exact_mu())
            << ' ' << to_decimal6(v.exact_nu());
      }
      out << '\n';
    }
    out << "end\n";
  }
  return out.str();
}

DatasetDocument load_dataset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str());
}

}  // namespace ifss
